#include "flagdom/weyl.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace flagdom {

namespace {

std::vector<int> sign_key(const std::vector<int> &e) {
    std::vector<int> k;
    k.reserve(e.size() * 2);
    for (int x : e) k.push_back(std::abs(x));
    for (int x : e) k.push_back(x < 0 ? 1 : 0);
    return k;
}

} // namespace

bool SignedPerm::operator<(const SignedPerm &o) const {
    if (fam != o.fam) return fam < o.fam;
    if (e.size() != o.e.size()) return e.size() < o.e.size();
    return sign_key(e) < sign_key(o.e);
}

int SignedPerm::negatives() const {
    return static_cast<int>(std::count_if(e.begin(), e.end(), [](int x) { return x < 0; }));
}

std::string SignedPerm::str() const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s;
}

void validate(const SignedPerm &w) {
    const int n = w.n();
    if (n < 1) throw ParseError("empty permutation");
    std::vector<bool> seen(n + 1, false);
    for (int x : w.e) {
        int a = std::abs(x);
        if (x == 0 || a > n || seen[a])
            throw ParseError("entries are not a signed permutation of 1.." + std::to_string(n));
        seen[a] = true;
    }
    if (w.fam == Family::EvenSign && w.negatives() % 2)
        throw ParseError("odd number of negative entries in an even-sign group");
}

SignedPerm parse_perm(const std::string &text, Family fam) {
    // comma separated, or whitespace separated when there is no comma
    const char sep = text.find(',') != std::string::npos ? ',' : ' ';
    std::vector<std::string> toks;
    std::istringstream in(text);
    for (std::string tok; std::getline(in, tok, sep);) {
        auto a = tok.find_first_not_of(" \t"), b = tok.find_last_not_of(" \t");
        tok = a == std::string::npos ? "" : tok.substr(a, b - a + 1);
        if (tok.empty() && sep == ' ') continue;
        toks.push_back(tok);
    }
    if (sep == ',' && !text.empty() && text.back() == ',') toks.push_back("");
    SignedPerm w;
    w.fam = fam;
    for (const auto &tok : toks) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            throw ParseError("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'");
        w.e.push_back(v);
    }
    validate(w);
    return w;
}

SignedPerm parse_perm(const std::string &text, int n, Family fam) {
    SignedPerm w = parse_perm(text, fam);
    if (w.n() != n)
        throw ParseError("expected " + std::to_string(n) + " entries, got " + std::to_string(w.n()));
    return w;
}

SignedPerm identity(int n, Family fam) {
    SignedPerm w;
    w.fam = fam;
    w.e.resize(n);
    std::iota(w.e.begin(), w.e.end(), 1);
    return w;
}

SignedPerm compose(const SignedPerm &u, const SignedPerm &w) {
    if (u.n() != w.n() || u.fam != w.fam) throw std::invalid_argument("compose: mismatched groups");
    SignedPerm r;
    r.fam = w.fam;
    r.e.resize(w.n());
    for (int i = 0; i < w.n(); ++i) {
        int x = w[i];
        r.e[i] = (x > 0 ? 1 : -1) * u[std::abs(x) - 1];
    }
    return r;
}

SignedPerm inverse(const SignedPerm &w) {
    SignedPerm r;
    r.fam = w.fam;
    r.e.resize(w.n());
    for (int i = 0; i < w.n(); ++i) {
        int x = w[i];
        r.e[std::abs(x) - 1] = (x > 0 ? 1 : -1) * (i + 1);
    }
    return r;
}

std::vector<SignedPerm> simple_generators(int n, Family fam) {
    if (n < 2) throw std::invalid_argument("simple_generators needs n >= 2");
    std::vector<SignedPerm> g;
    for (int i = 0; i + 1 < n; ++i) {
        SignedPerm s = identity(n, fam);
        std::swap(s.e[i], s.e[i + 1]);
        g.push_back(s);
    }
    SignedPerm last = identity(n, fam);
    if (fam == Family::FullSign) {
        last.e[n - 1] = -n;
    } else {
        last.e[n - 2] = -n;
        last.e[n - 1] = -(n - 1);
    }
    g.push_back(last);
    return g;
}

std::uint64_t group_order(int n, Family fam) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f << (fam == Family::FullSign ? n : n - 1);
}

std::vector<SignedPerm> enumerate_group(int n, Family fam, int cap) {
    if (n < 1) throw std::invalid_argument("enumerate_group needs n >= 1");
    if (n > cap) throw std::invalid_argument("n exceeds the enumeration cap " + std::to_string(cap));
    std::vector<SignedPerm> out;
    out.reserve(group_order(n, fam));
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        // bit i set means entry i negative; iterate masks so entry 0 is the most significant
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            SignedPerm w;
            w.fam = fam;
            w.e = p;
            int neg = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << (n - 1 - i))) {
                    w.e[i] = -w.e[i];
                    ++neg;
                }
            if (fam == Family::EvenSign && neg % 2) continue;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

LengthTable::LengthTable(int n, Family fam) : n_(n), fam_(fam) {
    SignedPerm id = identity(n, fam);
    dist_[id.e] = 0;
    if (n < 2) {
        if (fam == Family::FullSign) dist_[{-1}] = 1;
        return;
    }
    auto gens = simple_generators(n, fam);
    std::deque<SignedPerm> queue{id};
    while (!queue.empty()) {
        SignedPerm w = queue.front();
        queue.pop_front();
        int d = dist_[w.e];
        for (const auto &g : gens) {
            SignedPerm x = compose(w, g);
            if (dist_.emplace(x.e, d + 1).second) queue.push_back(std::move(x));
        }
    }
}

const LengthTable &LengthTable::get(int n, Family fam) {
    if (n < 1 || n > kBfsCap) throw std::invalid_argument("BFS length table needs 1 <= n <= " + std::to_string(kBfsCap));
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<LengthTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[{n, static_cast<int>(fam)}];
    if (!slot) slot.reset(new LengthTable(n, fam));
    return *slot;
}

int LengthTable::length(const SignedPerm &w) const {
    if (w.n() != n_ || w.fam != fam_) throw std::invalid_argument("length table: wrong group");
    auto it = dist_.find(w.e);
    if (it == dist_.end()) throw std::invalid_argument("length table: element not in group");
    return it->second;
}

int length_bfs(const SignedPerm &w) { return LengthTable::get(w.n(), w.fam).length(w); }

std::vector<int> w_tilde(const SignedPerm &w) {
    std::vector<int> t;
    for (int x : w.e)
        if (x > 0) t.push_back(x);
    for (auto it = w.e.rbegin(); it != w.e.rend(); ++it)
        if (*it < 0) t.push_back(-*it);
    return t;
}

namespace {

int big_l(const std::vector<int> &t) {
    const int n = static_cast<int>(t.size());
    int asc = 0;
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            if (t[i] < t[k]) ++asc;
    return n * (n - 1) / 2 - asc;
}

} // namespace

int length_paper_C(const SignedPerm &w) {
    if (w.fam != Family::FullSign) throw std::invalid_argument("length_paper_C needs a full-sign element");
    const int n = w.n();
    int f = 0, m = 0;
    for (int j = 1; j <= n; ++j)
        if (w[j - 1] < 0) {
            f += n - j;
            ++m;
        }
    return big_l(w_tilde(w)) + f + m;
}

int length_paper_D(const SignedPerm &w) {
    if (w.fam != Family::EvenSign) throw std::invalid_argument("length_paper_D needs an even-sign element");
    const int n = w.n();
    std::vector<int> k;
    for (int j = 1; j <= n; ++j)
        if (w[j - 1] < 0) k.push_back(j);
    int f = 0;
    for (std::size_t j = 0; j + 1 < k.size(); j += 2) f += 2 * n - 1 - k[j + 1] - k[j];
    return big_l(w_tilde(w)) + f + static_cast<int>(k.size() / 2);
}

int length_paper(const SignedPerm &w) {
    return w.fam == Family::FullSign ? length_paper_C(w) : length_paper_D(w);
}

} // namespace flagdom
