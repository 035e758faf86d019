#include "flagdom/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace flagdom {

namespace {

void need(bool ok, const char *what) {
    if (!ok) throw std::invalid_argument(what);
}

// position of modulus k (0-based) and its signed value
struct Where {
    std::vector<int> pos, val;
    explicit Where(const SignedPerm &w) : pos(w.n() + 1), val(w.n() + 1) {
        for (int i = 0; i < w.n(); ++i) {
            pos[std::abs(w[i])] = i;
            val[std::abs(w[i])] = w[i];
        }
    }
};

// A pair of values to be placed next to each other once filled boxes are
// collapsed away.
using Pair = std::pair<int, int>;

// All ways to place the pairs in order, each into two boxes adjacent in the
// list of still-empty boxes.  The callback sees the boxes and the empty slots.
void place_pairs(int boxes, const std::vector<Pair> &pairs,
                 const std::function<void(const std::vector<int> &, const std::vector<int> &)> &done) {
    std::vector<int> w(boxes, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        std::vector<int> empty;
        for (int i = 0; i < boxes; ++i)
            if (w[i] == 0) empty.push_back(i);
        if (j == pairs.size()) {
            done(w, empty);
            return;
        }
        for (std::size_t t = 0; t + 1 < empty.size(); ++t) {
            w[empty[t]] = pairs[j].first;
            w[empty[t + 1]] = pairs[j].second;
            rec(j + 1);
            w[empty[t]] = w[empty[t + 1]] = 0;
        }
    };
    rec(0);
}

std::vector<SignedPerm> finish(std::set<SignedPerm> s) { return {s.begin(), s.end()}; }

} // namespace

bool is_generous(const SignedPerm &w) {
    need(w.fam == Family::FullSign, "is_generous needs a full-sign element");
    return std::all_of(w.e.begin(), w.e.end(), [](int x) { return x < 0; });
}

SignedPerm super_generous(int n) {
    need(n >= 1, "super_generous needs n >= 1");
    SignedPerm w;
    w.fam = Family::FullSign;
    for (int k = n; k >= 1; --k) w.e.push_back(-k);
    return w;
}

bool is_dense(const SignedPerm &w) {
    need(w.fam == Family::EvenSign, "is_dense needs an even-sign element");
    const int n = w.n();
    for (int x : w.e) {
        bool want_negative = !(n % 2 == 1 && std::abs(x) == n);
        if ((x < 0) != want_negative) return false;
    }
    return true;
}

SignedPerm super_dense(int n) {
    need(n >= 2, "super_dense needs n >= 2");
    SignedPerm w;
    w.fam = Family::EvenSign;
    for (int k = n; k >= 1; --k) w.e.push_back(-k);
    if (n % 2) w.e[0] = n;
    return w;
}

bool is_harmonic(const RealForm &rf, const SignedPerm &w) {
    need(rf.kind == Kind::SOpq, "is_harmonic needs SO(p,q)");
    const int q = rf.q;
    Where at(w);
    if (q % 2 == 0) {
        for (int i = 1; i <= q / 2; ++i)
            if (at.val[2 * i - 1] != -(2 * i - 1) || at.pos[2 * i - 1] > at.pos[2 * i]) return false;
        return true;
    }
    for (int i = 1; i <= (q - 1) / 2; ++i)
        if (at.val[2 * i - 1] != -(2 * i - 1) || at.val[2 * i] != 2 * i || at.pos[2 * i - 1] > at.pos[2 * i])
            return false;
    return w.e.back() == -q;
}

bool is_major(const RealForm &rf, const SignedPerm &w) {
    need(rf.kind == Kind::Sppq, "is_major needs Sp(p,q)");
    Where at(w);
    for (int i = 1; i <= rf.q; ++i) {
        const int odd = 2 * i - 1, even = 2 * i;
        bool a = at.val[odd] == -odd && at.pos[odd] < at.pos[even];
        bool b = at.val[even] == -even && at.pos[even] < at.pos[odd];
        if (!a && !b) return false;
    }
    return true;
}

std::vector<SignedPerm> generate_perfect_harmonic(const RealForm &rf) {
    need(rf.kind == Kind::SOpq, "generate_perfect_harmonic needs SO(p,q)");
    const int n = rf.n, q = rf.q;
    need(n <= kGeneratorCap, "n exceeds the generator cap");
    std::set<SignedPerm> out;

    // The sign of n restores even parity; full-sign groups keep it positive.
    // With no remainder (p = q) nothing can be flipped and the filling is
    // dropped, since it is not a group element.
    auto fill_rest = [&](std::vector<int> w, const std::vector<int> &empty, int first, int negatives) {
        int v = first;
        for (int i : empty) w[i] = v++;
        if (rf.weyl == Family::EvenSign && negatives % 2 == 1) {
            auto it = std::find(w.begin(), w.end(), n);
            if (it == w.end()) return std::optional<std::vector<int>>{};
            *it = -n;
        }
        return std::optional<std::vector<int>>{w};
    };

    if (q % 2 == 1) {
        std::vector<Pair> pairs;
        for (int j = 1; j <= (q - 1) / 2; ++j) pairs.push_back({-(2 * j - 1), 2 * j});
        const int negatives = static_cast<int>(pairs.size()) + 1;
        place_pairs(n - 1, pairs, [&](const std::vector<int> &w, const std::vector<int> &empty) {
            auto full = fill_rest(w, empty, q + 1, negatives);
            if (!full) return;
            full->push_back(-q);
            out.insert(SignedPerm{*full, rf.weyl});
        });
        return finish(std::move(out));
    }

    const int half = q / 2;
    const bool allow_b = rf.weyl == Family::EvenSign;
    for (int mask = 0; mask < (1 << half); ++mask) {
        if (mask && !allow_b) break;
        // bit j-1 set: pair j is (-(2j-1), -2j)
        std::vector<Pair> pairs;
        int negatives = 0;
        for (int j = 1; j <= half; ++j) {
            bool b = mask & (1 << (j - 1));
            pairs.push_back({-(2 * j - 1), b ? -2 * j : 2 * j});
            negatives += b ? 2 : 1;
        }
        place_pairs(n, pairs, [&](const std::vector<int> &w, const std::vector<int> &empty) {
            auto filled = fill_rest(w, empty, q + 1, negatives);
            if (!filled) return;
            const auto &full = *filled;
            Where at(SignedPerm{full, rf.weyl});
            auto lo = [&](int j) { return std::min(at.pos[2 * j - 1], at.pos[2 * j]); };
            auto hi = [&](int j) { return std::max(at.pos[2 * j - 1], at.pos[2 * j]); };
            for (int j = 1; j <= half; ++j) {
                if (!(mask & (1 << (j - 1)))) continue;
                // later pairs sit to the left, earlier (-,-) pairs to the right
                for (int i = j + 1; i <= half; ++i)
                    if (hi(i) > lo(j)) return;
                for (int i = 1; i < j; ++i)
                    if ((mask & (1 << (i - 1))) && lo(i) < hi(j)) return;
                // the remainder sits to the left of every (-,-) pair
                for (int i : empty)
                    if (i > lo(j)) return;
            }
            out.insert(SignedPerm{full, rf.weyl});
        });
    }
    return finish(std::move(out));
}

std::vector<SignedPerm> generate_perfect_major(const RealForm &rf) {
    need(rf.kind == Kind::Sppq, "generate_perfect_major needs Sp(p,q)");
    const int n = rf.n, q = rf.q;
    need(n <= kGeneratorCap, "n exceeds the generator cap");
    std::vector<Pair> pairs;
    for (int j = 1; j <= q; ++j) pairs.push_back({-2 * j, 2 * j - 1});
    std::set<SignedPerm> out;
    place_pairs(n, pairs, [&](std::vector<int> w, const std::vector<int> &empty) {
        int v = 2 * q + 1;
        for (int i : empty) w[i] = v++;
        out.insert(SignedPerm{w, Family::FullSign});
    });
    return finish(std::move(out));
}

bool chapter_predicate(const RealForm &rf, const SignedPerm &w) {
    switch (rf.kind) {
    case Kind::SpR: return is_generous(w);
    case Kind::SOStar: return is_dense(w);
    case Kind::SOpq: return is_harmonic(rf, w);
    case Kind::Sppq: return is_major(rf, w);
    }
    return false;
}

std::string chapter_name(const RealForm &rf) {
    switch (rf.kind) {
    case Kind::SpR: return "generous";
    case Kind::SOStar: return "dense";
    case Kind::SOpq: return "harmonic";
    case Kind::Sppq: return "major";
    }
    return {};
}

std::vector<SignedPerm> distinguished_elements(const RealForm &rf) {
    switch (rf.kind) {
    case Kind::SpR: return {super_generous(rf.n)};
    case Kind::SOStar: return {super_dense(rf.n)};
    case Kind::SOpq: return generate_perfect_harmonic(rf);
    case Kind::Sppq: return generate_perfect_major(rf);
    }
    return {};
}

bool is_distinguished(const RealForm &rf, const SignedPerm &w) {
    auto d = distinguished_elements(rf);
    return std::find(d.begin(), d.end(), w) != d.end();
}

std::uint64_t perfect_count_formula(const RealForm &rf) {
    const int n = rf.n, q = rf.q;
    auto product = [](int from, int to) { // from*(from-2)*...*to
        std::uint64_t r = 1;
        for (int k = from; k >= to; k -= 2) r *= static_cast<std::uint64_t>(k);
        return r;
    };
    switch (rf.kind) {
    case Kind::SpR:
    case Kind::SOStar: return 1;
    case Kind::Sppq: return product(n - 1, n - 2 * q + 1);
    case Kind::SOpq:
        if (q % 2 == 1) return product(n - 2, n - q + 1);
        return rf.m % 2 == 0 ? product(n, n - q + 2) : product(n - 1, n - q + 1);
    }
    return 0;
}

Classification classify(const RealForm &rf, const SignedPerm &w) {
    if (w.n() != rf.n || w.fam != rf.weyl) throw std::invalid_argument("element does not belong to the Weyl group of " + rf.name());
    Classification c;
    c.chapter = chapter_name(rf);
    c.predicate = chapter_predicate(rf, w);
    c.distinguished = is_distinguished(rf, w);
    c.length_paper = length_paper(w);
    if (w.n() <= kBfsCap) c.length_bfs = length_bfs(w);
    return c;
}

} // namespace flagdom
