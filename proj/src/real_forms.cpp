#include "flagdom/real_forms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <stdexcept>

namespace flagdom {

namespace {

void check_pq(int p, int q) {
    if (q < 1 || p < q) throw ParseError("need p >= q >= 1, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
}

int sgn(int x) { return x > 0 ? 1 : -1; }

} // namespace

RealForm make_spr(int n) {
    if (n < 1) throw ParseError("need n >= 1");
    return {Kind::SpR, n, 0, 0, 2 * n, Family::FullSign};
}

RealForm make_sostar(int n) {
    if (n < 2) throw ParseError("need n >= 2 for SO*(2n)");
    return {Kind::SOStar, n, 0, 0, 2 * n, Family::EvenSign};
}

RealForm make_sopq(int p, int q) {
    check_pq(p, q);
    int m = p + q;
    if (m < 3) throw ParseError("SO(p,q) needs p+q >= 3");
    return {Kind::SOpq, m / 2, p, q, m, m % 2 ? Family::FullSign : Family::EvenSign};
}

RealForm make_sppq(int p, int q) {
    check_pq(p, q);
    return {Kind::Sppq, p + q, p, q, 2 * (p + q), Family::FullSign};
}

RealForm parse_form(const std::string &code) {
    static const std::regex one(R"(^(sp2n-r|so-star):(\d+)$)");
    static const std::regex two(R"(^(so-pq|sp-pq):(\d+),(\d+)$)");
    std::smatch mt;
    try {
        if (std::regex_match(code, mt, one)) {
            int n = std::stoi(mt[2]);
            return mt[1] == "sp2n-r" ? make_spr(n) : make_sostar(n);
        }
        if (std::regex_match(code, mt, two)) {
            int p = std::stoi(mt[2]), q = std::stoi(mt[3]);
            return mt[1] == "so-pq" ? make_sopq(p, q) : make_sppq(p, q);
        }
    } catch (const std::out_of_range &) {
        throw ParseError("parameter out of range in '" + code + "'");
    }
    throw ParseError("unknown form code '" + code + "'");
}

std::string RealForm::code() const {
    switch (kind) {
    case Kind::SpR: return "sp2n-r:" + std::to_string(n);
    case Kind::SOStar: return "so-star:" + std::to_string(n);
    case Kind::SOpq: return "so-pq:" + std::to_string(p) + "," + std::to_string(q);
    case Kind::Sppq: return "sp-pq:" + std::to_string(p) + "," + std::to_string(q);
    }
    return {};
}

std::string RealForm::name() const {
    switch (kind) {
    case Kind::SpR: return "Sp(" + std::to_string(2 * n) + ",R)";
    case Kind::SOStar: return "SO*(" + std::to_string(2 * n) + ")";
    case Kind::SOpq: return "SO(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Kind::Sppq: return "Sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return {};
}

int dim_flag_manifold(const RealForm &rf) {
    return rf.weyl == Family::FullSign ? rf.n * rf.n : rf.n * rf.n - rf.n;
}

int dim_base_cycle(const RealForm &rf) {
    const int n = rf.n, p = rf.p, q = rf.q;
    switch (rf.kind) {
    case Kind::SpR:
    case Kind::SOStar: return n * (n - 1) / 2;
    case Kind::Sppq: return p * p + q * q;
    case Kind::SOpq:
        if (rf.m % 2 == 0)
            return q % 2 == 0 ? p * (p - 2) / 4 + q * (q - 2) / 4 : (p - 1) * (p - 1) / 4 + (q - 1) * (q - 1) / 4;
        return q % 2 == 0 ? (p - 1) * (p - 1) / 4 + q * (q - 2) / 4 : p * (p - 2) / 4 + (q - 1) * (q - 1) / 4;
    }
    return 0;
}

int dim_dual_schubert(const RealForm &rf) {
    const int n = rf.n;
    switch (rf.kind) {
    case Kind::SpR: return n * (n + 1) / 2;
    case Kind::SOStar: return n * (n - 1) / 2;
    case Kind::SOpq: return rf.p * rf.q / 2; // (pq-1)/2 when pq is odd
    case Kind::Sppq: return 2 * rf.p * rf.q;
    }
    return 0;
}

SignedPerm psi(const RealForm &rf, const SignedPerm &w) {
    const int n = rf.n, q = rf.q;
    SignedPerm r = w;
    for (int &x : r.e) {
        const int a = std::abs(x), s = sgn(x);
        switch (rf.kind) {
        case Kind::SpR: x = -x; break;
        case Kind::SOStar:
            if (!(n % 2 == 1 && a == n)) x = -x;
            break;
        case Kind::SOpq:
            if (a > q) {
                x = (rf.m % 2 == 0 && q % 2 == 1) ? s * (a - 1) : x;
            } else if (a == q && q % 2 == 1) {
                x = rf.m % 2 == 0 ? s * n : x;
            } else if (a % 2 == 1) {
                x = -s * ((a + 1) / 2);
            } else {
                int i = a / 2;
                x = -s * (q % 2 == 0 ? q - i + 1 : q - i);
            }
            break;
        case Kind::Sppq:
            if (a <= 2 * q) x = a % 2 == 1 ? s * (2 * q - (a + 1) / 2 + 1) : -s * (a / 2);
            break;
        }
    }
    return r;
}

namespace {

ExactVector combo(int m, std::initializer_list<std::pair<int, ExactScalar>> terms) {
    ExactVector v(m);
    for (const auto &[k, c] : terms) v.at(k - 1) += c;
    return v;
}

const ExactScalar one{1}, mone{-1};

std::unique_ptr<FormModel> build(const RealForm &rf) {
    auto M = std::make_unique<FormModel>();
    M->rf = rf;
    const int n = rf.n, m = rf.m, q = rf.q;
    M->b.assign(m, ExactVector(m));
    M->h.assign(m, 0);
    M->iw.assign(2 * n + 1, ExactVector());
    M->ts.assign(2 * n + 1, ExactVector());
    auto setI = [&](int label, ExactVector v) { M->iw[label + n] = std::move(v); };
    auto setS = [&](int label, ExactVector v) { M->ts[label + n] = std::move(v); };
    auto bar = [&](int k) { return m + 1 - k; };

    switch (rf.kind) {
    case Kind::SpR:
    case Kind::Sppq:
        for (int i = 1; i <= n; ++i) {
            M->b[i - 1][bar(i) - 1] = one;
            M->b[bar(i) - 1][i - 1] = mone;
        }
        for (int k = 1; k <= n; ++k) setS(k, unit(m, k)), setS(-k, unit(m, bar(k)));
        if (rf.kind == Kind::SpR) {
            for (int k = 1; k <= m; ++k) M->h[k - 1] = k <= n ? 1 : -1;
            for (int k = 1; k <= n; ++k) {
                setI(k, combo(m, {{k, one}, {bar(k), mone}}));
                setI(-k, combo(m, {{k, one}, {bar(k), one}}));
            }
        } else {
            for (int k = 1; k <= m; ++k) M->h[k - 1] = (k <= q || k > m - q) ? -1 : 1;
            for (int j = 1; j <= q; ++j) {
                const int a = j, b = 2 * q + 1 - j, c = 2 * n - 2 * q + j, d = 2 * n + 1 - j;
                setI(2 * j - 1, combo(m, {{a, one}, {b, one}}));
                setI(-(2 * j - 1), combo(m, {{c, one}, {d, one}}));
                setI(2 * j, combo(m, {{c, one}, {d, mone}}));
                setI(-2 * j, combo(m, {{a, one}, {b, mone}}));
            }
            for (int k = 2 * q + 1; k <= n; ++k) setI(k, unit(m, k)), setI(-k, unit(m, bar(k)));
        }
        break;

    case Kind::SOStar:
        for (int i = 1; i <= m; ++i) M->b[i - 1][bar(i) - 1] = one;
        for (int k = 1; k <= m; ++k) M->h[k - 1] = k <= n ? 1 : -1;
        for (int k = 1; k <= n; ++k) setS(k, unit(m, k)), setS(-k, unit(m, bar(k)));
        for (int j = 1; j <= n / 2; ++j) {
            const int a = j, b = n + 1 - j;
            setI(2 * j - 1, combo(m, {{a, one}, {bar(b), one}}));
            setI(-(2 * j - 1), combo(m, {{b, one}, {bar(a), one}}));
            setI(2 * j, combo(m, {{b, one}, {bar(a), mone}}));
            setI(-2 * j, combo(m, {{a, one}, {bar(b), mone}}));
        }
        if (n % 2) {
            const int c = (n + 1) / 2;
            setI(n, unit(m, c));
            setI(-n, unit(m, bar(c)));
        }
        break;

    case Kind::SOpq: {
        for (int i = 1; i <= m; ++i) {
            M->b[i - 1][i - 1] = i <= q ? mone : one;
            M->h[i - 1] = i <= q ? -1 : 1;
        }
        // Iwasawa side: split pairs, then the middle (m odd), then compact pairs.
        for (int k = 1; k <= q; ++k) {
            setI(k, combo(m, {{k, one}, {2 * q + 1 - k, one}}));
            setI(-k, combo(m, {{k, one}, {2 * q + 1 - k, mone}}));
        }
        int next = 2 * q + 1;
        if (m % 2) setI(0, unit(m, next++));
        for (int k = q + 1; k <= n; ++k, next += 2) {
            setI(k, combo(m, {{next, one}, {next + 1, kI}}));
            setI(-k, combo(m, {{next, one}, {next + 1, -kI}}));
        }
        // Fixed side: e_a +- i e_b on consecutive pairs inside E^- then E^+.
        std::vector<int> neg, pos;
        for (int k = 1; k <= q; ++k) neg.push_back(k);
        for (int k = q + 1; k <= m; ++k) pos.push_back(k);
        bool null_pair = false;
        if (q % 2 == 1 && rf.p % 2 == 1) {
            neg.pop_back();
            pos.erase(pos.begin());
            null_pair = true;
        } else if (q % 2 == 1) {
            setS(0, unit(m, q));
            neg.pop_back();
        } else if (rf.p % 2 == 1) {
            // middle aligned with the Iwasawa middle e_{2q+1}
            setS(0, unit(m, 2 * q + 1));
            pos.erase(pos.begin() + q);
        }
        int label = 1;
        for (const auto *part : {&neg, &pos})
            for (std::size_t i = 0; i + 1 < part->size(); i += 2, ++label) {
                int a = (*part)[i], b = (*part)[i + 1];
                setS(label, combo(m, {{a, one}, {b, kI}}));
                setS(-label, combo(m, {{a, one}, {b, -kI}}));
            }
        if (null_pair) {
            setS(n, combo(m, {{q, one}, {q + 1, one}}));
            setS(-n, combo(m, {{q, one}, {q + 1, mone}}));
        }
        break;
    }
    }
    return M;
}

} // namespace

const FormModel &model(const RealForm &rf) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<FormModel>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[rf.code()];
    if (!slot) slot = build(rf);
    return *slot;
}

std::vector<ExactVector> iwasawa_basis(const RealForm &rf) {
    const FormModel &M = model(rf);
    std::vector<ExactVector> out;
    for (int k = 1; k <= rf.n; ++k) out.push_back(M.iwasawa(k));
    if (M.has_middle()) out.push_back(M.iwasawa(0));
    for (int k = rf.n; k >= 1; --k) out.push_back(M.iwasawa(-k));
    return out;
}

int h_sign(const RealForm &rf, const ExactVector &v) {
    const FormModel &M = model(rf);
    Rational s = 0;
    for (int k = 0; k < rf.m; ++k) s += M.h[k] * (v[k].re * v[k].re + v[k].im * v[k].im);
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

std::vector<LabeledVector> standard_fixed_eigenbasis(const RealForm &rf) {
    const FormModel &M = model(rf);
    std::vector<LabeledVector> out;
    auto add = [&](int label) { out.push_back({label, M.fixed(label), h_sign(rf, M.fixed(label))}); };
    for (int k = 1; k <= rf.n; ++k) add(k);
    if (M.has_middle()) add(0);
    for (int k = rf.n; k >= 1; --k) add(-k);
    return out;
}

} // namespace flagdom
