#include "flagdom/intersect.hpp"

#include "flagdom/classify.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace flagdom {

std::size_t IntersectionReport::points_per_domain() const {
    std::size_t k = 0;
    for (const auto &[sig, pts] : by_domain) {
        if (k && pts.size() != k) return 0;
        k = pts.size();
    }
    return k;
}

namespace {

IntersectionReport assemble(const RealForm &rf, const SignedPerm &w, std::string method,
                            const std::set<SignedPerm> &labels) {
    IntersectionReport r{rf, w, std::move(method), {}, {}};
    for (const auto &s : labels) {
        FixedFlag f = fixed_flag(rf, s);
        if (!is_max_isotropic(rf, f.chain)) throw std::logic_error("non-isotropic point " + s.str());
        Signature sig = flag_signature(rf, f.chain);
        r.points.push_back({s, sig});
        r.by_domain[sig].push_back(s);
    }
    return r;
}

std::set<SignedPerm> sign_variants(const SignedPerm &base, bool even_only) {
    std::set<SignedPerm> out;
    const int n = base.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        SignedPerm s = base;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.e[i] = -s.e[i];
        if (even_only && s.negatives() % 2) continue;
        out.insert(s);
    }
    return out;
}

// 2^k switch choices for k pairs; each pair occupies two fixed positions and
// takes one of four (left, right) fillings.
std::vector<SignedPerm> switch_pairs(const SignedPerm &w, const std::vector<std::pair<int, int>> &slots,
                                     const std::vector<std::vector<std::pair<int, int>>> &options) {
    std::vector<SignedPerm> out{w};
    for (std::size_t j = 0; j < slots.size(); ++j) {
        std::vector<SignedPerm> next;
        for (const auto &x : out)
            for (const auto &[a, b] : options[j]) {
                SignedPerm y = x;
                y.e[slots[j].first] = a;
                y.e[slots[j].second] = b;
                next.push_back(y);
            }
        out = std::move(next);
    }
    return out;
}

int where(const SignedPerm &w, int modulus) {
    for (int i = 0; i < w.n(); ++i)
        if (std::abs(w[i]) == modulus) return i;
    return -1;
}

} // namespace

IntersectionReport supset(const RealForm &rf, const SignedPerm &w) {
    if (rf.kind != Kind::SpR) throw std::invalid_argument("supset needs Sp(2n,R)");
    if (w.n() != rf.n || !is_generous(w)) throw std::invalid_argument("supset needs a generous element");
    return assemble(rf, w, "supset", sign_variants(psi(rf, w), false));
}

IntersectionReport supset_sostar(const RealForm &rf, const SignedPerm &w) {
    if (rf.kind != Kind::SOStar) throw std::invalid_argument("supset_sostar needs SO*(2n)");
    if (w.n() != rf.n || !is_dense(w)) throw std::invalid_argument("supset_sostar needs a dense element");
    return assemble(rf, w, rf.n % 2 ? "supset_o" : "supset_e", sign_variants(psi(rf, w), true));
}

std::vector<SignedPerm> switched_elements(const RealForm &rf, const SignedPerm &w) {
    std::vector<std::pair<int, int>> slots;
    std::vector<std::vector<std::pair<int, int>>> options;
    if (rf.kind == Kind::SOpq) {
        // any harmonic element carries the pairs; only perfect ones have finite intersections
        if (w.n() != rf.n || !is_harmonic(rf, w)) throw std::invalid_argument("swite needs a harmonic element");
        const int pairs = rf.q / 2; // (q-1)/2 when q is odd
        for (int j = 1; j <= pairs; ++j) {
            const int a = 2 * j - 1, b = 2 * j;
            int pa = where(w, a), pb = where(w, b);
            slots.push_back({pa, pb});
            if (w[pb] > 0) // (-a, b)
                options.push_back({{-a, b}, {b, -a}, {-b, a}, {a, -b}});
            else // (-a, -b)
                options.push_back({{-a, -b}, {-b, -a}, {b, a}, {a, b}});
        }
    } else if (rf.kind == Kind::Sppq) {
        if (w.n() != rf.n) throw std::invalid_argument("swit needs an element of rank " + std::to_string(rf.n));
        for (int j = 1; j <= rf.q; ++j) {
            const int a = 2 * j, b = 2 * j - 1; // pair (-a, b), -a on the left
            int pa = where(w, a), pb = where(w, b);
            if (w[pa] != -a || w[pb] != b || pa > pb)
                throw std::invalid_argument("swit needs the pairs (-2j, 2j-1) in order");
            slots.push_back({pa, pb});
            options.push_back({{-a, b}, {b, -a}, {a, -b}, {-b, a}});
        }
    } else {
        throw std::invalid_argument("switch lists exist for SO(p,q) and Sp(p,q) only");
    }
    return switch_pairs(w, slots, options);
}

IntersectionReport swite(const RealForm &rf, const SignedPerm &w) {
    if (rf.kind != Kind::SOpq) throw std::invalid_argument("swite needs SO(p,q)");
    std::set<SignedPerm> labels;
    for (const auto &x : switched_elements(rf, w)) labels.insert(psi(rf, x));
    return assemble(rf, w, rf.q % 2 ? "swito" : "swite", labels);
}

IntersectionReport swit(const RealForm &rf, const SignedPerm &w) {
    if (rf.kind != Kind::Sppq) throw std::invalid_argument("swit needs Sp(p,q)");
    std::set<SignedPerm> labels;
    for (const auto &x : switched_elements(rf, w)) labels.insert(psi(rf, x));
    return assemble(rf, w, "swit", labels);
}

IntersectionReport intersect(const RealForm &rf, const SignedPerm &w) {
    switch (rf.kind) {
    case Kind::SpR: return supset(rf, w);
    case Kind::SOStar: return supset_sostar(rf, w);
    case Kind::SOpq: return swite(rf, w);
    case Kind::Sppq: return swit(rf, w);
    }
    throw std::logic_error("unreachable");
}

std::vector<SignedPerm> intersection_points(const RealForm &rf, const SignedPerm &w, const Signature &alpha) {
    auto domains = enumerate_flag_domains(rf);
    if (!domains.count(alpha)) throw std::invalid_argument("'" + alpha + "' is not a flag domain of " + rf.name());
    auto r = intersect(rf, w);
    auto it = r.by_domain.find(alpha);
    return it == r.by_domain.end() ? std::vector<SignedPerm>{} : it->second;
}

} // namespace flagdom
