#pragma once

#include "flagdom/flag_oracle.hpp"

#include <map>
#include <string>
#include <vector>

namespace flagdom {

struct IntersectionPoint {
    SignedPerm label;    // T_S labels of the flag
    Signature signature; // computed from the flag, not predicted
};

struct IntersectionReport {
    RealForm rf;
    SignedPerm w;
    std::string method; // "supset", "supset_e", "supset_o", "swite", "swito", "swit"
    std::vector<IntersectionPoint> points; // canonical label order, no duplicates
    std::map<Signature, std::vector<SignedPerm>> by_domain;

    std::size_t total_points() const { return points.size(); }
    std::size_t domains_touched() const { return by_domain.size(); }
    // 0 when domains receive different numbers of points
    std::size_t points_per_domain() const;
};

// SpR(n), w generous: every sign variant of psi(w).
IntersectionReport supset(const RealForm &rf, const SignedPerm &w);
// SO*(2n), w dense: sign variants of psi(w) that keep even parity.
IntersectionReport supset_sostar(const RealForm &rf, const SignedPerm &w);
// SO(p,q), w perfect harmonic.  Named swito in the report when q is odd.
IntersectionReport swite(const RealForm &rf, const SignedPerm &w);
// Sp(p,q), w perfect major.
IntersectionReport swit(const RealForm &rf, const SignedPerm &w);

// Dispatch on the form.
IntersectionReport intersect(const RealForm &rf, const SignedPerm &w);
std::vector<SignedPerm> intersection_points(const RealForm &rf, const SignedPerm &w, const Signature &alpha);

// Switched elements before psi is applied; exposed for tests.
std::vector<SignedPerm> switched_elements(const RealForm &rf, const SignedPerm &w);

} // namespace flagdom
