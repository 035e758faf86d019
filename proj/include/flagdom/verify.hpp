#pragma once

#include "flagdom/real_forms.hpp"

#include <string>
#include <utility>
#include <vector>

namespace flagdom {

struct VerificationReport {
    std::string theorem;
    RealForm rf;
    bool pass = true;
    long checked = 0;
    std::vector<std::string> counterexamples; // sorted
};

// Theorem ids valid for the form, in a fixed order.
std::vector<std::string> theorems_for(const RealForm &rf);
bool known_theorem(const std::string &id);

// Throws std::invalid_argument for unknown ids or ids that do not apply to rf.
VerificationReport verify(const RealForm &rf, const std::string &theorem);

// "+-+-..." of length n; for SO(p,q) with q odd the last sign is '+'.
Signature alternating_signature(const RealForm &rf);

} // namespace flagdom
