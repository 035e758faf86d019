#pragma once

#include "flagdom/real_forms.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace flagdom {

bool is_generous(const SignedPerm &w);
SignedPerm super_generous(int n);

// n even: all entries negative.  n odd: all negative except the entry of
// modulus n, which is positive.
bool is_dense(const SignedPerm &w);
SignedPerm super_dense(int n);

bool is_harmonic(const RealForm &rf, const SignedPerm &w);
bool is_major(const RealForm &rf, const SignedPerm &w);

// Box-filling generators, deduplicated and in canonical order.
constexpr int kGeneratorCap = 12;
std::vector<SignedPerm> generate_perfect_harmonic(const RealForm &rf);
std::vector<SignedPerm> generate_perfect_major(const RealForm &rf);

// The chapter predicate for the form: generous, dense, harmonic or major.
bool chapter_predicate(const RealForm &rf, const SignedPerm &w);
std::string chapter_name(const RealForm &rf);
// super/perfect elements: the single super element for SpR and SO*, the
// generated set otherwise.
std::vector<SignedPerm> distinguished_elements(const RealForm &rf);
bool is_distinguished(const RealForm &rf, const SignedPerm &w);

// Product formulas for the number of perfect elements.
std::uint64_t perfect_count_formula(const RealForm &rf);

struct Classification {
    std::string chapter;      // "generous", "dense", "harmonic", "major"
    bool predicate = false;   // generous / dense / harmonic / major
    bool distinguished = false; // super_generous / super_dense / perfect_*
    int length_paper = 0;
    std::optional<int> length_bfs; // absent above the BFS cap
};

Classification classify(const RealForm &rf, const SignedPerm &w);

} // namespace flagdom
