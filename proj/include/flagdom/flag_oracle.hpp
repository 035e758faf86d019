#pragma once

#include "flagdom/real_forms.hpp"

#include <map>
#include <set>
#include <vector>

namespace flagdom {

ExactScalar bilinear(const RealForm &rf, const ExactVector &v, const ExactVector &w);
ExactScalar hermitian(const RealForm &rf, const ExactVector &v, const ExactVector &w);

// A T_S-fixed flag: the labels pick eigenvectors for positions 1..n; positions
// n+1..m are the middle vector (m odd) and the partners -label_n, ..., -label_1.
struct FixedFlag {
    SignedPerm label;
    std::vector<ExactVector> chain; // all m vectors
};

// Full chain for labels s taken from the given labelled basis.
std::vector<ExactVector> chain_from(const FormModel &M, const SignedPerm &s, bool iwasawa);
FixedFlag fixed_flag(const RealForm &rf, const SignedPerm &s);
// The flag w(F_I).
std::vector<ExactVector> iwasawa_flag(const RealForm &rf, const SignedPerm &w);

// V_i in general position (rank m) and V_{m-i} = V_i^perp for every i.
bool is_max_isotropic(const RealForm &rf, const std::vector<ExactVector> &chain);
// Sign of h on each of the first n vectors.  A null vector in position n (type D
// with p, q odd) reads '+'; a null vector earlier reads '0'.
Signature flag_signature(const RealForm &rf, const std::vector<ExactVector> &chain);
// V_i = (V_i n E^-) + (V_i n E^+) for all i; in type D the step i = n is skipped
// because V_n is determined by V_{n-1}.
bool is_split(const RealForm &rf, const std::vector<ExactVector> &chain);

constexpr int kFixedFlagCap = 5;
std::vector<FixedFlag> enumerate_fixed_flags(const RealForm &rf, int cap = kFixedFlagCap);

using RankMatrix = std::vector<std::vector<int>>; // (m+1) x (m+1)

RankMatrix schubert_rank_matrix(const RealForm &rf, const SignedPerm &w);
// r(i,j) = dim(V_i n F_I_j) by exact ranks.
RankMatrix rank_matrix(const RealForm &rf, const std::vector<ExactVector> &chain);
bool in_schubert_cell(const RealForm &rf, const SignedPerm &w, const std::vector<ExactVector> &chain);

// One fixed flag, located in the Iwasawa-Schubert decomposition.
struct OracleEntry {
    SignedPerm flag;
    SignedPerm cell;
    bool split = false;
    Signature signature;
};

// Every fixed flag of a form with its cell, split flag and signature.
struct OracleTable {
    RealForm rf;
    std::vector<OracleEntry> entries; // canonical order of flag labels

    // split flags in cell w with signature alpha (all signatures if alpha is empty)
    std::vector<SignedPerm> points(const SignedPerm &w, const Signature &alpha = {}) const;
    // cells containing at least one split fixed flag
    std::set<SignedPerm> cells_meeting_cycles() const;
    std::map<Signature, std::vector<SignedPerm>> by_domain(const SignedPerm &w) const;
    std::set<Signature> domains() const;
};

// The rank-matrix sweep over all fixed flags.  parallel=true fans out with
// OpenMP; results land in index order so both paths return identical tables.
OracleTable build_oracle(const RealForm &rf, bool parallel = true);
const OracleTable &oracle(const RealForm &rf);

} // namespace flagdom
