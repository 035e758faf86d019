#pragma once

#include "flagdom/exact.hpp"
#include "flagdom/weyl.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace flagdom {

enum class Kind { SpR, SOStar, SOpq, Sppq };

struct RealForm {
    Kind kind = Kind::SpR;
    int n = 0; // torus rank
    int p = 0, q = 0;
    int m = 0; // ambient dimension
    Family weyl = Family::FullSign;

    std::string code() const; // e.g. "so-pq:6,4"
    std::string name() const; // e.g. "SO(6,4)"
    bool operator==(const RealForm &o) const { return kind == o.kind && n == o.n && p == o.p && q == o.q; }
};

RealForm make_spr(int n);
RealForm make_sostar(int n);
RealForm make_sopq(int p, int q);
RealForm make_sppq(int p, int q);
// "sp2n-r:<n>", "so-star:<n>", "so-pq:<p>,<q>", "sp-pq:<p>,<q>".  Throws ParseError.
RealForm parse_form(const std::string &code);

int dim_flag_manifold(const RealForm &rf);
int dim_base_cycle(const RealForm &rf);
int dim_dual_schubert(const RealForm &rf);

SignedPerm psi(const RealForm &rf, const SignedPerm &w);

// Sequence over {+,-}, stored as a string such as "+-+".
using Signature = std::string;

// One basis vector of a flag model, addressed by a signed label (0 for the middle
// vector of odd orthogonal space).  sign is the sign of h(v,v): +1, -1 or 0.
struct LabeledVector {
    int label = 0;
    ExactVector v;
    int sign = 0;
};

// Concrete data behind a real form: the bilinear form b, the diagonal of h, and
// the two labelled bases.  Label +k / -k are b-dual partners.
struct FormModel {
    RealForm rf;
    ExactMatrix b;              // Gram matrix of b in the e-basis
    std::vector<int> h;         // h = sum_k h[k] v_k conj(w_k)
    std::vector<ExactVector> iw; // index label+n; iw[n] is the middle vector if m is odd
    std::vector<ExactVector> ts;

    const ExactVector &iwasawa(int label) const { return iw.at(label + rf.n); }
    const ExactVector &fixed(int label) const { return ts.at(label + rf.n); }
    bool has_middle() const { return rf.m % 2 == 1; }
};

const FormModel &model(const RealForm &rf);

// x_1..x_n, [middle], x_{-n}..x_{-1}
std::vector<ExactVector> iwasawa_basis(const RealForm &rf);
// Same order, each entry annotated with its label and h-sign.
std::vector<LabeledVector> standard_fixed_eigenbasis(const RealForm &rf);

int h_sign(const RealForm &rf, const ExactVector &v);

// Computed from the T_S-fixed flags (see flag_oracle).
std::set<Signature> enumerate_flag_domains(const RealForm &rf);

} // namespace flagdom
