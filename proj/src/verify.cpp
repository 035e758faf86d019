#include "flagdom/verify.hpp"

#include "flagdom/classify.hpp"
#include "flagdom/flag_oracle.hpp"
#include "flagdom/intersect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace flagdom {

namespace {

std::string join(const std::vector<SignedPerm> &v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::string("(") + v[i].str() + ")";
    return s + "}";
}

const std::map<std::string, std::vector<Kind>> &applicability() {
    static const std::map<std::string, std::vector<Kind>> table = {
        {"length-agreement", {Kind::SpR, Kind::SOStar, Kind::SOpq, Kind::Sppq}},
        {"dimension-identity", {Kind::SpR, Kind::SOStar, Kind::SOpq, Kind::Sppq}},
        {"rank-matrix-consistency", {Kind::SpR, Kind::SOStar, Kind::SOpq, Kind::Sppq}},
        {"generous-equivalence", {Kind::SpR}},
        {"dense-equivalence", {Kind::SOStar}},
        {"harmonic-nonemptiness", {Kind::SOpq}},
        {"major-nonemptiness", {Kind::Sppq}},
        {"uniqueness", {Kind::SpR, Kind::SOStar}},
        {"supset-completeness", {Kind::SpR, Kind::SOStar}},
        {"swite-completeness", {Kind::SOpq}},
        {"swit-completeness", {Kind::Sppq}},
        {"saturation", {Kind::SOpq, Kind::Sppq}},
    };
    return table;
}

// Order used by theorems_for and "all".
const std::vector<std::string> kOrder = {
    "length-agreement",      "dimension-identity", "rank-matrix-consistency", "generous-equivalence",
    "dense-equivalence",     "harmonic-nonemptiness", "major-nonemptiness",   "uniqueness",
    "supset-completeness",   "swite-completeness", "swit-completeness",       "saturation",
};

void finish(VerificationReport &r) {
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    r.pass = r.counterexamples.empty();
}

void length_agreement(VerificationReport &r) {
    for (const auto &w : enumerate_group(r.rf.n, r.rf.weyl, kBfsCap)) {
        ++r.checked;
        int a = length_paper(w), b = length_bfs(w);
        if (a != b) r.counterexamples.push_back(w.str() + ": box " + std::to_string(a) + ", bfs " + std::to_string(b));
    }
}

void dimension_identity(VerificationReport &r) {
    ++r.checked;
    int c = dim_base_cycle(r.rf), d = dim_dual_schubert(r.rf), z = dim_flag_manifold(r.rf);
    if (c + d != z)
        r.counterexamples.push_back(std::to_string(c) + " + " + std::to_string(d) + " != " + std::to_string(z));
}

void rank_consistency(VerificationReport &r) {
    for (const auto &w : enumerate_group(r.rf.n, r.rf.weyl)) {
        ++r.checked;
        auto chain = iwasawa_flag(r.rf, w);
        if (!is_max_isotropic(r.rf, chain)) r.counterexamples.push_back(w.str() + ": w(F_I) not isotropic");
        else if (!in_schubert_cell(r.rf, w, chain)) r.counterexamples.push_back(w.str() + ": rank matrix mismatch");
    }
}

void nonemptiness(VerificationReport &r) {
    const OracleTable &t = oracle(r.rf);
    auto hit = t.cells_meeting_cycles();
    for (const auto &w : enumerate_group(r.rf.n, r.rf.weyl)) {
        ++r.checked;
        bool pred = chapter_predicate(r.rf, w), geo = hit.count(w) > 0;
        if (pred != geo)
            r.counterexamples.push_back(w.str() + ": predicate " + (pred ? "true" : "false") + ", oracle " +
                                        (geo ? "nonempty" : "empty"));
    }
}

void uniqueness(VerificationReport &r) {
    const int target = dim_dual_schubert(r.rf);
    std::vector<SignedPerm> found;
    for (const auto &w : enumerate_group(r.rf.n, r.rf.weyl)) {
        ++r.checked;
        if (chapter_predicate(r.rf, w) && length_paper(w) == target) found.push_back(w);
    }
    auto want = distinguished_elements(r.rf);
    if (found != want) r.counterexamples.push_back("length " + std::to_string(target) + ": found " + join(found) + ", expected " + join(want));
}

void completeness(VerificationReport &r) {
    const OracleTable &t = oracle(r.rf);
    auto domains = t.domains();
    for (const auto &w : distinguished_elements(r.rf)) {
        auto rep = intersect(r.rf, w);
        for (const auto &alpha : domains) {
            ++r.checked;
            auto algo = rep.by_domain.count(alpha) ? rep.by_domain.at(alpha) : std::vector<SignedPerm>{};
            auto geo = t.points(w, alpha);
            if (algo != geo)
                r.counterexamples.push_back(w.str() + " @ " + alpha + ": algorithm " + join(algo) + ", oracle " + join(geo));
        }
        for (const auto &[alpha, pts] : rep.by_domain)
            if (!domains.count(alpha)) r.counterexamples.push_back(w.str() + " @ " + alpha + ": not a flag domain");
    }
}

void saturation(VerificationReport &r) {
    if (r.rf.n != r.rf.q + 1) throw std::invalid_argument("saturation needs n = q + 1");
    const OracleTable &t = oracle(r.rf);
    const Signature alpha = alternating_signature(r.rf);
    for (const auto &w : distinguished_elements(r.rf)) {
        ++r.checked;
        if (t.points(w, alpha).empty()) r.counterexamples.push_back(w.str() + " misses " + alpha);
    }
}

} // namespace

Signature alternating_signature(const RealForm &rf) {
    Signature s;
    for (int k = 0; k < rf.n; ++k) s += k % 2 ? '-' : '+';
    if (rf.kind == Kind::SOpq && rf.q % 2 == 1) s.back() = '+';
    return s;
}

bool known_theorem(const std::string &id) { return applicability().count(id) > 0; }

std::vector<std::string> theorems_for(const RealForm &rf) {
    std::vector<std::string> out;
    for (const auto &id : kOrder) {
        const auto &kinds = applicability().at(id);
        if (std::find(kinds.begin(), kinds.end(), rf.kind) == kinds.end()) continue;
        if (id == "saturation" && rf.n != rf.q + 1) continue;
        out.push_back(id);
    }
    return out;
}

VerificationReport verify(const RealForm &rf, const std::string &theorem) {
    if (!known_theorem(theorem)) throw std::invalid_argument("unknown theorem '" + theorem + "'");
    const auto &kinds = applicability().at(theorem);
    if (std::find(kinds.begin(), kinds.end(), rf.kind) == kinds.end())
        throw std::invalid_argument("theorem '" + theorem + "' does not apply to " + rf.name());
    VerificationReport r;
    r.theorem = theorem;
    r.rf = rf;
    if (theorem == "length-agreement") length_agreement(r);
    else if (theorem == "dimension-identity") dimension_identity(r);
    else if (theorem == "rank-matrix-consistency") rank_consistency(r);
    else if (theorem == "uniqueness") uniqueness(r);
    else if (theorem == "saturation") saturation(r);
    else if (theorem.find("completeness") != std::string::npos) completeness(r);
    else nonemptiness(r);
    finish(r);
    return r;
}

} // namespace flagdom
