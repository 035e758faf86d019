#include "flagdom/flag_oracle.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flagdom {

ExactScalar bilinear(const RealForm &rf, const ExactVector &v, const ExactVector &w) {
    if (static_cast<int>(v.size()) != rf.m || static_cast<int>(w.size()) != rf.m)
        throw std::invalid_argument("bilinear: dimension mismatch");
    const FormModel &M = model(rf);
    ExactScalar s;
    for (int a = 0; a < rf.m; ++a) {
        if (v[a].is_zero()) continue;
        for (int b = 0; b < rf.m; ++b)
            if (!M.b[a][b].is_zero() && !w[b].is_zero()) s += v[a] * M.b[a][b] * w[b];
    }
    return s;
}

ExactScalar hermitian(const RealForm &rf, const ExactVector &v, const ExactVector &w) {
    if (static_cast<int>(v.size()) != rf.m || static_cast<int>(w.size()) != rf.m)
        throw std::invalid_argument("hermitian: dimension mismatch");
    const FormModel &M = model(rf);
    ExactScalar s;
    for (int k = 0; k < rf.m; ++k)
        if (!v[k].is_zero() && !w[k].is_zero()) s += ExactScalar(M.h[k]) * v[k] * w[k].conj();
    return s;
}

std::vector<ExactVector> chain_from(const FormModel &M, const SignedPerm &s, bool iwasawa) {
    auto get = [&](int label) -> const ExactVector & { return iwasawa ? M.iwasawa(label) : M.fixed(label); };
    std::vector<ExactVector> c;
    c.reserve(M.rf.m);
    for (int x : s.e) c.push_back(get(x));
    if (M.has_middle()) c.push_back(get(0));
    for (int k = s.n() - 1; k >= 0; --k) c.push_back(get(-s[k]));
    return c;
}

FixedFlag fixed_flag(const RealForm &rf, const SignedPerm &s) {
    if (s.n() != rf.n) throw std::invalid_argument("fixed_flag: wrong rank");
    return {s, chain_from(model(rf), s, false)};
}

std::vector<ExactVector> iwasawa_flag(const RealForm &rf, const SignedPerm &w) {
    if (w.n() != rf.n) throw std::invalid_argument("iwasawa_flag: wrong rank");
    return chain_from(model(rf), w, true);
}

bool is_max_isotropic(const RealForm &rf, const std::vector<ExactVector> &chain) {
    const int m = rf.m;
    if (static_cast<int>(chain.size()) != m || rank(chain) != m) return false;
    for (int a = 0; a < m; ++a)
        for (int b = 0; a + b + 2 <= m; ++b)
            if (!bilinear(rf, chain[a], chain[b]).is_zero()) return false;
    return true;
}

Signature flag_signature(const RealForm &rf, const std::vector<ExactVector> &chain) {
    Signature s;
    for (int k = 0; k < rf.n; ++k) {
        int h = h_sign(rf, chain[k]);
        s += h > 0 ? '+' : (h < 0 ? '-' : (k == rf.n - 1 ? '+' : '0'));
    }
    return s;
}

namespace {

int rank_on(const std::vector<ExactVector> &rows, int count, const std::vector<int> &cols) {
    ExactMatrix a;
    a.reserve(count);
    for (int i = 0; i < count; ++i) {
        ExactVector r;
        r.reserve(cols.size());
        for (int c : cols) r.push_back(rows[i][c]);
        a.push_back(std::move(r));
    }
    return rank(std::move(a));
}

} // namespace

bool is_split(const RealForm &rf, const std::vector<ExactVector> &chain) {
    const FormModel &M = model(rf);
    std::vector<int> plus, minus;
    for (int k = 0; k < rf.m; ++k) (M.h[k] > 0 ? plus : minus).push_back(k);
    for (int i = 1; i <= rf.m; ++i) {
        if (rf.m % 2 == 0 && rf.weyl == Family::EvenSign && i == rf.n) continue;
        // dim(V_i n E^+) = i - rank of V_i projected to E^-, and symmetrically
        int in_plus = i - rank_on(chain, i, minus);
        int in_minus = i - rank_on(chain, i, plus);
        if (in_plus + in_minus != i) return false;
    }
    return true;
}

std::vector<FixedFlag> enumerate_fixed_flags(const RealForm &rf, int cap) {
    if (rf.n > cap) throw std::invalid_argument("fixed-flag enumeration is capped at n = " + std::to_string(cap));
    std::vector<FixedFlag> out;
    for (const auto &s : enumerate_group(rf.n, rf.weyl)) {
        FixedFlag f = fixed_flag(rf, s);
        if (is_max_isotropic(rf, f.chain)) out.push_back(std::move(f));
    }
    return out;
}

RankMatrix schubert_rank_matrix(const RealForm &rf, const SignedPerm &w) {
    const int m = rf.m, n = rf.n;
    std::vector<int> labels(w.e);
    if (m % 2) labels.push_back(0);
    for (int k = n - 1; k >= 0; --k) labels.push_back(-w[k]);
    auto pos = [&](int x) { return x > 0 ? x : (x == 0 ? n + 1 : m + 1 + x); };
    RankMatrix r(m + 1, std::vector<int>(m + 1, 0));
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j <= m; ++j) r[i][j] = r[i - 1][j] + (pos(labels[i - 1]) <= j ? 1 : 0);
    return r;
}

namespace {

// Rows of the chain written in Iwasawa coordinates.
std::vector<ExactVector> iwasawa_coordinates(const RealForm &rf, const std::vector<ExactVector> &chain) {
    auto basis = iwasawa_basis(rf);
    std::vector<ExactVector> out;
    out.reserve(chain.size());
    for (const auto &v : chain) out.push_back(coordinates(basis, v));
    return out;
}

} // namespace

RankMatrix rank_matrix(const RealForm &rf, const std::vector<ExactVector> &chain) {
    const int m = rf.m;
    auto coords = iwasawa_coordinates(rf, chain);
    RankMatrix r(m + 1, std::vector<int>(m + 1, 0));
    // For each j, insert rows one at a time into an echelon form over the
    // columns j..m-1 (0-based); rank after i rows is rank(V_i mod F_j).
    for (int j = 0; j <= m; ++j) {
        std::vector<std::pair<int, ExactVector>> echelon; // pivot column, reduced row
        for (int i = 1; i <= m; ++i) {
            ExactVector v(coords[i - 1].begin() + j, coords[i - 1].end());
            for (const auto &[pc, row] : echelon) {
                if (v[pc].is_zero()) continue;
                ExactScalar f = v[pc] / row[pc];
                v = axpy(v, -f, row);
            }
            int pc = 0;
            while (pc < static_cast<int>(v.size()) && v[pc].is_zero()) ++pc;
            if (pc < static_cast<int>(v.size())) echelon.emplace_back(pc, std::move(v));
            r[i][j] = i - static_cast<int>(echelon.size());
        }
    }
    return r;
}

bool in_schubert_cell(const RealForm &rf, const SignedPerm &w, const std::vector<ExactVector> &chain) {
    return rank_matrix(rf, chain) == schubert_rank_matrix(rf, w);
}

std::vector<SignedPerm> OracleTable::points(const SignedPerm &w, const Signature &alpha) const {
    std::vector<SignedPerm> out;
    for (const auto &e : entries)
        if (e.split && e.cell == w && (alpha.empty() || e.signature == alpha)) out.push_back(e.flag);
    return out;
}

std::set<SignedPerm> OracleTable::cells_meeting_cycles() const {
    std::set<SignedPerm> out;
    for (const auto &e : entries)
        if (e.split) out.insert(e.cell);
    return out;
}

std::map<Signature, std::vector<SignedPerm>> OracleTable::by_domain(const SignedPerm &w) const {
    std::map<Signature, std::vector<SignedPerm>> out;
    for (const auto &e : entries)
        if (e.split && e.cell == w) out[e.signature].push_back(e.flag);
    return out;
}

std::set<Signature> OracleTable::domains() const {
    std::set<Signature> out;
    for (const auto &e : entries)
        if (e.split) out.insert(e.signature);
    return out;
}

OracleTable build_oracle(const RealForm &rf, bool parallel) {
    const auto group = enumerate_group(rf.n, rf.weyl);
    std::map<RankMatrix, SignedPerm> cell_of;
    for (const auto &w : group) {
        auto [it, fresh] = cell_of.emplace(schubert_rank_matrix(rf, w), w);
        if (!fresh) throw std::logic_error("two Weyl elements share a rank matrix");
    }
    model(rf); // build the cached model before threads touch it

    std::vector<FixedFlag> flags = enumerate_fixed_flags(rf);
    const long count = static_cast<long>(flags.size());
    std::vector<OracleEntry> slots(count);
    std::vector<int> bad(count, 0);

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long k = 0; k < count; ++k) {
        const FixedFlag &f = flags[k];
        OracleEntry e;
        e.flag = f.label;
        auto it = cell_of.find(rank_matrix(rf, f.chain));
        if (it == cell_of.end()) {
            bad[k] = 1;
            continue;
        }
        e.cell = it->second;
        e.split = is_split(rf, f.chain);
        e.signature = flag_signature(rf, f.chain);
        slots[k] = std::move(e);
    }
    for (long k = 0; k < count; ++k)
        if (bad[k]) throw std::logic_error("fixed flag " + flags[k].label.str() + " has no Schubert cell");
    return {rf, std::move(slots)};
}

const OracleTable &oracle(const RealForm &rf) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<OracleTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(rf.code());
        if (it != cache.end()) return *it->second;
    }
    auto t = std::make_unique<OracleTable>(build_oracle(rf));
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[rf.code()];
    if (!slot) slot = std::move(t);
    return *slot;
}

std::set<Signature> enumerate_flag_domains(const RealForm &rf) {
    std::set<Signature> out;
    for (const auto &f : enumerate_fixed_flags(rf))
        if (is_split(rf, f.chain)) out.insert(flag_signature(rf, f.chain));
    return out;
}

} // namespace flagdom
