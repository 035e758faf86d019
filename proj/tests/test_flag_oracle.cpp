#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdom/classify.hpp"
#include "flagdom/flag_oracle.hpp"

#include <algorithm>
#include <set>

using namespace flagdom;

namespace {

std::vector<ExactVector> chain_of(const RealForm &rf, std::vector<ExactVector> head) {
    // complete with the b-dual partners of the head, for the SpR standard model
    for (int k = static_cast<int>(head.size()); k >= 1; --k) {
        for (int j = 1; j <= rf.m; ++j) {
            auto v = unit(rf.m, j);
            if (!bilinear(rf, head[k - 1], v).is_zero()) {
                head.push_back(v);
                break;
            }
        }
    }
    return head;
}

} // namespace

TEST_CASE("exact scalars") {
    ExactScalar a{Rational(1), Rational(2)};
    CHECK(a * a.inv() == ExactScalar(1));
    CHECK(kI * kI == ExactScalar(-1));
    CHECK((a / a) == ExactScalar(1));
    CHECK(a.conj().im == -2);
    CHECK(vector_str(axpy(unit(4, 1), kI, unit(4, 2))) == "e1+ie2");
    CHECK_THROWS(ExactScalar().inv());
}

TEST_CASE("exact rank") {
    ExactMatrix m = {axpy(unit(3, 1), kI, unit(3, 2)), axpy(unit(3, 2), -kI, unit(3, 1)), unit(3, 3)};
    // second row is -i times the first
    CHECK(rank(m) == 2);
    CHECK(rank_columns(m, 2, 3) == 1);
    CHECK(rank_columns(m, 0, 1) == 1);
    ExactMatrix basis = {unit(2, 1), axpy(unit(2, 1), ExactScalar(1), unit(2, 2))};
    auto c = coordinates(basis, unit(2, 2));
    CHECK(c[0] == ExactScalar(-1));
    CHECK(c[1] == ExactScalar(1));
}

TEST_CASE("maximal isotropy") {
    auto rf = make_spr(3);
    CHECK(is_max_isotropic(rf, chain_of(rf, {unit(6, 1), unit(6, 2), unit(6, 3)})));
    CHECK_FALSE(is_max_isotropic(rf, chain_of(rf, {unit(6, 1), unit(6, 6), unit(6, 2)})));
    for (const auto &f : enumerate_fixed_flags(rf)) CHECK(is_max_isotropic(rf, f.chain));
}

TEST_CASE("signatures and the split test") {
    auto rf = make_spr(3);
    CHECK(flag_signature(rf, chain_of(rf, {unit(6, 1), unit(6, 2), unit(6, 3)})) == "+++");
    CHECK(flag_signature(rf, chain_of(rf, {unit(6, 6), unit(6, 2), unit(6, 3)})) == "-++");
    for (const auto &f : enumerate_fixed_flags(rf)) CHECK(is_split(rf, f.chain));
    auto mixed = chain_of(rf, {axpy(unit(6, 1), ExactScalar(1), unit(6, 4)), unit(6, 2), unit(6, 3)});
    CHECK_FALSE(is_split(rf, mixed));
    for (int n = 1; n <= 3; ++n) {
        auto r = make_spr(n);
        CHECK_FALSE(is_split(r, iwasawa_flag(r, identity(n, Family::FullSign))));
    }
}

TEST_CASE("fixed flag counts") {
    CHECK(enumerate_fixed_flags(make_spr(2)).size() == 8);
    CHECK(enumerate_fixed_flags(make_sostar(2)).size() == 4);
    CHECK(enumerate_fixed_flags(make_sopq(6, 4)).size() == 1920);
    CHECK_THROWS(enumerate_fixed_flags(make_spr(6)));
}

TEST_CASE("rank matrices") {
    for (const auto &rf : {make_spr(2), make_spr(3), make_sostar(3), make_sopq(4, 2), make_sopq(3, 2), make_sppq(2, 1)}) {
        const int m = rf.m;
        auto id = schubert_rank_matrix(rf, identity(rf.n, rf.weyl));
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j) CHECK(id[i][j] == std::min(i, j));
        SignedPerm w0 = identity(rf.n, rf.weyl);
        for (int &x : w0.e) x = -x;
        if (w0.negatives() % 2 && rf.weyl == Family::EvenSign) w0.e[0] = 1;
        if (w0.negatives() == rf.n) {
            auto r = schubert_rank_matrix(rf, w0);
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= m; ++j) CHECK(r[i][j] == std::max(0, i + j - m));
        }
        std::set<RankMatrix> seen;
        for (const auto &w : enumerate_group(rf.n, rf.weyl)) {
            seen.insert(schubert_rank_matrix(rf, w));
            auto chain = iwasawa_flag(rf, w);
            CHECK(is_max_isotropic(rf, chain));
            CHECK(in_schubert_cell(rf, w, chain));
            CHECK(rank_matrix(rf, chain) == schubert_rank_matrix(rf, w));
            if (!(w == identity(rf.n, rf.weyl)))
                CHECK_FALSE(in_schubert_cell(rf, w, iwasawa_flag(rf, identity(rf.n, rf.weyl))));
        }
        CHECK(seen.size() == group_order(rf.n, rf.weyl));
    }
}

TEST_CASE("super generous cell meets the all-negative domain") {
    auto rf = make_spr(2);
    auto w = super_generous(2);
    auto f = fixed_flag(rf, parse_perm("-2,-1", Family::FullSign));
    CHECK(flag_signature(rf, f.chain) == "--");
    CHECK(in_schubert_cell(rf, w, f.chain));
}

TEST_CASE("serial and parallel oracles agree") {
    for (const auto &rf : {make_spr(3), make_sostar(4), make_sopq(4, 2), make_sopq(5, 3), make_sppq(2, 1)}) {
        auto a = build_oracle(rf, false), b = build_oracle(rf, true);
        REQUIRE(a.entries.size() == b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            CHECK(a.entries[i].flag == b.entries[i].flag);
            CHECK(a.entries[i].cell == b.entries[i].cell);
            CHECK(a.entries[i].split == b.entries[i].split);
            CHECK(a.entries[i].signature == b.entries[i].signature);
        }
    }
}

TEST_CASE("oracle on small forms") {
    auto rf = make_spr(2);
    const auto &t = oracle(rf);
    CHECK(t.entries.size() == 8);
    CHECK(t.domains().size() == 4);
    std::set<SignedPerm> generous;
    for (const auto &w : enumerate_group(2, Family::FullSign))
        if (is_generous(w)) generous.insert(w);
    CHECK(t.cells_meeting_cycles() == generous);
    // minimal cells without a remainder in SO(4,4) are the generated ones
    auto so = make_sopq(4, 4);
    std::set<SignedPerm> minimal;
    for (const auto &w : oracle(so).cells_meeting_cycles())
        if (length_paper(w) == dim_dual_schubert(so)) minimal.insert(w);
    auto gen = generate_perfect_harmonic(so);
    CHECK(minimal == std::set<SignedPerm>(gen.begin(), gen.end()));
}
