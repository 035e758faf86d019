#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdom/flag_oracle.hpp"
#include "flagdom/real_forms.hpp"

using namespace flagdom;

TEST_CASE("form codes") {
    auto rf = parse_form("so-pq:6,4");
    CHECK(rf.kind == Kind::SOpq);
    CHECK(rf.n == 5);
    CHECK(rf.m == 10);
    CHECK(rf.weyl == Family::EvenSign);
    CHECK(rf.code() == "so-pq:6,4");
    CHECK(rf.name() == "SO(6,4)");
    CHECK(parse_form("so-pq:5,2").weyl == Family::FullSign);
    CHECK(parse_form("sp-pq:3,2").n == 5);
    CHECK(parse_form("sp2n-r:3").m == 6);
    CHECK(parse_form("so-star:4").weyl == Family::EvenSign);
    for (const char *bad : {"so-pq:2,4", "sp-pq:1,0", "so-star:1", "sp2n-r:0", "su-pq:2,1", "so-pq:4", "so-pq:99999999999,1"})
        CHECK_THROWS_AS(parse_form(bad), ParseError);
}

TEST_CASE("dimension identity over the grid") {
    for (int p = 1; p <= 8; ++p)
        for (int q = 1; q <= p; ++q) {
            if (p + q >= 3) {
                auto so = make_sopq(p, q);
                CHECK(dim_base_cycle(so) + dim_dual_schubert(so) == dim_flag_manifold(so));
            }
            auto sp = make_sppq(p, q);
            CHECK(dim_base_cycle(sp) + dim_dual_schubert(sp) == dim_flag_manifold(sp));
        }
    for (int n = 2; n <= 8; ++n) {
        CHECK(dim_base_cycle(make_spr(n)) + dim_dual_schubert(make_spr(n)) == n * n);
        CHECK(dim_base_cycle(make_sostar(n)) + dim_dual_schubert(make_sostar(n)) == n * n - n);
    }
    CHECK(dim_dual_schubert(make_sopq(6, 4)) == 12);
    CHECK(dim_dual_schubert(make_sopq(5, 3)) == 7);
    CHECK(dim_dual_schubert(make_sppq(3, 2)) == 12);
}

TEST_CASE("bilinear forms") {
    auto spr = make_spr(3), sos = make_sostar(3);
    CHECK(bilinear(spr, unit(6, 1), unit(6, 6)) == ExactScalar(1));
    CHECK(bilinear(spr, unit(6, 6), unit(6, 1)) == ExactScalar(-1));
    CHECK(bilinear(sos, unit(6, 1), unit(6, 6)) == ExactScalar(1));
    CHECK(bilinear(sos, unit(6, 6), unit(6, 1)) == ExactScalar(1));
    CHECK_THROWS(bilinear(spr, unit(4, 1), unit(6, 1)));
}

TEST_CASE("hermitian forms") {
    auto spr = make_spr(3);
    CHECK(hermitian(spr, unit(6, 1), unit(6, 1)) == ExactScalar(1));
    CHECK(hermitian(spr, unit(6, 6), unit(6, 6)) == ExactScalar(-1));
    auto sp = make_sppq(2, 1);
    CHECK(hermitian(sp, unit(6, 1), unit(6, 1)) == ExactScalar(-1));
    auto so = make_sopq(4, 2);
    auto v = axpy(unit(6, 1), kI, unit(6, 2));
    CHECK(hermitian(so, v, v) == ExactScalar(-2));
}

TEST_CASE("ambient signature of h") {
    auto count = [](const RealForm &rf) {
        int pos = 0, neg = 0;
        for (int s : model(rf).h) (s > 0 ? pos : neg) += 1;
        return std::pair{pos, neg};
    };
    CHECK(count(make_spr(3)) == std::pair{3, 3});
    CHECK(count(make_sostar(3)) == std::pair{3, 3});
    CHECK(count(make_sopq(6, 4)) == std::pair{6, 4});
    CHECK(count(make_sopq(5, 3)) == std::pair{5, 3});
    CHECK(count(make_sppq(3, 2)) == std::pair{6, 4});
}

TEST_CASE("labelled bases pair up under b") {
    for (const auto &rf : {make_spr(3), make_sostar(3), make_sostar(4), make_sopq(4, 2), make_sopq(5, 3), make_sopq(3, 2),
                           make_sopq(4, 3), make_sppq(2, 1), make_sppq(3, 2)}) {
        const auto &M = model(rf);
        for (bool iw : {true, false})
            for (int a = -rf.n; a <= rf.n; ++a)
                for (int c = -rf.n; c <= rf.n; ++c) {
                    if (a == 0 || c == 0) continue;
                    const auto &x = iw ? M.iwasawa(a) : M.fixed(a);
                    const auto &y = iw ? M.iwasawa(c) : M.fixed(c);
                    INFO(rf.name(), " ", a, " ", c, " iwasawa=", iw);
                    CHECK(bilinear(rf, x, y).is_zero() == (a != -c));
                }
        auto eig = standard_fixed_eigenbasis(rf);
        CHECK(static_cast<int>(eig.size()) == rf.m);
        for (const auto &lv : eig) CHECK(h_sign(rf, lv.v) == lv.sign);
    }
}

TEST_CASE("psi") {
    auto spr = make_spr(3);
    CHECK(psi(spr, parse_perm("-3,-1,-2", Family::FullSign)).str() == "3,1,2");
    auto sos = make_sostar(3);
    CHECK(psi(sos, parse_perm("3,-2,-1", Family::EvenSign)).str() == "3,2,1");
    auto sp = make_sppq(3, 2);
    // +-(2i-1) -> +-(2q-i+1), +-2i -> -+i, larger values fixed
    CHECK(psi(sp, parse_perm("1,2,3,4,5", Family::FullSign)).str() == "4,-1,3,-2,5");
    auto so = make_sopq(6, 4);
    // -+(2i-1) -> +-i, -+2i -> +-(q-i+1)
    CHECK(psi(so, parse_perm("-1,2,-3,4,5", Family::EvenSign)).str() == "1,-4,2,-3,5");
    auto so53 = make_sopq(5, 3);
    CHECK(psi(so53, parse_perm("-1,2,4,-3", Family::EvenSign)).str() == "1,-2,3,-4");
    for (const auto &rf : {spr, sos, sp, so, so53, make_sopq(5, 2), make_sopq(4, 3)}) {
        auto g = enumerate_group(rf.n, rf.weyl);
        std::set<SignedPerm> img;
        for (const auto &w : g) img.insert(psi(rf, w));
        CHECK(img.size() == g.size());
    }
}
