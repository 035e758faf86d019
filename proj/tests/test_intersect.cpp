#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdom/classify.hpp"
#include "flagdom/intersect.hpp"
#include "oracles.hpp"

#include <set>

using namespace flagdom;

namespace {

std::set<SignedPerm> labels(const IntersectionReport &r) {
    std::set<SignedPerm> out;
    for (const auto &p : r.points) out.insert(p.label);
    return out;
}

std::set<SignedPerm> as_set(const std::vector<SignedPerm> &v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("supset for Sp(6,R)") {
    auto rf = make_spr(3);
    auto r = supset(rf, parse_perm("-3,-1,-2", Family::FullSign));
    CHECK(r.method == "supset");
    // the listed variants of w, carried to torus labels by negation
    std::set<SignedPerm> want;
    for (const auto &v : oracles::perms({{-3, -1, -2}, {3, -1, -2}, {-3, 1, -2}, {-3, -1, 2},
                                         {3, 1, -2}, {-3, 1, 2}, {3, -1, 2}, {3, 1, 2}},
                                        Family::FullSign))
        want.insert(psi(rf, v));
    CHECK(labels(r) == want);
    CHECK(r.domains_touched() == 8);
    CHECK(r.points_per_domain() == 1);
}

TEST_CASE("supset sizes") {
    for (int n = 1; n <= 5; ++n) {
        auto r = supset(make_spr(n), super_generous(n));
        CHECK(r.total_points() == (1u << n));
        CHECK(r.domains_touched() == (1u << n));
    }
    CHECK_THROWS(supset(make_spr(3), parse_perm("-3,1,-2", Family::FullSign)));
}

TEST_CASE("supset for SO*(2n)") {
    CHECK(supset_sostar(make_sostar(4), super_dense(4)).method == "supset_e");
    CHECK(supset_sostar(make_sostar(3), super_dense(3)).method == "supset_o");
    for (int n = 2; n <= 5; ++n) {
        auto r = supset_sostar(make_sostar(n), super_dense(n));
        CHECK(r.total_points() == (1u << (n - 1)));
        for (const auto &p : r.points) CHECK(p.label.negatives() % 2 == 0);
    }
}

TEST_CASE("swite for SO(6,4)") {
    auto rf = make_sopq(6, 4);
    auto r = swite(rf, parse_perm("-3,5,-1,4,2", Family::EvenSign));
    auto listed = oracles::perms({{2, 5, 1, -3, -4},  {2, 5, -1, -3, 4},  {-2, 5, 1, 3, -4},  {-2, 5, -1, 3, 4},
                                  {-3, 5, 1, 2, -4},  {3, 5, 1, -2, -4},  {-3, 5, -1, 2, 4},  {3, 5, -1, -2, 4},
                                  {2, 5, -4, -3, 1},  {-2, 5, -4, 3, 1},  {2, 5, 4, -3, -1},  {-2, 5, 4, 3, -1},
                                  {-3, 5, -4, 2, 1},  {3, 5, -4, -2, 1},  {-3, 5, 4, 2, -1},  {3, 5, 4, -2, -1}},
                                 Family::EvenSign);
    CHECK(r.method == "swite");
    CHECK(labels(r) == as_set(listed));
    CHECK(r.total_points() == 16);
    CHECK(r.domains_touched() == 4);
    CHECK(r.points_per_domain() == 4);
    for (const auto &w : generate_perfect_harmonic(rf)) {
        auto s = swite(rf, w);
        CHECK(s.total_points() == 16);
        CHECK(s.domains_touched() == 4);
        CHECK(s.points_per_domain() == 4);
    }
}

TEST_CASE("swito for SO(5,3)") {
    auto rf = make_sopq(5, 3);
    auto r = swite(rf, parse_perm("-1,2,4,-3", Family::EvenSign));
    CHECK(r.method == "swito");
    CHECK(labels(r) == as_set(oracles::perms({{1, -2, 3, -4}, {-2, 1, 3, -4}, {2, -1, 3, -4}, {-1, 2, 3, -4}}, Family::EvenSign)));
    for (const auto &p : r.points) CHECK(p.signature.back() == '+');
}

TEST_CASE("swit for Sp(3,2)") {
    auto rf = make_sppq(3, 2);
    auto w = parse_perm("-4,3,-2,1,5", Family::FullSign);
    // listed with three repeated entries; 16 distinct remain
    auto listed = oracles::perms({{-3, 4, -2, 1, 5}, {3, -4, -2, 1, 5}, {4, -3, -2, 1, 5}, {-4, 3, -2, 1, 5},
                                  {-4, 3, 2, -1, 5}, {-4, 3, -1, 2, 5}, {-4, 3, 1, -2, 5}, {4, -3, -2, 1, 5},
                                  {4, -3, 2, -1, 5}, {4, -3, -1, 2, 5}, {4, -3, 1, -2, 5}, {-3, 4, -2, 1, 5},
                                  {-3, 4, 2, -1, 5}, {-3, 4, -1, 2, 5}, {-3, 4, 1, -2, 5}, {3, -4, -2, 1, 5},
                                  {3, -4, 2, -1, 5}, {3, -4, -1, 2, 5}, {3, -4, 1, -2, 5}},
                                 Family::FullSign);
    CHECK(listed.size() == 19);
    CHECK(as_set(switched_elements(rf, w)) == as_set(listed));
    auto r = swit(rf, w);
    CHECK(r.total_points() == 16);
    CHECK(r.domains_touched() == 4);
    CHECK(r.points_per_domain() == 4);
    CHECK_THROWS(swit(rf, parse_perm("-3,4,-2,1,5", Family::FullSign)));
}

TEST_CASE("every reported point is an isotropic split flag") {
    for (const auto &rf : {make_sopq(6, 4), make_sopq(5, 3), make_sppq(3, 2), make_sostar(4)})
        for (const auto &w : distinguished_elements(rf))
            for (const auto &p : intersect(rf, w).points) {
                auto f = fixed_flag(rf, p.label);
                CHECK(is_max_isotropic(rf, f.chain));
                CHECK(is_split(rf, f.chain));
                CHECK(flag_signature(rf, f.chain) == p.signature);
            }
}

TEST_CASE("intersection points by domain") {
    auto rf = make_sopq(6, 4);
    auto w = parse_perm("-1,2,-3,4,5", Family::EvenSign);
    auto r = intersect(rf, w);
    for (const auto &[alpha, pts] : r.by_domain) CHECK(intersection_points(rf, w, alpha) == pts);
    CHECK_THROWS(intersection_points(rf, w, "+++"));
    CHECK_THROWS(intersection_points(rf, w, "+++++x"));
}
