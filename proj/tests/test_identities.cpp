#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "cbsum/identities.hpp"

using namespace cbsum;

namespace {

IdentityParams params_n(int n) { return IdentityParams{n, 0, {}}; }

bool all_equal(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.equal)
            return false;
    return !reports.empty();
}

}  // namespace

TEST_CASE("registry holds exactly the published keys") {
    std::set<std::string> expected = {
        "riordan-partial", "dual-inverse", "s0-closed",
        "s-closed-r1", "s-closed-r2", "s-closed-r3",
        "s0O-closed", "sO-closed-r1", "sO-closed-r2", "sO-closed-r3",
        "sO-mod-r1", "sO-mod-r2", "sO-mod-r3",
        "s0H-closed", "sH-closed-r1", "sH-closed-r2", "sH-closed-r3",
        "s02H-closed", "s2H-r1",
        "general-id",
        "id-explicit-r0", "id-explicit-r1", "id-explicit-r2", "id-explicit-r3",
        "sO-stirling", "odd-inverse-general", "odd-inverse-r0", "ohn-complement",
        "zha-general", "zha-neg-half", "zha-pos-half",
        "z15-general", "z15-neg-half", "z15-pos-half",
        "k194", "k194-aux", "inverse-square", "gbx", "binom-transform-final",
        "gould-base"};
    std::set<std::string> actual;
    for (const auto& id : list_identities())
        actual.insert(id.key);
    CHECK(actual == expected);
    CHECK(list_identities().size() == expected.size());  // no duplicates
    CHECK_THROWS_AS(find_identity("nonsense"), std::domain_error);
}

TEST_CASE("evaluate_side spot values") {
    CHECK(evaluate_side("riordan-partial", Side::lhs, params_n(2)) == Rational(3, 8));
    CHECK(evaluate_side("riordan-partial", Side::rhs, params_n(2)) == Rational(3, 8));
    CHECK(evaluate_side("general-id", Side::lhs, {1, 0, Rational(1, 2)}) == Rational(-1));
    CHECK(evaluate_side("k194", Side::rhs, params_n(1)) == Rational(1, 9));
    CHECK(evaluate_side("k194", Side::lhs, params_n(1)) == Rational(1, 9));
}

TEST_CASE("check_identity spot values") {
    auto dual = check_identity("dual-inverse", params_n(2));
    CHECK(dual.lhs == Rational(-1, 3));
    CHECK(dual.rhs == Rational(-1, 3));
    CHECK(dual.equal);

    auto oir0 = check_identity("odd-inverse-r0", params_n(2));
    CHECK(oir0.lhs == Rational(1, 2));
    CHECK(oir0.rhs == Rational(1, 2));
    CHECK(oir0.equal);

    auto ohn = check_identity("ohn-complement", params_n(2));
    CHECK(ohn.lhs == Rational(1, 8));
    CHECK(ohn.rhs == Rational(1, 8));
    CHECK(ohn.equal);

    auto inv2 = check_identity("inverse-square", params_n(0));
    CHECK(inv2.lhs == Rational(1));
    CHECK(inv2.rhs == Rational(1));
    CHECK(inv2.equal);
}

TEST_CASE("printed particular forms of the Stirling closed forms") {
    // r = 0: (2n+1) 4^{-n} C(2n,n) (O_{n+1} - 1)
    for (int n = 0; n <= 20; ++n) {
        Rational expect = Rational(2 * n + 1) * weight(n) *
                          (odd_harmonic(n + 1) - Rational(1));
        CHECK(evaluate_side("sO-stirling", Side::rhs, {n, 0, {}}) == expect);
    }
    // r = 1: n(2n+1)/3 4^{-n} C(2n,n) (O_{n+1} - 1/3)
    for (int n = 0; n <= 20; ++n) {
        Rational expect = Rational(n) * Rational(2 * n + 1) / Rational(3) * weight(n) *
                          (odd_harmonic(n + 1) - Rational(1, 3));
        CHECK(evaluate_side("sO-stirling", Side::rhs, {n, 1, {}}) == expect);
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(check_identity("general-id", {1, 0, Rational(3)}), std::domain_error);
    CHECK_THROWS_AS(check_identity("general-id", {1, 0, {}}), std::domain_error);
    CHECK_THROWS_AS(check_identity("general-id", {-1, 0, Rational(1, 2)}),
                    std::domain_error);
    CHECK_THROWS_AS(check_identity("zha-pos-half", {0, 0, {}}), std::domain_error);
    CHECK_THROWS_AS(check_identity("id-explicit-r2", {3, 7, Rational(1, 2)}),
                    std::domain_error);
    CHECK_THROWS_AS(check_identity("riordan-partial", {3, 1, {}}), std::domain_error);
    CHECK_THROWS_AS(check_identity("gould-base", {3, 5, Rational(1, 2)}),
                    std::domain_error);
    // integer t presented as a ratio still rejected
    CHECK_THROWS_AS(check_identity("zha-general", {2, 1, Rational(6, 3)}),
                    std::domain_error);
}

TEST_CASE("sweep ordering is lexicographic and deterministic") {
    SweepGrid grid;
    grid.n_max = 2;
    grid.r_max = 1;
    grid.t_values = {Rational(1, 2), Rational(-1, 2)};
    auto reports = sweep("general-id", grid);
    REQUIRE(reports.size() == 3 * 2 * 2);
    CHECK(reports[0].params.n == 0);
    CHECK(reports[0].params.r == 0);
    CHECK(*reports[0].params.t == Rational(1, 2));
    CHECK(*reports[1].params.t == Rational(-1, 2));
    CHECK(reports[2].params.r == 1);
    CHECK(reports[4].params.n == 1);
    auto again = sweep("general-id", grid);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].params.n == reports[i].params.n);
        CHECK(again[i].params.r == reports[i].params.r);
        CHECK(again[i].lhs == reports[i].lhs);
    }
}

TEST_CASE("default sweeps hold for every registry entry") {
    for (const auto& id : list_identities()) {
        auto grid = default_grid(id, 12, 3);
        auto reports = sweep(id.key, grid);
        bool ok = all_equal(reports);
        CHECK_MESSAGE(ok, id.key);
    }
}

TEST_CASE("general identity specializes to the odd sum closed form") {
    // At t = -1/2: C(-1/2,k) = (-1)^k 4^{-k} C(2k,k) and the harmonic gap
    // collapses to -2 O_k, so the general left side is -2 S_r^O(n) and the
    // general right side is -2 times the sO-stirling right side.
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= 20; ++n) {
            Rational minus_two = Rational(-2);
            Rational general_lhs =
                evaluate_side("general-id", Side::lhs, {n, r, Rational(-1, 2)});
            CHECK(general_lhs == minus_two * sum_brute(SumFamily::odd, r, n));
            Rational general_rhs =
                evaluate_side("general-id", Side::rhs, {n, r, Rational(-1, 2)});
            CHECK(general_rhs ==
                  minus_two * evaluate_side("sO-stirling", Side::rhs, {n, r, {}}));
        }
    // cross-module coherence of the closed form itself
    for (int r = 0; r <= 4; ++r)
        for (int n = 0; n <= 25; ++n)
            CHECK(evaluate_side("sO-stirling", Side::rhs, {n, r, {}}) ==
                  sum_brute(SumFamily::odd, r, n));
}

TEST_CASE("explicit expansions match the general right side") {
    const Rational ts[] = {Rational(1, 2), Rational(-1, 2), Rational(1, 3),
                           Rational(7, 2), Rational(-5, 3)};
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= 10; ++n)
            for (const auto& t : ts) {
                std::string key = "id-explicit-r" + std::to_string(r);
                CHECK(evaluate_side(key, Side::rhs, {n, r, t}) ==
                      evaluate_side("general-id", Side::rhs, {n, r, t}));
            }
}

TEST_CASE("closed-form identities printed with specific small values") {
    // 1/(2n+1)^2 and -2n/(2n-1)^2 shapes
    for (int n = 1; n <= 15; ++n) {
        auto k = check_identity("k194", params_n(n));
        CHECK(k.equal);
        CHECK(k.rhs == Rational(1, Integer(2 * n + 1) * (2 * n + 1)));
        auto g = check_identity("gbx", params_n(n));
        CHECK(g.equal);
        CHECK(g.rhs == Rational(Integer(-2) * n, Integer(2 * n - 1) * (2 * n - 1)));
    }
}

TEST_CASE("gould seed identity across all sampled x") {
    const Rational ts[] = {Rational(1, 2), Rational(-1, 2), Rational(2, 5)};
    for (int n = 0; n <= 12; ++n)
        for (int xi = 0; xi < 5; ++xi)
            for (const auto& t : ts) {
                auto rep = check_identity("gould-base", {n, xi, t});
                CHECK_MESSAGE(rep.equal, "n=" << n << " xi=" << xi);
            }
}
