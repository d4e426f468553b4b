#include "doctest.h"
#include "novpot/critical.hpp"

using namespace novpot;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

MomentPolytope quartic_triangle() {
    MomentPolytope p;
    p.dimension = 2;
    p.facets = {{"D1", {1, 0}, Rational(0)},
                {"D2", {0, 1}, Rational(0)},
                {"D3", {-1, -4}, Rational(-4)}};
    return p;
}

MomentPolytope unit2_triangle() {
    MomentPolytope p;
    p.dimension = 2;
    p.facets = {{"", {1, 0}, Rational(0)},
                {"", {0, 1}, Rational(0)},
                {"", {-1, -1}, Rational(-2)}};
    return p;
}

PotentialFunction semitoric_potential() {
    PotentialTerm t;
    t.count = 2;
    t.coefficient = Cyclotomic::one(3);
    t.monomial = {0, -2};
    t.exponent = AffineExponent(q("2"), {q("0"), q("-2")});
    return build_potential(quartic_triangle(), 3, {1, 1, 1}, {t});
}

Cyclotomic cy(long long n, long long d = 1) {
    return Cyclotomic::from_rational(3, Rational(n) / Rational(d));
}

}  // namespace

TEST_CASE("leading system divides out the common T power") {
    PotentialFunction pf = semitoric_potential();
    CriticalSystem s = leading_system(pf, {q("2/3"), q("2/3")});
    REQUIRE(s.equations.size() == 2);
    CHECK(s.equations[0].to_string() == "-y1^-2*y2^-4 + 1");
    CHECK(s.equations[1].to_string() == "-4*y1^-1*y2^-5 - 4*y2^-3 + 1");

    PotentialFunction tri = build_potential(unit2_triangle(), 3, {}, {});
    CriticalSystem st = leading_system(tri, {q("2/3"), q("2/3")});
    CHECK(st.equations[0].to_string() == "-y1^-2*y2^-1 + 1");
    CHECK(st.equations[1].to_string() == "-y1^-1*y2^-2 + 1");
}

TEST_CASE("non-balanced fibers are rejected") {
    PotentialFunction pf = semitoric_potential();
    CHECK_THROWS_AS(leading_system(pf, {q("1/2"), q("1/2")}), non_balanced_fiber_error);
    // exterior points are rejected before balancing is even checked
    CHECK_THROWS_AS(leading_system(pf, {q("1"), q("1")}), invalid_fiber_error);
}

TEST_CASE("the quartic system solves into three points and one empty branch") {
    PotentialFunction pf = semitoric_potential();
    FiberPoint u{q("2/3"), q("2/3")};
    SolveReport r = solve(leading_system(pf, u));

    REQUIRE(r.points.size() == 3);
    REQUIRE(r.empty_branches.size() == 1);
    CHECK(r.unresolved.empty());

    CHECK(r.empty_branches[0].branch ==
          std::vector<std::string>{"y1*y2^2 = -1"});
    CHECK(r.empty_branches[0].residual == "1");

    Cyclotomic z = Cyclotomic::zeta(3);
    CHECK(r.points[0].y == std::vector<Cyclotomic>{cy(1, 4), cy(2)});
    CHECK(r.points[1].y == std::vector<Cyclotomic>{cy(1, 4) * z.pow(-2), cy(2) * z});
    CHECK(r.points[2].y == std::vector<Cyclotomic>{cy(1, 4) * z.pow(-4), cy(2) * z.pow(2)});

    for (const auto& p : r.points) {
        CHECK(p.y[0] * p.y[1].pow(2) == cy(1));   // y1 y2^2 = 1
        CHECK(p.y[1].pow(3) == cy(8));            // y2^3 = 8
        CHECK(verify_point(pf, u, p.y));
        CHECK(p.branch[0] == "y1*y2^2 = 1");
    }
}

TEST_CASE("the triangle system has the three diagonal roots of unity") {
    PotentialFunction tri = build_potential(unit2_triangle(), 3, {}, {});
    FiberPoint u{q("2/3"), q("2/3")};
    SolveReport r = solve(leading_system(tri, u));
    REQUIRE(r.points.size() == 3);
    CHECK(r.empty_branches.empty());
    CHECK(r.unresolved.empty());

    // brute-force oracle: exactly the diagonal cube roots of unity solve it
    std::vector<std::vector<Cyclotomic>> expected;
    for (int i = 0; i < 3; ++i) {
        Cyclotomic w = Cyclotomic::zeta_pow(3, i);
        expected.push_back({w, w});
    }
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& p : r.points)
            found = found || p.y == e;
        CHECK(found);
    }
    for (const auto& p : r.points) {
        CHECK(p.y[0] == p.y[1]);
        CHECK(p.y[0].pow(3) == cy(1));
        CHECK(verify_point(tri, u, p.y));
    }
}

TEST_CASE("verify_point rejects non-critical values") {
    PotentialFunction pf = semitoric_potential();
    FiberPoint u{q("2/3"), q("2/3")};
    CHECK(verify_point(pf, u, {cy(1, 4), cy(2)}));
    CHECK(!verify_point(pf, u, {cy(1), cy(1)}));
    // verify_point works at non-balanced fibers too
    CHECK(!verify_point(pf, {q("1/2"), q("1/2")}, {cy(1, 4), cy(2)}));
    CHECK_THROWS_AS(verify_point(pf, u, {cy(0), cy(2)}), math_error);
}

TEST_CASE("missing roots of unity propagate as field-extension errors") {
    PotentialFunction tri = build_potential(unit2_triangle(), 1, {}, {});
    FiberPoint u{q("2/3"), q("2/3")};
    try {
        solve(leading_system(tri, u));
        FAIL("expected needs_field_extension_error");
    } catch (const needs_field_extension_error& e) {
        CHECK(e.suggested_order == 3);
    }
}

TEST_CASE("constant equations prove branches empty") {
    // y1 y2 + 1 = 0 and (y1 y2)^(-1) + 1 = 0 are compatible; adding a
    // constant 1 kills everything.
    LaurentPoly eq1 = LaurentPoly::from_terms(
        2, 1, {{Cyclotomic::one(1), {1, 1}}, {Cyclotomic::one(1), {0, 0}}});
    LaurentPoly constant =
        LaurentPoly::from_terms(2, 1, {{Cyclotomic::from_rational(1, Rational(5)), {0, 0}}});
    CriticalSystem s{2, 1, {eq1, constant}};
    SolveReport r = solve(s);
    CHECK(r.points.empty());
    REQUIRE(r.empty_branches.size() == 1);
    CHECK(r.empty_branches[0].residual == "5");
}

TEST_CASE("non-binomial leftovers become unresolved eliminants") {
    // y1 = 1 branch turns the second equation into a univariate trinomial
    LaurentPoly eq1 = LaurentPoly::from_terms(
        2, 1, {{Cyclotomic::one(1), {1, 0}}, {-Cyclotomic::one(1), {0, 0}}});
    LaurentPoly eq2 = LaurentPoly::from_terms(2, 1,
                                              {{Cyclotomic::one(1), {0, 2}},
                                               {Cyclotomic::one(1), {0, 1}},
                                               {Cyclotomic::one(1), {0, 0}}});
    CriticalSystem s{2, 1, {eq1, eq2}};
    SolveReport r = solve(s);
    CHECK(r.points.empty());
    CHECK(r.empty_branches.empty());
    REQUIRE(r.unresolved.size() == 1);
    CHECK(r.unresolved[0].degree == 2);
    CHECK(r.unresolved[0].branch == std::vector<std::string>{"y1 = 1"});
}

TEST_CASE("underdetermined systems are reported, not guessed") {
    LaurentPoly eq1 = LaurentPoly::from_terms(
        2, 1, {{Cyclotomic::one(1), {1, 1}}, {-Cyclotomic::one(1), {0, 0}}});
    CriticalSystem s{2, 1, {eq1}};
    SolveReport r = solve(s);
    CHECK(r.points.empty());
    REQUIRE(r.unresolved.size() == 1);
    CHECK(r.unresolved[0].degree == 0);
}

TEST_CASE("solving is deterministic") {
    PotentialFunction pf = semitoric_potential();
    FiberPoint u{q("2/3"), q("2/3")};
    SolveReport a = solve(leading_system(pf, u));
    SolveReport b = solve(leading_system(pf, u));
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].y == b.points[i].y);
        CHECK(a.points[i].branch == b.points[i].branch);
    }
}
