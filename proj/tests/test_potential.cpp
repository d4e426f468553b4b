#include "doctest.h"
#include "novpot/potential.hpp"

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

PotentialTerm exotic_term(unsigned order) {
    PotentialTerm t;
    t.count = 2;
    t.coefficient = Cyclotomic::one(order);
    t.monomial = {0, -2};
    t.exponent = AffineExponent(q("2"), {q("0"), q("-2")});
    return t;
}

PotentialFunction semitoric_potential() {
    return build_potential(quartic_triangle(), 3, {1, 1, 1}, {exotic_term(3)});
}

}  // namespace

TEST_CASE("the semi-toric potential has its four terms") {
    PotentialFunction pf = semitoric_potential();
    REQUIRE(pf.terms.size() == 4);
    CHECK(pf.terms[0].monomial == std::vector<Int>{1, 0});
    CHECK(pf.terms[1].monomial == std::vector<Int>{0, 1});
    CHECK(pf.terms[2].monomial == std::vector<Int>{-1, -4});
    CHECK(pf.terms[3].monomial == std::vector<Int>{0, -2});
    CHECK(pf.terms[3].count == 2);
    CHECK(to_string(pf) ==
          "T^(u1)*y1 + T^(u2)*y2 + T^(4-u1-4*u2)*y1^-1*y2^-4 + 2*T^(2-2*u2)*y2^-2");
}

TEST_CASE("plain toric build has one term per facet with the facet normal") {
    PotentialFunction pf = build_potential(unit2_triangle(), 1, {}, {});
    REQUIRE(pf.terms.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(pf.terms[j].count == 1);
        CHECK(pf.terms[j].monomial == unit2_triangle().facets[j].normal);
    }
    CHECK(to_string(pf) == "T^(u1)*y1 + T^(u2)*y2 + T^(2-u1-u2)*y1^-1*y2^-1");
}

TEST_CASE("duplicated extra terms merge by adding counts") {
    PotentialTerm once = exotic_term(3);
    once.count = 1;
    PotentialFunction twice = build_potential(quartic_triangle(), 3, {1, 1, 1}, {once, once});
    PotentialFunction merged = semitoric_potential();
    REQUIRE(twice.terms.size() == merged.terms.size());
    for (std::size_t i = 0; i < merged.terms.size(); ++i) {
        CHECK(twice.terms[i].count == merged.terms[i].count);
        CHECK(twice.terms[i].monomial == merged.terms[i].monomial);
        CHECK(twice.terms[i].exponent == merged.terms[i].exponent);
    }
}

TEST_CASE("build validates counts and dimensions") {
    CHECK_THROWS_AS(build_potential(quartic_triangle(), 3, {1, 1}, {}), config_error);
    PotentialTerm bad = exotic_term(3);
    bad.monomial = {0, -2, 1};
    CHECK_THROWS_AS(build_potential(quartic_triangle(), 3, {1, 1, 1}, {bad}), dimension_error);
    PotentialTerm wrong_field = exotic_term(1);
    CHECK_THROWS_AS(build_potential(quartic_triangle(), 3, {1, 1, 1}, {wrong_field}),
                    field_mismatch_error);
}

TEST_CASE("evaluation at fiber points") {
    PotentialFunction pf = semitoric_potential();
    auto evs = evaluate_at(pf, {q("2/3"), q("2/3")});
    REQUIRE(evs.size() == 4);
    for (const auto& ev : evs)
        CHECK(ev.exponent == q("2/3"));

    CHECK_THROWS_AS(evaluate_at(pf, {q("1"), q("1")}), invalid_fiber_error);

    PotentialFunction tri = build_potential(unit2_triangle(), 1, {}, {});
    auto tevs = evaluate_at(tri, {q("1/2"), q("1/2")});
    CHECK(tevs[0].exponent == q("1/2"));
    CHECK(tevs[1].exponent == q("1/2"));
    CHECK(tevs[2].exponent == q("1"));
}

TEST_CASE("formal partial derivatives") {
    PotentialFunction pf = semitoric_potential();
    auto eqs = partials(pf);
    REQUIRE(eqs.size() == 2);

    // d/dy1 = T^{u1} - T^{4-u1-4u2} y1^-2 y2^-4
    REQUIRE(eqs[0].size() == 2);
    CHECK(eqs[0][0].coeff == Cyclotomic::one(3));
    CHECK(eqs[0][0].monomial == std::vector<Int>{0, 0});
    CHECK(eqs[0][1].coeff == -Cyclotomic::one(3));
    CHECK(eqs[0][1].monomial == std::vector<Int>{-2, -4});

    // d/dy2 = T^{u2} - 4 T^{4-u1-4u2} y1^-1 y2^-5 - 4 T^{2-2u2} y2^-3
    REQUIRE(eqs[1].size() == 3);
    CHECK(eqs[1][1].coeff == Cyclotomic::from_rational(3, Rational(-4)));
    CHECK(eqs[1][1].monomial == std::vector<Int>{-1, -5});
    CHECK(eqs[1][2].coeff == Cyclotomic::from_rational(3, Rational(-4)));
    CHECK(eqs[1][2].monomial == std::vector<Int>{0, -3});

    // single-term potential: the other partial is empty
    MomentPolytope half;
    half.dimension = 2;
    half.facets = {{"", {1, 0}, Rational(0)}};
    PotentialFunction single = build_potential(half, 1, {}, {});
    auto seqs = partials(single);
    CHECK(seqs[0].size() == 1);
    CHECK(seqs[1].empty());
}

TEST_CASE("differentiation commutes with evaluation") {
    PotentialFunction pf = semitoric_potential();
    FiberPoint u{q("2/3"), q("2/3")};
    auto eqs = partials(pf);
    // evaluate the potential first, then differentiate the evaluated form
    auto evs = evaluate_at(pf, u);
    for (unsigned i = 0; i < 2; ++i) {
        std::vector<std::pair<Rational, std::vector<Int>>> direct;
        for (const auto& t : eqs[i])
            direct.push_back({t.exponent.eval(u), t.monomial});
        std::vector<std::pair<Rational, std::vector<Int>>> via_eval;
        for (const auto& ev : evs) {
            if (ev.monomial[i] == 0)
                continue;
            auto mono = ev.monomial;
            mono[i] -= 1;
            via_eval.push_back({ev.exponent, mono});
        }
        CHECK(direct == via_eval);
    }
}
