#include "doctest.h"
#include "novpot/novikov.hpp"

using namespace novpot;

namespace {
Novikov T(const char* e) { return Novikov::t_power(1, Rational::parse(e)); }
Novikov T3(const char* e) { return Novikov::t_power(3, Rational::parse(e)); }
}  // namespace

TEST_CASE("addition merges like terms and cancels") {
    CHECK((T("1") + (-T("1"))).is_zero());
    Novikov a = Novikov::one(1) + T("1/2");
    CHECK(a + T("1/2") ==
          Novikov::one(1) + Novikov::monomial(Cyclotomic::from_rational(1, Rational(2)),
                                              Rational(1, 2)));
    CHECK(T("2/3") + Novikov::monomial(Cyclotomic::from_rational(1, Rational(2)),
                                       Rational(2, 3)) ==
          Novikov::monomial(Cyclotomic::from_rational(1, Rational(3)), Rational(2, 3)));
}

TEST_CASE("multiplication adds exponents and multiplies coefficients") {
    Novikov lhs = Novikov::monomial(Cyclotomic::from_rational(3, Rational(2)), Rational(2, 3)) *
                  Novikov::monomial(Cyclotomic::zeta(3), Rational(1, 3));
    CHECK(lhs == Novikov::monomial(Cyclotomic::from_rational(3, Rational(2)) *
                                       Cyclotomic::zeta(3),
                                   Rational(1)));
    CHECK((Novikov::one(1) + T("1")) * (Novikov::one(1) - T("1")) ==
          Novikov::one(1) - T("2"));
    CHECK(T3("1/3") * T3("1/3") * T3("1/3") == T3("1"));
}

TEST_CASE("field order mismatch is an error") {
    CHECK_THROWS_AS(T("1") + T3("1"), field_mismatch_error);
    CHECK_THROWS_AS(T("1") * T3("1"), field_mismatch_error);
}

TEST_CASE("valuation") {
    Novikov a = Novikov::monomial(Cyclotomic::from_rational(1, Rational(3)), Rational(1, 2)) +
                T("2");
    CHECK(a.valuation() == Val::of(Rational(1, 2)));
    CHECK(Novikov::zero(1).valuation() == Val::infinity());
    CHECK((Novikov::rational(1, Rational(5)) + T("1")).valuation() == Val::of(Rational(0)));
    CHECK(Val::infinity() > Val::of(Rational(1000)));
}

TEST_CASE("classification against the subring and its maximal ideal") {
    Membership unit = (Novikov::rational(1, Rational(2)) + T("1/3")).classify();
    CHECK(unit.in_lambda0);
    CHECK(!unit.in_lambda_plus);
    CHECK(unit.is_unit_of_lambda0);
    CHECK(!unit.is_zero);

    Membership plus = T("1/3").classify();
    CHECK(plus.in_lambda0);
    CHECK(plus.in_lambda_plus);
    CHECK(!plus.is_unit_of_lambda0);

    Membership neg = T("-1").classify();
    CHECK(!neg.in_lambda0);
    CHECK(!neg.in_lambda_plus);
    CHECK(!neg.is_unit_of_lambda0);

    Membership zero = Novikov::zero(1).classify();
    CHECK(zero.is_zero);
    CHECK(zero.in_lambda0);
    CHECK(zero.in_lambda_plus);
}

TEST_CASE("inversion: exact monomials and truncated series") {
    Novikov m = Novikov::monomial(Cyclotomic::from_rational(1, Rational(2)), Rational(1, 3));
    CHECK(m.invert(Rational(100)) ==
          Novikov::monomial(Cyclotomic::from_rational(1, Rational(1, 2)), Rational(-1, 3)));
    CHECK(m.invert(Rational(1)) == m.invert(Rational(50)));  // monomial inverse ignores N

    Novikov a = Novikov::one(1) + T("1");
    Novikov b = a.invert(Rational(3));
    CHECK(b == Novikov::one(1) - T("1") + T("2"));
    CHECK((a * b - Novikov::one(1)).valuation() >= Val::of(Rational(3)));

    Novikov z = Novikov::constant(Cyclotomic::zeta(3));
    CHECK(z.invert(Rational(1)) == Novikov::constant(Cyclotomic::zeta_pow(3, 2)));

    CHECK_THROWS_AS(Novikov::zero(1).invert(Rational(1)), division_by_zero_error);
}

TEST_CASE("k-th roots of monomials") {
    auto roots = T3("1").kth_roots(3);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == T3("1/3"));
    CHECK(roots[1] == Novikov::monomial(Cyclotomic::zeta(3), Rational(1, 3)));
    CHECK(roots[2] == Novikov::monomial(Cyclotomic::zeta_pow(3, 2), Rational(1, 3)));
    for (const auto& r : roots)
        CHECK(r.pow(3) == T3("1"));
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            CHECK(roots[i] != roots[j]);

    auto consts = Novikov::rational(3, Rational(8)).kth_roots(3);
    REQUIRE(consts.size() == 3);
    CHECK(consts[0] == Novikov::rational(3, Rational(2)));

    auto pm = T("2").kth_roots(2);
    REQUIRE(pm.size() == 2);
    CHECK(pm[0] == T("1"));
    CHECK(pm[1] == -T("1"));

    CHECK_THROWS_AS((Novikov::one(1) + T("1")).kth_roots(2), unsupported_shape_error);
    CHECK_THROWS_AS(T("1").kth_roots(3), needs_field_extension_error);
}

TEST_CASE("serialization grammar round-trips") {
    Novikov a = Novikov::rational(3, Rational(2)) * Novikov::constant(Cyclotomic::zeta(3)) *
                T3("1/3");
    CHECK(a.to_string() == "2*z^1*T^(1/3)");
    CHECK(Novikov::parse("2*z^1*T^(1/3)", 3) == a);

    CHECK(Novikov::zero(3).to_string() == "0");
    CHECK(Novikov::parse("0", 3).is_zero());

    Novikov b = Novikov::one(1) - T("2");
    CHECK(b.to_string() == "1 - T^(2/1)");
    CHECK(Novikov::parse("1 - T^(2/1)", 1) == b);
    CHECK(Novikov::parse("1 + -1*T^(2/1)", 1) == b);

    CHECK((-T("1")).to_string() == "-T^(1/1)");
    CHECK(Novikov::parse("-T^(1/1)", 1) == -T("1"));
    CHECK(Novikov::parse("-T", 1) == -T("1"));
    CHECK(Novikov::parse("T^(-2/3)", 1) == T("-2/3"));

    // compound cyclotomic coefficient needs parentheses before T
    Novikov c = Novikov::monomial(Cyclotomic::one(3) + Cyclotomic::zeta(3), Rational(1, 2));
    CHECK(Novikov::parse(c.to_string(), 3) == c);
    CHECK(c.to_string() == "(1 + z^1)*T^(1/2)");

    // constant terms omit T^(0/1)
    CHECK(Novikov::one(3).to_string() == "1");
    CHECK(Novikov::parse("5/3", 1) == Novikov::rational(1, Rational(5, 3)));

    CHECK_THROWS_AS(Novikov::parse("2*", 1), config_error);
    CHECK_THROWS_AS(Novikov::parse("q", 1), config_error);
    CHECK_THROWS_AS(Novikov::parse("", 1), config_error);
}

TEST_CASE("truncation helper") {
    Novikov a = Novikov::one(1) + T("1") + T("2");
    CHECK(a.truncate_at(Rational(2)) == Novikov::one(1) + T("1"));
    CHECK(a.truncate_at(Rational(5)) == a);
    CHECK(a.truncate_at(Rational(0)).is_zero());
}
