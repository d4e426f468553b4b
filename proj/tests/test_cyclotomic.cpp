#include "doctest.h"
#include "novpot/cyclotomic.hpp"

using namespace novpot;

TEST_CASE("euler phi and cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);

    // Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
    auto p3 = cyclotomic_polynomial(3);
    CHECK(p3 == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    auto p4 = cyclotomic_polynomial(4);
    CHECK(p4 == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    auto p6 = cyclotomic_polynomial(6);
    CHECK(p6 == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
}

TEST_CASE("zeta powers reduce canonically") {
    Cyclotomic z = Cyclotomic::zeta(3);
    CHECK(z.pow(3) == Cyclotomic::one(3));
    // zeta_3^2 = -1 - zeta_3 mod Phi_3
    Cyclotomic z2 = Cyclotomic::zeta_pow(3, 2);
    CHECK(z2 == -(Cyclotomic::one(3) + z));
    CHECK(Cyclotomic::zeta_pow(3, -1) == z2);
    CHECK(Cyclotomic::zeta(1) == Cyclotomic::one(1));
    CHECK(Cyclotomic::zeta(2) == -Cyclotomic::one(2));
    CHECK(Cyclotomic::zeta(4).pow(2) == -Cyclotomic::one(4));
}

TEST_CASE("field inverses via extended euclid") {
    Cyclotomic z = Cyclotomic::zeta(3);
    CHECK(z.inverse() == z.pow(2));
    Cyclotomic a = Cyclotomic::from_rational(3, Rational(2)) + z;  // 2 + zeta
    CHECK(a * a.inverse() == Cyclotomic::one(3));
    Cyclotomic b = Cyclotomic::from_rational(5, Rational(1)) + Cyclotomic::zeta(5);
    CHECK(b * b.inverse() == Cyclotomic::one(5));
    CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), division_by_zero_error);
}

TEST_CASE("order mismatches are rejected") {
    CHECK_THROWS_AS(Cyclotomic::one(3) + Cyclotomic::one(4), field_mismatch_error);
    CHECK_THROWS_AS(Cyclotomic::one(3) * Cyclotomic::zeta(6), field_mismatch_error);
}

TEST_CASE("roots of unity membership") {
    CHECK(field_has_root_of_unity(3, 2));   // -1
    CHECK(field_has_root_of_unity(3, 6));   // -zeta_3^2
    CHECK(field_has_root_of_unity(1, 2));
    CHECK(!field_has_root_of_unity(1, 3));
    CHECK(!field_has_root_of_unity(4, 3));
    Cyclotomic z6 = embedded_root_of_unity(3, 6);
    CHECK(z6.pow(6) == Cyclotomic::one(3));
    CHECK(z6.pow(3) == -Cyclotomic::one(3));
    CHECK(z6.pow(2) == Cyclotomic::zeta(3));
    CHECK(suggest_order_with_root_of_unity(1, 3) == 3);
    CHECK(suggest_order_with_root_of_unity(1, 6) == 3);
    CHECK(suggest_order_with_root_of_unity(4, 3) == 12);
}

TEST_CASE("cyclotomic k-th roots in monomial form") {
    // cube roots of 8 over Q(zeta_3)
    auto roots = cyclotomic_kth_roots(Cyclotomic::from_rational(3, Rational(8)), 3);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Cyclotomic::from_rational(3, Rational(2)));
    for (const auto& r : roots)
        CHECK(r.pow(3) == Cyclotomic::from_rational(3, Rational(8)));
    CHECK(roots[1] != roots[0]);
    CHECK(roots[2] != roots[1]);

    // square roots of 1 exist already over Q
    auto pm = cyclotomic_kth_roots(Cyclotomic::one(1), 2);
    REQUIRE(pm.size() == 2);
    CHECK(pm[0] == Cyclotomic::one(1));
    CHECK(pm[1] == -Cyclotomic::one(1));

    // cube roots of 8 over Q need zeta_3: suggested order 3
    try {
        cyclotomic_kth_roots(Cyclotomic::from_rational(1, Rational(8)), 3);
        FAIL("expected needs_field_extension_error");
    } catch (const needs_field_extension_error& e) {
        CHECK(e.suggested_order == 3);
    }

    // square root of 2 is not a rational times a root of unity
    CHECK_THROWS_AS(cyclotomic_kth_roots(Cyclotomic::from_rational(3, Rational(2)), 2),
                    needs_field_extension_error);

    // roots of a root of unity: x^2 = zeta_3 has solutions +-zeta_3^2
    auto zr = cyclotomic_kth_roots(Cyclotomic::zeta(3), 2);
    REQUIRE(zr.size() == 2);
    for (const auto& r : zr)
        CHECK(r.pow(2) == Cyclotomic::zeta(3));
}

TEST_CASE("negative rationals under odd and even roots") {
    auto r = cyclotomic_kth_roots(Cyclotomic::from_rational(3, Rational(-8)), 3);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == Cyclotomic::from_rational(3, Rational(-2)));
    for (const auto& x : r)
        CHECK(x.pow(3) == Cyclotomic::from_rational(3, Rational(-8)));
    // over Q only one cube root of -8 lives in the field, so all three
    // cannot be returned
    CHECK_THROWS_AS(cyclotomic_kth_roots(Cyclotomic::from_rational(1, Rational(-8)), 3),
                    needs_field_extension_error);
    // x^2 = -4 needs i
    try {
        cyclotomic_kth_roots(Cyclotomic::from_rational(1, Rational(-4)), 2);
        FAIL("expected needs_field_extension_error");
    } catch (const needs_field_extension_error& e) {
        CHECK(e.suggested_order == 4);
    }
    // ... and works over Q(i)
    auto ir = cyclotomic_kth_roots(Cyclotomic::from_rational(4, Rational(-4)), 2);
    REQUIRE(ir.size() == 2);
    for (const auto& x : ir)
        CHECK(x.pow(2) == Cyclotomic::from_rational(4, Rational(-4)));
}
