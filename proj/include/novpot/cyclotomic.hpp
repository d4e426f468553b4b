#pragma once

#include <string>
#include <vector>

#include "novpot/rational.hpp"

namespace novpot {

// Element of the cyclotomic field Q(zeta_m), stored as a polynomial in the
// primitive m-th root of unity, reduced modulo the m-th cyclotomic
// polynomial.  The representative has degree < phi(m), which makes equality
// a coefficientwise comparison.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1, Rational(0)) {}

    static Cyclotomic zero(unsigned order);
    static Cyclotomic one(unsigned order) { return from_rational(order, Rational(1)); }
    static Cyclotomic from_rational(unsigned order, const Rational& q);
    // zeta_m^e as an element of Q(zeta_m); e may be negative.
    static Cyclotomic zeta_pow(unsigned order, long long e);
    static Cyclotomic zeta(unsigned order) { return zeta_pow(order, 1); }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws unsupported_shape_error when the element is not rational.
    Rational rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // the cyclotomic polynomial.  Throws division_by_zero_error on 0.
    Cyclotomic inverse() const;
    Cyclotomic pow(long long e) const;

    // Rendered in the serialization grammar, e.g. "2*z^1", "1/3", "1 - z^2".
    std::string to_string() const;

private:
    unsigned order_;
    std::vector<Rational> c_;  // size phi(order_)
    void check_order(const Cyclotomic& o) const;
};

unsigned euler_phi(unsigned m);

// Coefficients of the m-th cyclotomic polynomial, degree ascending, monic.
std::vector<Rational> cyclotomic_polynomial(unsigned m);

// Whether Q(zeta_m) contains a primitive k-th root of unity
// (equivalently k | lcm(2, m)).
bool field_has_root_of_unity(unsigned order, unsigned k);

// zeta_k as an element of Q(zeta_m); requires field_has_root_of_unity.
Cyclotomic embedded_root_of_unity(unsigned order, unsigned k);

// Smallest cyclotomic order whose field contains Q(zeta_m) and zeta_k.
unsigned suggest_order_with_root_of_unity(unsigned order, unsigned k);

// All k-th roots of c within Q(zeta_m), provided c is a rational multiple
// of a root of unity and its rational part has an exact rational k-th
// root.  Throws needs_field_extension_error otherwise.  Roots are listed
// as x0 * zeta_k^j for j = 0..k-1 with a canonical first root x0.
std::vector<Cyclotomic> cyclotomic_kth_roots(const Cyclotomic& c, unsigned k);

}  // namespace novpot
