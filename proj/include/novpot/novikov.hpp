#pragma once

#include <string>
#include <vector>

#include "novpot/cyclotomic.hpp"

namespace novpot {

// Valuation value: a rational or +infinity (the valuation of 0).
struct Val {
    bool infinite = false;
    Rational v;

    static Val infinity() { return Val{true, Rational(0)}; }
    static Val of(Rational r) { return Val{false, std::move(r)}; }

    friend bool operator==(const Val& a, const Val& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    friend bool operator!=(const Val& a, const Val& b) { return !(a == b); }
    friend bool operator<(const Val& a, const Val& b) {
        if (a.infinite)
            return false;
        if (b.infinite)
            return true;
        return a.v < b.v;
    }
    friend bool operator<=(const Val& a, const Val& b) { return !(b < a); }
    friend bool operator>=(const Val& a, const Val& b) { return !(a < b); }
    friend bool operator>(const Val& a, const Val& b) { return b < a; }
    friend Val operator+(const Val& a, const Val& b) {
        if (a.infinite || b.infinite)
            return infinity();
        return of(a.v + b.v);
    }
    friend Val min(const Val& a, const Val& b) { return a < b ? a : b; }
    std::string to_string() const { return infinite ? "+inf" : v.to_string(); }
};

struct Membership {
    bool is_zero;
    bool in_lambda0;        // valuation >= 0
    bool in_lambda_plus;    // valuation > 0
    bool is_unit_of_lambda0;  // valuation == 0
};

// Element of the universal Novikov field with rational exponents and
// coefficients in Q(zeta_m): a finite sum  sum_i c_i T^{e_i}  stored with
// strictly increasing exponents and no zero coefficients.  The empty sum
// is 0.  Values are immutable in spirit: all operations return new
// elements.
class Novikov {
public:
    struct Term {
        Cyclotomic coeff;
        Rational exp;
    };

    explicit Novikov(unsigned order = 1) : order_(order) {}

    static Novikov zero(unsigned order) { return Novikov(order); }
    static Novikov one(unsigned order) {
        return monomial(Cyclotomic::one(order), Rational(0));
    }
    static Novikov constant(const Cyclotomic& c) { return monomial(c, Rational(0)); }
    static Novikov rational(unsigned order, const Rational& q) {
        return monomial(Cyclotomic::from_rational(order, q), Rational(0));
    }
    static Novikov monomial(const Cyclotomic& c, const Rational& e);
    static Novikov t_power(unsigned order, const Rational& e) {
        return monomial(Cyclotomic::one(order), e);
    }
    static Novikov from_terms(unsigned order, std::vector<Term> terms);

    unsigned order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // The unique term of a monomial; throws unsupported_shape_error otherwise.
    const Term& single_term() const;

    Novikov operator-() const;
    Novikov& operator+=(const Novikov& o);
    Novikov& operator-=(const Novikov& o);
    Novikov& operator*=(const Novikov& o);

    friend Novikov operator+(Novikov a, const Novikov& b) { return a += b; }
    friend Novikov operator-(Novikov a, const Novikov& b) { return a -= b; }
    friend Novikov operator*(Novikov a, const Novikov& b) { return a *= b; }

    friend bool operator==(const Novikov& a, const Novikov& b);
    friend bool operator!=(const Novikov& a, const Novikov& b) { return !(a == b); }

    Val valuation() const;
    Membership classify() const;

    // Multiplicative inverse b with val(a*b - 1) >= precision.  Exact
    // (independent of precision) when the element is a monomial.  Throws
    // division_by_zero_error on 0.
    Novikov invert(const Rational& precision) const;

    // All k-th roots of a monomial c*T^e: c^{1/k} zeta_k^j T^{e/k}.
    // Throws unsupported_shape_error for non-monomials and
    // needs_field_extension_error when the field lacks the roots.
    std::vector<Novikov> kth_roots(unsigned k) const;

    Novikov pow(long long e) const;

    // Drops terms with exponent >= cutoff.
    Novikov truncate_at(const Rational& cutoff) const;

    std::string to_string() const;
    static Novikov parse(const std::string& text, unsigned order);

private:
    unsigned order_;
    std::vector<Term> terms_;
    void check_order(const Novikov& o) const;
};

}  // namespace novpot
