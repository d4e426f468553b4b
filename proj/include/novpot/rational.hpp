#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "novpot/errors.hpp"

namespace novpot {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational pow(long long e) const;

    // Renders "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    // Accepts "p", "p/q", optional leading sign and surrounding spaces.
    static Rational parse(const std::string& text);
    static std::optional<Rational> try_parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;  // > 0
    void normalize();
};

// Least integer >= a/b for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Exact integer k-th root: returns r with r^k == v if one exists (v >= 0).
std::optional<BigInt> exact_kth_root(const BigInt& v, unsigned k);

// Exact k-th root of a positive rational, if it exists in Q.
std::optional<Rational> exact_kth_root(const Rational& v, unsigned k);

}  // namespace novpot
