#include "novpot/rational.hpp"

#include <sstream>

namespace novpot {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
        throw division_by_zero_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0)
        throw division_by_zero_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::pow(long long e) const {
    if (e == 0)
        return Rational(1);
    if (num_ == 0) {
        if (e < 0)
            throw division_by_zero_error("zero to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(den_, num_) : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1ULL)
            acc *= base;
        base *= base;
        n >>= 1ULL;
    }
    return acc;
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1)
        os << "/" << den_;
    return os.str();
}

std::optional<Rational> Rational::try_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        return std::nullopt;
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(s))
                return std::nullopt;
            return Rational(BigInt(s));
        }
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!is_int(n) || !is_int(d))
            return std::nullopt;
        BigInt den(d);
        if (den == 0)
            return std::nullopt;
        return Rational(BigInt(n), den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Rational Rational::parse(const std::string& text) {
    auto r = try_parse(text);
    if (!r)
        throw config_error("invalid rational literal: '" + text + "'");
    return *r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b < a)
        ++q;
    return q;
}

std::optional<BigInt> exact_kth_root(const BigInt& v, unsigned k) {
    if (k == 0)
        return std::nullopt;
    if (v < 0)
        return std::nullopt;
    if (v == 0 || v == 1 || k == 1)
        return v;
    BigInt lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, k) < v)
        hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, k) < v)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (boost::multiprecision::pow(lo, k) == v)
        return lo;
    return std::nullopt;
}

std::optional<Rational> exact_kth_root(const Rational& v, unsigned k) {
    if (v.sign() <= 0)
        return std::nullopt;
    auto n = exact_kth_root(v.num(), k);
    if (!n)
        return std::nullopt;
    auto d = exact_kth_root(v.den(), k);
    if (!d)
        return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace novpot
