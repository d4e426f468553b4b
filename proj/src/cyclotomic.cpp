#include "novpot/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace novpot {

namespace {

// Dense univariate polynomials over Q, coefficients degree-ascending.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

Poly scale(Poly a, const Rational& q) {
    for (auto& c : a)
        c *= q;
    trim(a);
    return a;
}

// Division with remainder; divisor need not be monic.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    q.clear();
    r = a;
    trim(r);
    int db = degree(b);
    if (db < 0)
        throw division_by_zero_error("polynomial division by zero");
    q.assign(std::max<int>(degree(r) - db + 1, 0), Rational(0));
    while (degree(r) >= db) {
        Rational c = r.back() / b.back();
        int shift = degree(r) - db;
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            r[shift + i] -= c * b[i];
        trim(r);
    }
}

struct FieldTables {
    unsigned phi = 1;
    Poly minimal;              // cyclotomic polynomial Phi_m
    std::vector<Poly> powers;  // z^j mod Phi_m for j = 0 .. 2*phi-2
};

const FieldTables& tables(unsigned m) {
    static std::map<unsigned, FieldTables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    if (m == 0)
        throw math_error("cyclotomic order must be positive");
    FieldTables t;
    t.phi = euler_phi(m);
    t.minimal = cyclotomic_polynomial(m);
    t.powers.resize(2 * t.phi - 1);
    Poly cur{Rational(1)};
    for (unsigned j = 0; j + 1 < 2 * t.phi; ++j) {
        t.powers[j] = cur;
        cur.insert(cur.begin(), Rational(0));  // multiply by z
        Poly q, r;
        divmod(cur, t.minimal, q, r);
        cur = r;
    }
    return cache.emplace(m, std::move(t)).first->second;
}

std::vector<Rational> reduce_to_field(unsigned m, const Poly& p) {
    const FieldTables& t = tables(m);
    std::vector<Rational> out(t.phi, Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j].is_zero())
            continue;
        if (j < t.powers.size()) {
            const Poly& pj = t.powers[j];
            for (std::size_t i = 0; i < pj.size(); ++i)
                out[i] += p[j] * pj[i];
        } else {
            Poly q, r;
            Poly mono(j + 1, Rational(0));
            mono[j] = p[j];
            divmod(mono, t.minimal, q, r);
            for (std::size_t i = 0; i < r.size(); ++i)
                out[i] += r[i];
        }
    }
    return out;
}

}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result == 0 ? 1 : result;
}

std::vector<Rational> cyclotomic_polynomial(unsigned m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    Poly num(m + 1, Rational(0));
    num[0] = Rational(-1);
    num[m] = Rational(1);
    Poly den{Rational(1)};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0)
            den = mul(den, cyclotomic_polynomial(d));
    Poly q, r;
    divmod(num, den, q, r);
    if (!r.empty())
        throw math_error("cyclotomic polynomial division left a remainder");
    return q;
}

Cyclotomic Cyclotomic::zero(unsigned order) {
    Cyclotomic c;
    c.order_ = order;
    c.c_.assign(tables(order).phi, Rational(0));
    return c;
}

Cyclotomic Cyclotomic::from_rational(unsigned order, const Rational& q) {
    Cyclotomic c = zero(order);
    c.c_[0] = q;
    return c;
}

Cyclotomic Cyclotomic::zeta_pow(unsigned order, long long e) {
    long long m = static_cast<long long>(order);
    long long r = ((e % m) + m) % m;
    Poly mono(static_cast<std::size_t>(r) + 1, Rational(0));
    mono[static_cast<std::size_t>(r)] = Rational(1);
    Cyclotomic c = zero(order);
    c.c_ = reduce_to_field(order, mono);
    return c;
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (!q.is_zero())
            return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational())
        throw unsupported_shape_error("cyclotomic element is not rational");
    return c_[0];
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
    if (order_ != o.order_)
        throw field_mismatch_error("mixed cyclotomic orders " + std::to_string(order_) +
                                   " and " + std::to_string(o.order_));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_)
        q = -q;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_order(o);
    Poly a(c_.begin(), c_.end());
    Poly b(o.c_.begin(), o.c_.end());
    trim(a);
    trim(b);
    c_ = reduce_to_field(order_, mul(a, b));
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero())
        throw division_by_zero_error("inverse of zero cyclotomic element");
    if (is_rational()) {
        return from_rational(order_, Rational(1) / c_[0]);
    }
    // Extended Euclid: s*a + t*Phi = gcd = const, so a^{-1} = s / const.
    Poly a(c_.begin(), c_.end());
    trim(a);
    Poly b = tables(order_).minimal;
    Poly s0{Rational(1)}, s1{};
    Poly r0 = a, r1 = b;
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(r0) != 0)
        throw math_error("cyclotomic polynomial is not coprime to the element");
    Poly inv = scale(s0, Rational(1) / r0[0]);
    Cyclotomic out = zero(order_);
    out.c_ = reduce_to_field(order_, inv);
    return out;
}

Cyclotomic Cyclotomic::pow(long long e) const {
    if (e == 0)
        return one(order_);
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    Cyclotomic acc = one(order_);
    while (n) {
        if (n & 1ULL)
            acc *= base;
        base *= base;
        n >>= 1ULL;
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        Rational q = c_[i];
        if (first) {
            first = false;
        } else {
            os << (q.sign() < 0 ? " - " : " + ");
            q = q.abs();
        }
        if (i == 0) {
            os << q.to_string();
        } else if (q == Rational(1)) {
            os << "z^" << i;
        } else if (q == Rational(-1)) {
            os << "-z^" << i;
        } else {
            os << q.to_string() << "*z^" << i;
        }
    }
    return os.str();
}

bool field_has_root_of_unity(unsigned order, unsigned k) {
    if (k == 0)
        return false;
    unsigned l = std::lcm(2u, order);
    return l % k == 0;
}

Cyclotomic embedded_root_of_unity(unsigned order, unsigned k) {
    if (!field_has_root_of_unity(order, k))
        throw needs_field_extension_error(
            "field of order " + std::to_string(order) +
                " has no primitive root of unity of order " + std::to_string(k),
            suggest_order_with_root_of_unity(order, k));
    if (order % k == 0)
        return Cyclotomic::zeta_pow(order, order / k);
    // order is odd here; zeta_{2m} = -zeta_m^{(m+1)/2}.
    Cyclotomic z2m = -Cyclotomic::zeta_pow(order, (order + 1) / 2);
    return z2m.pow(static_cast<long long>(2 * order / k));
}

unsigned suggest_order_with_root_of_unity(unsigned order, unsigned k) {
    unsigned m = std::lcm(order, k);
    if (m % 4 == 2)
        m /= 2;  // Q(zeta_{2n}) = Q(zeta_n) for odd n
    return m;
}

std::vector<Cyclotomic> cyclotomic_kth_roots(const Cyclotomic& c, unsigned k) {
    const unsigned m = c.order();
    if (k == 0)
        throw math_error("0-th root requested");
    if (c.is_zero())
        throw division_by_zero_error("k-th roots of zero");
    if (k == 1)
        return {c};

    // Recognize c = q * zeta_m^e with q rational.
    std::optional<std::pair<Rational, unsigned>> shape;
    for (unsigned e = 0; e < m; ++e) {
        Cyclotomic d = c * Cyclotomic::zeta_pow(m, -static_cast<long long>(e));
        if (d.is_rational()) {
            shape = {d.rational_value(), e};
            break;
        }
    }
    if (!shape)
        throw needs_field_extension_error(
            "no k-th root in monomial form: the element is not a rational "
            "multiple of a root of unity",
            0);

    auto [q, e] = *shape;
    auto r0 = exact_kth_root(q.abs(), k);
    if (!r0)
        throw needs_field_extension_error(
            "the rational part " + q.to_string() + " has no exact " + std::to_string(k) +
                "-th root; roots in monomial form q*zeta^e cannot exist, and radical "
                "extensions are unsupported",
            0);

    if (!field_has_root_of_unity(m, k))
        throw needs_field_extension_error(
            "k-th roots need a primitive root of unity of order " + std::to_string(k) +
                ", absent from the field of order " + std::to_string(m),
            suggest_order_with_root_of_unity(m, k));

    // Search x0 = (+-r0) * zeta^f with x0^k = c.
    std::optional<Cyclotomic> x0;
    for (int sign = 0; sign < 2 && !x0; ++sign) {
        Rational r = sign == 0 ? *r0 : -*r0;
        for (unsigned f = 0; f < m; ++f) {
            Cyclotomic cand = Cyclotomic::from_rational(m, r) * Cyclotomic::zeta_pow(m, f);
            if (cand.pow(static_cast<long long>(k)) == c) {
                x0 = cand;
                break;
            }
        }
    }
    if (!x0) {
        // The root-of-unity part rho = sign * zeta^e needs a k*ord(rho)-th
        // root of unity; suggest the smallest order carrying one.
        Cyclotomic rho = c * Cyclotomic::from_rational(m, q.abs()).inverse();
        unsigned l = std::lcm(2u, m);
        unsigned ord = l;
        for (unsigned t = 1; t <= l; ++t)
            if (l % t == 0 && rho.pow(t) == Cyclotomic::one(m)) {
                ord = t;
                break;
            }
        unsigned suggested = std::lcm(m, k * ord);
        if (suggested % 4 == 2)
            suggested /= 2;
        throw needs_field_extension_error(
            "the root-of-unity part of the element has no " + std::to_string(k) +
                "-th root in order " + std::to_string(m),
            suggested);
    }

    Cyclotomic zk = embedded_root_of_unity(m, k);
    std::vector<Cyclotomic> roots;
    roots.reserve(k);
    Cyclotomic cur = *x0;
    for (unsigned j = 0; j < k; ++j) {
        roots.push_back(cur);
        cur *= zk;
    }
    return roots;
}

}  // namespace novpot
