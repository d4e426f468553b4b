#include "novpot/novikov.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace novpot {

Novikov Novikov::monomial(const Cyclotomic& c, const Rational& e) {
    Novikov n(c.order());
    if (!c.is_zero())
        n.terms_.push_back(Term{c, e});
    return n;
}

Novikov Novikov::from_terms(unsigned order, std::vector<Term> terms) {
    std::map<Rational, Cyclotomic, std::less<Rational>> acc;
    for (auto& t : terms) {
        if (t.coeff.order() != order)
            throw field_mismatch_error("term coefficient order differs from element order");
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(t.exp, t.coeff);
        else
            it->second += t.coeff;
    }
    Novikov n(order);
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            n.terms_.push_back(Term{c, e});
    return n;
}

const Novikov::Term& Novikov::single_term() const {
    if (terms_.size() != 1)
        throw unsupported_shape_error("element is not a monomial");
    return terms_[0];
}

void Novikov::check_order(const Novikov& o) const {
    if (order_ != o.order_)
        throw field_mismatch_error("mixed coefficient-field orders " +
                                   std::to_string(order_) + " and " +
                                   std::to_string(o.order_));
}

Novikov Novikov::operator-() const {
    Novikov r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

Novikov& Novikov::operator+=(const Novikov& o) {
    check_order(o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
            merged.push_back(o.terms_[j++]);
        } else {
            Cyclotomic c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero())
                merged.push_back(Term{c, terms_[i].exp});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Novikov& Novikov::operator-=(const Novikov& o) { return *this += -o; }

Novikov& Novikov::operator*=(const Novikov& o) {
    check_order(o);
    std::map<Rational, Cyclotomic> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Rational e = a.exp + b.exp;
            Cyclotomic c = a.coeff * b.coeff;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(c));
            else
                it->second += c;
        }
    terms_.clear();
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            terms_.push_back(Term{c, e});
    return *this;
}

bool operator==(const Novikov& a, const Novikov& b) {
    if (a.order_ != b.order_ || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Val Novikov::valuation() const {
    if (terms_.empty())
        return Val::infinity();
    return Val::of(terms_.front().exp);
}

Membership Novikov::classify() const {
    Val v = valuation();
    Membership m;
    m.is_zero = v.infinite;
    m.in_lambda0 = v >= Val::of(Rational(0));
    m.in_lambda_plus = v > Val::of(Rational(0));
    m.is_unit_of_lambda0 = !v.infinite && v.v == Rational(0);
    return m;
}

Novikov Novikov::truncate_at(const Rational& cutoff) const {
    Novikov r(order_);
    for (const auto& t : terms_) {
        if (!(t.exp < cutoff))
            break;
        r.terms_.push_back(t);
    }
    return r;
}

Novikov Novikov::invert(const Rational& precision) const {
    if (terms_.empty())
        throw division_by_zero_error("inversion of the zero element");
    const Term& lead = terms_.front();
    Novikov lead_inv = monomial(lead.coeff.inverse(), -lead.exp);
    if (terms_.size() == 1)
        return lead_inv;

    // a = c T^l (1 + x) with val(x) > 0; invert the unit part by a
    // geometric series truncated once val(x^J) clears the target.
    Novikov x = (*this * lead_inv) - one(order_);
    Rational gap = x.valuation().v;  // > 0
    Rational target = precision + lead.exp.abs() + Rational(1);
    BigInt steps = ceil_div(target.num() * gap.den(), target.den() * gap.num());
    long long nsteps = steps <= 0 ? 1 : static_cast<long long>(steps);

    Novikov series = one(order_);
    Novikov power = one(order_);
    for (long long j = 1; j <= nsteps; ++j) {
        power = (power * x).truncate_at(target);
        if (power.is_zero())
            break;
        if (j % 2 == 1)
            series -= power;
        else
            series += power;
    }
    return (lead_inv * series).truncate_at(precision - lead.exp);
}

std::vector<Novikov> Novikov::kth_roots(unsigned k) const {
    if (terms_.size() != 1)
        throw unsupported_shape_error("k-th roots are only taken of monomials");
    if (k == 0)
        throw math_error("0-th root requested");
    const Term& t = terms_[0];
    Rational e = t.exp / Rational(static_cast<long long>(k));
    std::vector<Cyclotomic> cr = cyclotomic_kth_roots(t.coeff, k);
    std::vector<Novikov> out;
    out.reserve(cr.size());
    for (const auto& c : cr)
        out.push_back(monomial(c, e));
    return out;
}

Novikov Novikov::pow(long long e) const {
    if (e == 0)
        return one(order_);
    Novikov base = *this;
    if (e < 0) {
        // Exact only for monomials; general negative powers would need a
        // truncation precision, which pow deliberately does not take.
        base = monomial(single_term().coeff.inverse(), -single_term().exp);
        e = -e;
    }
    Novikov acc = one(order_);
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1ULL)
            acc *= base;
        base *= base;
        n >>= 1ULL;
    }
    return acc;
}

std::string Novikov::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool negated = false;
        if (!first) {
            // Fold a plain leading minus into the separator.
            Cyclotomic neg = -t.coeff;
            std::string ns = neg.to_string();
            if (c.size() > ns.size() && c[0] == '-') {
                os << " - ";
                c = ns;
                negated = true;
            } else {
                os << " + ";
            }
        }
        (void)negated;
        bool has_t = !t.exp.is_zero();
        bool compound = c.find(' ') != std::string::npos;
        if (!has_t) {
            os << c;
        } else {
            if (compound)
                os << "(" << c << ")*";
            else if (c == "1")
                ;  // plain T power
            else if (c == "-1")
                os << "-";
            else
                os << c << "*";
            os << "T^(" << t.exp.num() << "/" << t.exp.den() << ")";
        }
        first = false;
    }
    return os.str();
}

namespace {

// Recursive-descent parser for the element grammar.  Accepted shapes:
//   element := ws term (ws ('+'|'-') ws term)* ws | "0"
//   term    := factor ('*' factor)*
//   factor  := rational | 'z' ['^' int] | 'T' ['^' texp] | '(' element ')'
//   texp    := '(' rational ')' | rational
// A parenthesized factor must reduce to a T-free element (it contributes
// to the coefficient).
struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    unsigned order;

    explicit Parser(const std::string& text, unsigned m) : s(text), order(m) {}

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw config_error("parse error at position " + std::to_string(pos) + ": " + msg +
                           " in '" + s + "'");
    }

    BigInt integer() {
        ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
            ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == digits)
            fail("expected integer");
        return BigInt(s.substr(start, pos - start));
    }

    Rational rational() {
        BigInt n = integer();
        ws();
        if (eat('/')) {
            BigInt d = integer();
            return Rational(n, d);
        }
        return Rational(n);
    }

    Novikov factor() {
        ws();
        if (pos >= s.size())
            fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Novikov inner = element();
            ws();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (c == 'z') {
            ++pos;
            long long e = 1;
            if (eat('^'))
                e = static_cast<long long>(integer());
            return Novikov::constant(Cyclotomic::zeta_pow(order, e));
        }
        if (c == 'T') {
            ++pos;
            Rational e(1);
            if (eat('^')) {
                ws();
                if (eat('(')) {
                    e = rational();
                    ws();
                    if (!eat(')'))
                        fail("expected ')' after T exponent");
                } else {
                    e = rational();
                }
            }
            return Novikov::t_power(order, e);
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)))
            return Novikov::rational(order, rational());
        fail("unexpected character");
    }

    Novikov term() {
        Novikov acc = factor();
        ws();
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            acc *= factor();
            ws();
        }
        return acc;
    }

    Novikov element() {
        ws();
        bool lead_minus = false;
        if (pos < s.size() && s[pos] == '-' &&
            !(pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1])))) {
            lead_minus = true;
            ++pos;
        }
        Novikov acc = term();
        if (lead_minus)
            acc = -acc;
        ws();
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            // A '-' can open a negative rational inside the next term; treat
            // it uniformly as a separator with sign.
            bool minus = s[pos] == '-';
            ++pos;
            Novikov t = term();
            acc += minus ? -t : t;
            ws();
        }
        return acc;
    }
};

}  // namespace

Novikov Novikov::parse(const std::string& text, unsigned order) {
    Parser p(text, order);
    p.ws();
    if (p.pos >= text.size())
        throw config_error("empty element literal");
    Novikov n = p.element();
    p.ws();
    if (p.pos != text.size())
        throw config_error("trailing characters in element literal '" + text + "'");
    return n;
}

}  // namespace novpot
