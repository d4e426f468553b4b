#include "novpot/qh.hpp"

#include <algorithm>
#include <sstream>

namespace novpot {

void QHRing::validate() const {
    if (f.size() < 2)
        throw config_error("quotient polynomial must have degree >= 1");
    for (const auto& c : f)
        if (c.order() != order)
            throw field_mismatch_error("quotient polynomial coefficient in the wrong field");
    if (f.back() != Novikov::one(order))
        throw config_error("quotient polynomial must be monic");
}

QHElement qh_zero(const QHRing& r) {
    return QHElement{std::vector<Novikov>(r.degree(), Novikov::zero(r.order))};
}

QHElement qh_one(const QHRing& r) {
    QHElement e = qh_zero(r);
    e.c[0] = Novikov::one(r.order);
    return e;
}

QHElement qh_from_coeffs(const QHRing& r, std::vector<Novikov> coeffs) {
    // Reduce an arbitrary-degree polynomial mod the monic f.
    const unsigned d = r.degree();
    for (std::size_t k = coeffs.size(); k-- > d;) {
        Novikov lead = coeffs[k];
        if (lead.is_zero())
            continue;
        coeffs[k] = Novikov::zero(r.order);
        for (unsigned j = 0; j < d; ++j)
            coeffs[k - d + j] -= lead * r.f[j];
    }
    coeffs.resize(d, Novikov::zero(r.order));
    return QHElement{std::move(coeffs)};
}

QHElement qh_add(const QHElement& a, const QHElement& b, const QHRing& r) {
    QHElement out = qh_zero(r);
    for (unsigned i = 0; i < r.degree(); ++i)
        out.c[i] = a.c[i] + b.c[i];
    return out;
}

QHElement qh_sub(const QHElement& a, const QHElement& b, const QHRing& r) {
    QHElement out = qh_zero(r);
    for (unsigned i = 0; i < r.degree(); ++i)
        out.c[i] = a.c[i] - b.c[i];
    return out;
}

QHElement qh_mul(const QHElement& a, const QHElement& b, const QHRing& r) {
    const unsigned d = r.degree();
    std::vector<Novikov> prod(2 * d - 1, Novikov::zero(r.order));
    for (unsigned i = 0; i < d; ++i) {
        if (a.c[i].is_zero())
            continue;
        for (unsigned j = 0; j < d; ++j)
            if (!b.c[j].is_zero())
                prod[i + j] += a.c[i] * b.c[j];
    }
    return qh_from_coeffs(r, std::move(prod));
}

Novikov qh_eval(const QHRing& r, const Novikov& x) {
    Novikov acc = Novikov::zero(r.order);
    for (std::size_t i = r.f.size(); i-- > 0;)
        acc = acc * x + r.f[i];
    return acc;
}

namespace {

// Novikov value with a tracked noise floor: everything below valuation
// err is unknown.  err infinite means the value is exact.  The min-plus
// propagation rules are exact in the non-Archimedean metric.
struct Tracked {
    Novikov val;
    Val err;

    static Tracked exact(Novikov v) { return Tracked{std::move(v), Val::infinity()}; }
    bool exact_p() const { return err.infinite; }
    bool certainly_zero() const { return val.is_zero() && err.infinite; }
    bool reliably_nonzero() const { return !val.is_zero() && val.valuation() < err; }
};

Tracked t_sub(const Tracked& a, const Tracked& b) {
    return Tracked{a.val - b.val, min(a.err, b.err)};
}

Tracked t_mul(const Tracked& a, const Tracked& b) {
    Val e = min(a.err + b.val.valuation(), b.err + a.val.valuation());
    e = min(e, a.err + b.err);
    return Tracked{a.val * b.val, e};
}

[[noreturn]] void ambiguous(const Rational& precision) {
    throw precision_error(
        "a coefficient's vanishing cannot be decided at truncation precision " +
            precision.to_string(),
        (precision * Rational(2)).to_string());
}

Tracked t_invert(const Tracked& a, const Rational& precision) {
    if (a.certainly_zero())
        throw division_by_zero_error("inversion of zero during polynomial gcd");
    if (!a.reliably_nonzero())
        ambiguous(precision);
    Rational lead = a.val.valuation().v;
    if (a.val.is_monomial() && a.exact_p())
        return Tracked::exact(a.val.invert(precision));
    Novikov inv = a.val.invert(precision + lead);
    Val trunc_err = Val::of(precision);  // (precision + lead) - lead
    Val input_err = a.err + Val::of(-(lead + lead));
    return Tracked{std::move(inv), min(trunc_err, input_err)};
}

using TPoly = std::vector<Tracked>;

// Degree with certified leading coefficient; -1 for the zero polynomial.
int t_degree(TPoly& p, const Rational& precision) {
    while (!p.empty()) {
        Tracked& top = p.back();
        if (top.certainly_zero()) {
            p.pop_back();
            continue;
        }
        if (top.reliably_nonzero())
            return static_cast<int>(p.size()) - 1;
        ambiguous(precision);
    }
    return -1;
}

// Remainder of a mod b (b nonzero, leading certified).
TPoly t_rem(TPoly a, const TPoly& b, const Rational& precision) {
    TPoly r = std::move(a);
    int db = static_cast<int>(b.size()) - 1;
    Tracked lead_inv = t_invert(b.back(), precision);
    while (true) {
        int dr = t_degree(r, precision);
        if (dr < db)
            return r;
        Tracked q = t_mul(r.back(), lead_inv);
        int shift = dr - db;
        for (int i = 0; i <= db; ++i)
            r[shift + i] = t_sub(r[shift + i], t_mul(q, b[i]));
        // Force the cancelled leading slot to exact zero: the subtraction
        // is constructed to cancel it identically.
        r[dr] = Tracked::exact(Novikov::zero(r[dr].val.order()));
    }
}

}  // namespace

bool is_semisimple(const QHRing& r, const Rational& precision) {
    r.validate();
    const unsigned d = r.degree();
    TPoly f, fp;
    for (const auto& c : r.f)
        f.push_back(Tracked::exact(c));
    for (unsigned i = 1; i <= d; ++i)
        fp.push_back(Tracked::exact(r.f[i] * Novikov::rational(r.order, Rational(i))));

    TPoly a = f, b = fp;
    while (true) {
        int db = t_degree(b, precision);
        if (db < 0)
            return t_degree(a, precision) == 0;
        if (db == 0)
            return true;  // unit gcd
        TPoly rem = t_rem(a, b, precision);
        a = std::move(b);
        b = std::move(rem);
    }
}

namespace {

std::vector<Novikov> poly_mul(const std::vector<Novikov>& a, const std::vector<Novikov>& b,
                              unsigned order) {
    std::vector<Novikov> r(a.size() + b.size() - 1, Novikov::zero(order));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

std::vector<QHElement> idempotents(const QHRing& r, const std::vector<Novikov>& roots) {
    r.validate();
    const unsigned d = r.degree();
    if (roots.size() != d)
        throw math_error("expected " + std::to_string(d) + " roots, got " +
                         std::to_string(roots.size()));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!qh_eval(r, roots[i]).is_zero())
            throw math_error("supplied root " + std::to_string(i) +
                             " does not satisfy f exactly");
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw math_error("repeated roots: the ring is not semisimple");
    }

    // Precision ladder for non-monomial denominators; the exact monomial
    // path ignores it.
    Rational span(1);
    for (const auto& c : r.f)
        for (const auto& t : c.terms())
            span = std::max(span, t.exp.abs());
    for (const auto& root : roots)
        for (const auto& t : root.terms())
            span = std::max(span, t.exp.abs());
    Rational precision = span * Rational(static_cast<long long>(4 * d));

    for (int attempt = 0; attempt < 4; ++attempt, precision *= Rational(2)) {
        std::vector<QHElement> es;
        es.reserve(d);
        for (unsigned i = 0; i < d; ++i) {
            std::vector<Novikov> num{Novikov::one(r.order)};
            Novikov den = Novikov::one(r.order);
            for (unsigned j = 0; j < d; ++j) {
                if (j == i)
                    continue;
                num = poly_mul(num, {-roots[j], Novikov::one(r.order)}, r.order);
                den *= roots[i] - roots[j];
            }
            Novikov den_inv = den.invert(precision);
            std::vector<Novikov> coeffs;
            coeffs.reserve(num.size());
            for (auto& c : num)
                coeffs.push_back(c * den_inv);
            es.push_back(qh_from_coeffs(r, std::move(coeffs)));
        }
        if (verify_idempotents(es, r))
            return es;
    }
    throw precision_error(
        "idempotents failed exact certification; the root differences are "
        "not invertible in closed form",
        precision.to_string());
}

bool verify_idempotents(const std::vector<QHElement>& es, const QHRing& r) {
    QHElement sum = qh_zero(r);
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (qh_mul(es[i], es[i], r) != es[i])
            return false;
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (qh_mul(es[i], es[j], r) != qh_zero(r))
                return false;
        sum = qh_add(sum, es[i], r);
    }
    return sum == qh_one(r);
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::none: return "none";
        case Conclusion::nondisplaceable: return "nondisplaceable";
        case Conclusion::superheavy: return "superheavy";
    }
    return "?";
}

Verdict make_verdict(const SolveReport& report, bool semisimple, bool idempotents_verified) {
    Verdict v;
    v.has_critical_point = !report.points.empty();
    v.qh_semisimple = semisimple;
    if (!v.has_critical_point) {
        v.conclusion = Conclusion::none;
        v.rationale = "no critical point at this fiber: no Floer-nonvanishing certificate";
        return v;
    }
    if (semisimple && idempotents_verified) {
        v.conclusion = Conclusion::superheavy;
        v.rationale =
            "critical point certifies nonvanishing Floer cohomology, and the quantum "
            "cohomology splits as a verified sum of idempotent field factors: the fiber "
            "is superheavy for one of the idempotent quasi-states, hence stably "
            "non-displaceable";
    } else {
        v.conclusion = Conclusion::nondisplaceable;
        v.rationale =
            "critical point certifies Floer cohomology isomorphic to the classical "
            "cohomology: the fiber is non-displaceable; no semisimple splitting was "
            "certified, so no superheaviness claim is made";
    }
    return v;
}

std::string to_string(const QHElement& e, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = e.c.size(); i-- > 0;) {
        if (e.c[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        if (i == 0) {
            std::string c = e.c[i].to_string();
            os << (c.find(' ') != std::string::npos ? "(" + c + ")" : c);
        } else {
            os << "(" << e.c[i].to_string() << ")*" << var;
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    if (first)
        return "0";
    return os.str();
}

std::string to_string(const QHRing& r, const std::string& var) {
    std::ostringstream os;
    os << var << "^" << r.degree();
    for (std::size_t i = r.degree(); i-- > 0;) {
        if (r.f[i].is_zero())
            continue;
        os << " + (" << r.f[i].to_string() << ")";
        if (i >= 1) {
            os << "*" << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace novpot
