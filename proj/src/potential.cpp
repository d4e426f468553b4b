#include "novpot/potential.hpp"

#include <sstream>

namespace novpot {

namespace {

void merge_term(PotentialFunction& pf, PotentialTerm t) {
    if (t.count < 1)
        throw config_error("disk count must be >= 1");
    if (t.monomial.size() != pf.nvars)
        throw dimension_error("potential term monomial has length " +
                              std::to_string(t.monomial.size()) + ", expected " +
                              std::to_string(pf.nvars));
    if (t.exponent.gradient.size() != pf.nvars)
        throw dimension_error("potential term exponent dimension mismatch");
    if (t.coefficient.order() != pf.order)
        throw field_mismatch_error("potential term coefficient in the wrong field");
    for (auto& existing : pf.terms) {
        if (existing.monomial == t.monomial && existing.exponent == t.exponent) {
            if (existing.coefficient == t.coefficient) {
                existing.count += t.count;
            } else {
                // Fold the weights count*coefficient into one coefficient.
                Cyclotomic w =
                    existing.coefficient * Cyclotomic::from_rational(pf.order, Rational(existing.count)) +
                    t.coefficient * Cyclotomic::from_rational(pf.order, Rational(t.count));
                existing.count = 1;
                existing.coefficient = w;
            }
            return;
        }
    }
    pf.terms.push_back(std::move(t));
}

}  // namespace

PotentialFunction build_potential(const MomentPolytope& p, unsigned order,
                                  const std::vector<Int>& toric_counts,
                                  const std::vector<PotentialTerm>& extra) {
    p.validate();
    std::vector<Int> counts = toric_counts;
    if (counts.empty())
        counts.assign(p.facets.size(), 1);
    if (counts.size() != p.facets.size())
        throw config_error("toric count list has length " + std::to_string(counts.size()) +
                           ", expected one per facet (" + std::to_string(p.facets.size()) + ")");
    PotentialFunction pf;
    pf.nvars = p.dimension;
    pf.order = order;
    std::vector<AffineExponent> ell = facet_functionals(p);
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
        PotentialTerm t;
        t.count = counts[j];
        t.coefficient = Cyclotomic::one(order);
        t.exponent = ell[j];
        t.monomial = p.facets[j].normal;
        merge_term(pf, std::move(t));
    }
    for (const auto& e : extra)
        merge_term(pf, e);
    // Drop terms whose folded weight vanished entirely.
    std::vector<PotentialTerm> kept;
    for (auto& t : pf.terms)
        if (!t.coefficient.is_zero())
            kept.push_back(std::move(t));
    pf.terms = std::move(kept);
    return pf;
}

std::vector<EvaluatedTerm> evaluate_at(const PotentialFunction& pf, const FiberPoint& u) {
    std::vector<EvaluatedTerm> out;
    out.reserve(pf.terms.size());
    for (const auto& t : pf.terms) {
        Rational e = t.exponent.eval(u);
        if (e.sign() <= 0)
            throw invalid_fiber_error("term " + monomial_to_string(t.monomial) +
                                      " has non-positive area exponent " + e.to_string() +
                                      " at u = " + novpot::to_string(u));
        out.push_back(EvaluatedTerm{t.count, t.coefficient, std::move(e), t.monomial});
    }
    return out;
}

std::vector<FormalLaurent> partials(const PotentialFunction& pf) {
    std::vector<FormalLaurent> eqs(pf.nvars);
    for (unsigned i = 0; i < pf.nvars; ++i) {
        for (const auto& t : pf.terms) {
            Int li = t.monomial[i];
            if (li == 0)
                continue;
            FormalLaurentTerm d;
            d.coeff = t.coefficient *
                      Cyclotomic::from_rational(pf.order, Rational(t.count * li));
            d.exponent = t.exponent;
            d.monomial = t.monomial;
            d.monomial[i] -= 1;
            eqs[i].push_back(std::move(d));
        }
    }
    return eqs;
}

std::string monomial_to_string(const std::vector<Int>& m, const std::string& var) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (any)
            os << "*";
        os << var << (i + 1);
        if (m[i] != 1)
            os << "^" << m[i];
        any = true;
    }
    if (!any)
        return "1";
    return os.str();
}

namespace {

std::string render_term(const Cyclotomic& coeff, Int count, const AffineExponent& exp,
                        const std::vector<Int>& mono) {
    std::ostringstream os;
    std::string c = coeff.to_string();
    Rational folded_count(count);
    if (coeff.is_rational()) {
        Rational q = coeff.rational_value() * folded_count;
        if (q != Rational(1)) {
            os << q.to_string() << "*";
        }
    } else {
        if (count != 1)
            os << count << "*";
        bool compound = c.find(' ') != std::string::npos;
        os << (compound ? "(" + c + ")" : c) << "*";
    }
    os << "T^(" << exp.to_string() << ")";
    std::string m = monomial_to_string(mono);
    if (m != "1")
        os << "*" << m;
    return os.str();
}

}  // namespace

std::string to_string(const PotentialFunction& pf) {
    if (pf.terms.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < pf.terms.size(); ++i) {
        if (i)
            os << " + ";
        os << render_term(pf.terms[i].coefficient, pf.terms[i].count, pf.terms[i].exponent,
                          pf.terms[i].monomial);
    }
    return os.str();
}

std::string to_string(const FormalLaurent& eq) {
    if (eq.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < eq.size(); ++i) {
        const auto& t = eq[i];
        std::string c = t.coeff.to_string();
        bool neg = c.size() > 1 && c[0] == '-' && c.find(' ') == std::string::npos;
        if (i == 0) {
            if (neg) {
                os << "-";
                c = c.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg)
                c = c.substr(1);
        }
        bool compound = c.find(' ') != std::string::npos;
        if (compound)
            os << "(" << c << ")*";
        else if (c != "1")
            os << c << "*";
        os << "T^(" << t.exponent.to_string() << ")";
        std::string m = monomial_to_string(t.monomial);
        if (m != "1")
            os << "*" << m;
    }
    return os.str();
}

}  // namespace novpot
