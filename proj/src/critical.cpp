#include "novpot/critical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace novpot {

LaurentPoly LaurentPoly::from_terms(unsigned nvars, unsigned order, std::vector<Term> terms) {
    std::map<std::vector<Int>, Cyclotomic> acc;
    for (auto& t : terms) {
        if (t.exps.size() != nvars)
            throw dimension_error("laurent term exponent vector of wrong length");
        auto it = acc.find(t.exps);
        if (it == acc.end())
            acc.emplace(std::move(t.exps), std::move(t.coeff));
        else
            it->second += t.coeff;
    }
    LaurentPoly p(nvars, order);
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            p.terms_.push_back(Term{c, e});
    return p;
}

LaurentPoly LaurentPoly::transform(const std::vector<std::vector<Int>>& v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<Int> e(nvars_, 0);
        for (std::size_t j = 0; j < nvars_; ++j)
            for (std::size_t r = 0; r < nvars_; ++r)
                e[j] += v[r][j] * t.exps[r];
        out.push_back(Term{t.coeff, std::move(e)});
    }
    return from_terms(nvars_, order_, std::move(out));
}

LaurentPoly LaurentPoly::substitute_first(const Cyclotomic& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt;
        nt.coeff = t.coeff * value.pow(t.exps[0]);
        nt.exps.assign(t.exps.begin() + 1, t.exps.end());
        out.push_back(std::move(nt));
    }
    return from_terms(nvars_ - 1, order_, std::move(out));
}

Cyclotomic LaurentPoly::eval(const std::vector<Cyclotomic>& y) const {
    Cyclotomic acc = Cyclotomic::zero(order_);
    for (const auto& t : terms_) {
        Cyclotomic v = t.coeff;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (t.exps[i] != 0)
                v *= y[i].pow(t.exps[i]);
        acc += v;
    }
    return acc;
}

Int LaurentPoly::cleared_degree() const {
    if (terms_.empty())
        return 0;
    Int total = 0;
    for (unsigned i = 0; i < nvars_; ++i) {
        Int lo = terms_[0].exps[i], hi = terms_[0].exps[i];
        for (const auto& t : terms_) {
            lo = std::min(lo, t.exps[i]);
            hi = std::max(hi, t.exps[i]);
        }
        total += hi - lo;
    }
    return total;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool neg = c.size() > 1 && c[0] == '-' && c.find(' ') == std::string::npos;
        if (first) {
            if (neg) {
                os << "-";
                c = c.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg)
                c = c.substr(1);
        }
        std::string m = monomial_to_string(t.exps, var);
        bool compound = c.find(' ') != std::string::npos;
        if (compound)
            os << "(" << c << ")";
        else if (c != "1" || m == "1")
            os << c;
        if (m != "1") {
            if (compound || c != "1")
                os << "*";
            os << m;
        }
        first = false;
    }
    return os.str();
}

CriticalSystem leading_system(const PotentialFunction& pf, const FiberPoint& u) {
    evaluate_at(pf, u);  // enforces admissibility of the fiber point
    CriticalSystem s;
    s.nvars = pf.nvars;
    s.order = pf.order;
    for (const FormalLaurent& eq : partials(pf)) {
        std::vector<LaurentPoly::Term> terms;
        std::optional<Rational> common;
        for (const auto& t : eq) {
            Rational e = t.exponent.eval(u);
            if (!common)
                common = e;
            else if (*common != e)
                throw non_balanced_fiber_error(
                    "partial mixes T-valuations " + common->to_string() + " and " +
                    e.to_string() + " at u = " + novpot::to_string(u) +
                    "; critical systems are only formed at balanced fibers");
            terms.push_back(LaurentPoly::Term{t.coeff, t.monomial});
        }
        s.equations.push_back(LaurentPoly::from_terms(pf.nvars, pf.order, std::move(terms)));
    }
    return s;
}

namespace {

// w_j = cfac * y^{yexp}: how a current solver variable reads in the
// original coordinates.
struct VarExpr {
    std::vector<Int> yexp;
    Cyclotomic cfac;
};

struct SolveState {
    std::vector<LaurentPoly> eqs;
    std::vector<std::vector<Int>> m;  // y_i = consts[i] * prod_j w_j^{m[i][j]}
    std::vector<Cyclotomic> consts;
    std::vector<VarExpr> exprs;
    std::vector<std::string> choices;
};

std::string render_choice(const std::vector<Int>& yexp, const Cyclotomic& value) {
    std::string mono = monomial_to_string(yexp);
    std::string v = value.to_string();
    if (v.find(' ') != std::string::npos)
        v = "(" + v + ")";
    return mono + " = " + v;
}

void solve_rec(const CriticalSystem& sys, SolveState st, SolveReport& report) {
    const unsigned n = sys.nvars;
    const unsigned order = sys.order;
    const unsigned r = st.exprs.size();

    // Scan for trivially satisfied or provably empty equations.
    std::vector<LaurentPoly> live;
    for (const auto& eq : st.eqs) {
        if (eq.is_zero())
            continue;
        if (eq.terms().size() == 1) {
            // A single monomial never vanishes on (K^*)^r.
            const auto& t = eq.terms()[0];
            std::string residual = t.coeff.to_string();
            if (std::any_of(t.exps.begin(), t.exps.end(), [](Int e) { return e != 0; }))
                residual += " * " + monomial_to_string(t.exps, "w");
            report.empty_branches.push_back(EmptyBranch{st.choices, residual});
            return;
        }
        live.push_back(eq);
    }
    st.eqs = std::move(live);

    if (st.eqs.empty()) {
        if (r == 0) {
            CriticalPoint pt;
            pt.y = st.consts;
            pt.branch = st.choices;
            report.points.push_back(std::move(pt));
        } else {
            report.unresolved.push_back(UnresolvedEliminant{
                st.choices,
                "underdetermined: " + std::to_string(r) + " free variable(s) remain", 0});
        }
        return;
    }

    // Pick the first binomial equation.
    std::size_t bin = st.eqs.size();
    for (std::size_t i = 0; i < st.eqs.size(); ++i)
        if (st.eqs[i].terms().size() == 2) {
            bin = i;
            break;
        }
    if (bin == st.eqs.size()) {
        for (const auto& eq : st.eqs)
            report.unresolved.push_back(
                UnresolvedEliminant{st.choices, eq.to_string("w"), eq.cleared_degree()});
        return;
    }

    // c1 w^a + c2 w^b = 0  =>  w^{a-b} = -c2/c1.
    const auto& t0 = st.eqs[bin].terms()[0];
    const auto& t1 = st.eqs[bin].terms()[1];
    std::vector<Int> g(r);
    for (unsigned i = 0; i < r; ++i)
        g[i] = t0.exps[i] - t1.exps[i];
    Cyclotomic c_rel = -(t1.coeff * t0.coeff.inverse());
    for (unsigned i = 0; i < r; ++i) {
        if (g[i] == 0)
            continue;
        if (g[i] < 0) {
            for (auto& x : g)
                x = -x;
            c_rel = c_rel.inverse();
        }
        break;
    }
    Int k = vector_content(g);
    std::vector<Int> p(r);
    for (unsigned i = 0; i < r; ++i)
        p[i] = g[i] / k;

    // May throw needs_field_extension_error; propagate to the caller.
    std::vector<Cyclotomic> roots = cyclotomic_kth_roots(c_rel, static_cast<unsigned>(k));

    UnimodularPair uv = unimodular_completion(p);

    // Pullback of the primitive relation for the branch label.
    std::vector<Int> label_exp(n, 0);
    Cyclotomic label_const = Cyclotomic::one(order);
    for (unsigned t = 0; t < r; ++t) {
        if (p[t] == 0)
            continue;
        for (unsigned i = 0; i < n; ++i)
            label_exp[i] += p[t] * st.exprs[t].yexp[i];
        label_const *= st.exprs[t].cfac.pow(p[t]);
    }

    // New variable expressions v_j = prod_t w_t^{U[j][t]}.
    std::vector<VarExpr> new_exprs(r);
    for (unsigned j = 0; j < r; ++j) {
        VarExpr e;
        e.yexp.assign(n, 0);
        e.cfac = Cyclotomic::one(order);
        for (unsigned t = 0; t < r; ++t) {
            if (uv.u[j][t] == 0)
                continue;
            for (unsigned i = 0; i < n; ++i)
                e.yexp[i] += uv.u[j][t] * st.exprs[t].yexp[i];
            e.cfac *= st.exprs[t].cfac.pow(uv.u[j][t]);
        }
        new_exprs[j] = std::move(e);
    }

    // Parametrization in the new coordinates: m <- m * V.
    std::vector<std::vector<Int>> mv(n, std::vector<Int>(r, 0));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < r; ++j)
            for (unsigned t = 0; t < r; ++t)
                mv[i][j] += st.m[i][t] * uv.v[t][j];

    std::vector<LaurentPoly> transformed;
    for (std::size_t i = 0; i < st.eqs.size(); ++i) {
        if (i == bin)
            continue;
        transformed.push_back(st.eqs[i].transform(uv.v));
    }

    for (const Cyclotomic& root : roots) {
        SolveState next;
        next.choices = st.choices;
        next.choices.push_back(render_choice(label_exp, root * label_const.inverse()));

        next.eqs.clear();
        next.eqs.reserve(transformed.size());
        for (const auto& eq : transformed)
            next.eqs.push_back(eq.substitute_first(root));

        next.consts = st.consts;
        next.m.assign(n, std::vector<Int>(r - 1, 0));
        for (unsigned i = 0; i < n; ++i) {
            if (mv[i][0] != 0)
                next.consts[i] *= root.pow(mv[i][0]);
            for (unsigned j = 1; j < r; ++j)
                next.m[i][j - 1] = mv[i][j];
        }
        next.exprs.assign(new_exprs.begin() + 1, new_exprs.end());
        solve_rec(sys, std::move(next), report);
    }
}

}  // namespace

SolveReport solve(const CriticalSystem& s) {
    SolveState st;
    st.eqs = s.equations;
    st.m.assign(s.nvars, std::vector<Int>(s.nvars, 0));
    st.consts.assign(s.nvars, Cyclotomic::one(s.order));
    st.exprs.assign(s.nvars, VarExpr{});
    for (unsigned i = 0; i < s.nvars; ++i) {
        st.m[i][i] = 1;
        st.exprs[i].yexp.assign(s.nvars, 0);
        st.exprs[i].yexp[i] = 1;
        st.exprs[i].cfac = Cyclotomic::one(s.order);
    }
    SolveReport report;
    solve_rec(s, std::move(st), report);

    // Soundness gate: no point leaves the solver unverified.
    for (const auto& pt : report.points) {
        for (const auto& c : pt.y)
            if (c.is_zero())
                throw math_error("solver produced a non-unit coordinate");
        for (const auto& eq : s.equations)
            if (!eq.eval(pt.y).is_zero())
                throw math_error("solver produced a point that fails re-substitution");
    }
    return report;
}

bool verify_point(const PotentialFunction& pf, const FiberPoint& u,
                  const std::vector<Cyclotomic>& y) {
    if (y.size() != pf.nvars)
        throw dimension_error("critical point has wrong dimension");
    for (const auto& c : y)
        if (c.is_zero())
            throw math_error("critical points must have unit coordinates");
    for (const FormalLaurent& eq : partials(pf)) {
        Novikov acc = Novikov::zero(pf.order);
        for (const auto& t : eq) {
            Cyclotomic c = t.coeff;
            for (std::size_t i = 0; i < y.size(); ++i)
                if (t.monomial[i] != 0)
                    c *= y[i].pow(t.monomial[i]);
            acc += Novikov::monomial(c, t.exponent.eval(u));
        }
        if (!acc.is_zero())
            return false;
    }
    return true;
}

}  // namespace novpot
