#include "novpot/pipeline.hpp"

#include <functional>
#include <sstream>

namespace novpot {

using json = nlohmann::ordered_json;

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& l : lines)
        os << l << "\n";
    return os.str();
}

FiberPoint resolve_fiber_point(const DocumentConfig& c, const std::optional<FiberPoint>& at) {
    if (at) {
        if (at->size() != c.fiber_dimension)
            throw config_error("--at expects " + std::to_string(c.fiber_dimension) +
                               " coordinates");
        return *at;
    }
    if (c.fiber_point)
        return *c.fiber_point;
    // Fall back to the balanced fiber when it is unique.
    std::vector<AffineExponent> exps;
    for (const auto& t : c.build().terms)
        exps.push_back(t.exponent);
    BalanceResult b = balanced_point(exps);
    if (b.kind == BalanceResult::Kind::unique)
        return b.point;
    throw config_error("no fiber point: pass --at or add fiber_point to the configuration");
}

namespace {

json fiber_to_json(const FiberPoint& u) {
    json a = json::array();
    for (const auto& x : u)
        a.push_back(x.to_string());
    return a;
}

json balance_to_json(const BalanceResult& b) {
    json j;
    switch (b.kind) {
        case BalanceResult::Kind::unique:
            j["kind"] = "unique";
            j["point"] = fiber_to_json(b.point);
            break;
        case BalanceResult::Kind::family:
            j["kind"] = "family";
            j["dimension"] = b.family_dim();
            j["point"] = fiber_to_json(b.point);
            break;
        case BalanceResult::Kind::empty:
            j["kind"] = "empty";
            break;
    }
    return j;
}

std::string balance_to_text(const BalanceResult& b) {
    switch (b.kind) {
        case BalanceResult::Kind::unique:
            return "unique " + to_string(b.point);
        case BalanceResult::Kind::family:
            return "affine family of dimension " + std::to_string(b.family_dim()) +
                   " through " + to_string(b.point);
        case BalanceResult::Kind::empty:
            return "empty (inconsistent balance conditions)";
    }
    return "?";
}

std::vector<AffineExponent> all_exponents(const PotentialFunction& pf) {
    std::vector<AffineExponent> exps;
    for (const auto& t : pf.terms)
        exps.push_back(t.exponent);
    return exps;
}

json term_to_json(const PotentialTerm& t) {
    json j;
    j["count"] = t.count;
    j["coefficient"] = t.coefficient.to_string();
    j["exponent"] = t.exponent.to_string();
    j["monomial"] = t.monomial;
    return j;
}

json solve_to_json(const SolveReport& r) {
    json j;
    j["points"] = json::array();
    for (const auto& p : r.points) {
        json pj;
        pj["y"] = json::array();
        for (const auto& c : p.y)
            pj["y"].push_back(c.to_string());
        pj["branch"] = p.branch;
        j["points"].push_back(std::move(pj));
    }
    j["empty_branches"] = json::array();
    for (const auto& e : r.empty_branches) {
        json ej;
        ej["branch"] = e.branch;
        ej["residual"] = e.residual;
        j["empty_branches"].push_back(std::move(ej));
    }
    j["unresolved"] = json::array();
    for (const auto& u : r.unresolved) {
        json uj;
        uj["branch"] = u.branch;
        uj["eliminant"] = u.eliminant;
        uj["degree"] = u.degree;
        j["unresolved"].push_back(std::move(uj));
    }
    return j;
}

std::string branch_to_text(const std::vector<std::string>& branch) {
    if (branch.empty())
        return "(top level)";
    std::string s;
    for (std::size_t i = 0; i < branch.size(); ++i) {
        if (i)
            s += "; ";
        s += branch[i];
    }
    return s;
}

void append_solve_text(Report& rep, const SolveReport& r) {
    rep.lines.push_back("critical points: " + std::to_string(r.points.size()));
    for (const auto& p : r.points) {
        std::string s = "  y = (";
        for (std::size_t i = 0; i < p.y.size(); ++i) {
            if (i)
                s += ", ";
            s += p.y[i].to_string();
        }
        s += ")   [" + branch_to_text(p.branch) + "]";
        rep.lines.push_back(s);
    }
    rep.lines.push_back("empty branches: " + std::to_string(r.empty_branches.size()));
    for (const auto& e : r.empty_branches)
        rep.lines.push_back("  " + branch_to_text(e.branch) + "  residual " + e.residual);
    rep.lines.push_back("unresolved eliminants: " + std::to_string(r.unresolved.size()));
    for (const auto& u : r.unresolved)
        rep.lines.push_back("  [" + branch_to_text(u.branch) + "] " + u.eliminant +
                            " (degree " + std::to_string(u.degree) + ")");
}

}  // namespace

Report polytope_report(const DocumentConfig& c) {
    Report rep;
    std::vector<AffineExponent> fns = facet_functionals(c.polytope);
    PotentialFunction pf = c.build();
    BalanceResult b = balanced_point(all_exponents(pf));

    rep.data["name"] = c.name;
    rep.data["dimension"] = c.polytope.dimension;
    rep.data["facets"] = json::array();
    rep.lines.push_back("polytope: " + std::to_string(c.polytope.facets.size()) +
                        " facets in dimension " + std::to_string(c.polytope.dimension));
    for (std::size_t i = 0; i < c.polytope.facets.size(); ++i) {
        const Facet& f = c.polytope.facets[i];
        json fj;
        fj["name"] = f.name;
        fj["normal"] = f.normal;
        fj["offset"] = f.offset.to_string();
        fj["functional"] = fns[i].to_string();
        rep.data["facets"].push_back(std::move(fj));
        rep.lines.push_back("  " + (f.name.empty() ? "facet " + std::to_string(i) : f.name) +
                            ": l(u) = " + fns[i].to_string());
    }
    rep.data["maslov2_exponents"] = json::array();
    for (const auto& e : all_exponents(pf))
        rep.data["maslov2_exponents"].push_back(e.to_string());
    rep.data["balanced_point"] = balance_to_json(b);
    rep.lines.push_back("balanced point: " + balance_to_text(b));
    if (c.fiber_point) {
        rep.data["configured_fiber_point"] = fiber_to_json(*c.fiber_point);
        rep.data["fiber_point_interior"] = is_interior(c.polytope, *c.fiber_point);
        rep.lines.push_back("configured fiber point " + to_string(*c.fiber_point) +
                            (is_interior(c.polytope, *c.fiber_point) ? " (interior)"
                                                                     : " (NOT interior)"));
    }
    return rep;
}

Report potential_report(const DocumentConfig& c, const PipelineOptions& opt) {
    Report rep;
    PotentialFunction pf = c.build();
    rep.data["name"] = c.name;
    rep.data["potential"] = to_string(pf);
    rep.data["terms"] = json::array();
    for (const auto& t : pf.terms)
        rep.data["terms"].push_back(term_to_json(t));
    rep.lines.push_back("potential = " + to_string(pf));

    std::optional<FiberPoint> u;
    if (opt.at)
        u = opt.at;
    else if (c.fiber_point)
        u = c.fiber_point;
    if (u) {
        rep.data["at"] = fiber_to_json(*u);
        json evs = json::array();
        rep.lines.push_back("at u = " + to_string(*u) + ":");
        for (const auto& ev : evaluate_at(pf, *u)) {
            json ej;
            ej["count"] = ev.count;
            ej["coefficient"] = ev.coefficient.to_string();
            ej["exponent"] = ev.exponent.to_string();
            ej["monomial"] = ev.monomial;
            evs.push_back(std::move(ej));
            rep.lines.push_back("  T-exponent " + ev.exponent.to_string() + " on " +
                                monomial_to_string(ev.monomial));
        }
        rep.data["evaluated"] = std::move(evs);
    }
    return rep;
}

Report solve_command(const DocumentConfig& c, const PipelineOptions& opt) {
    Report rep;
    PotentialFunction pf = c.build();
    FiberPoint u = resolve_fiber_point(c, opt.at);
    CriticalSystem sys = leading_system(pf, u);
    SolveReport sr = solve(sys);

    bool all_verified = true;
    for (const auto& p : sr.points)
        all_verified = all_verified && verify_point(pf, u, p.y);

    rep.data["name"] = c.name;
    rep.data["fiber_point"] = fiber_to_json(u);
    rep.data["system"] = json::array();
    rep.lines.push_back("critical system at u = " + to_string(u) + ":");
    for (const auto& eq : sys.equations) {
        rep.data["system"].push_back(eq.to_string());
        rep.lines.push_back("  " + eq.to_string() + " = 0");
    }
    rep.data["solve"] = solve_to_json(sr);
    rep.data["points_verified"] = all_verified;
    append_solve_text(rep, sr);
    rep.lines.push_back(std::string("re-verification against the potential: ") +
                        (all_verified ? "exact pass" : "FAILED"));
    return rep;
}

Report classes_report(const DocumentConfig& c) {
    Report rep;
    rep.data["name"] = c.name;
    rep.data["lattices"] = json::array();
    for (const auto& [lname, lat] : c.lattices) {
        json lj;
        lj["name"] = lname;
        lj["basis"] = lat.basis();
        lj["generators"] = json::array();
        rep.lines.push_back("lattice " + lname + " (basis:" + [&] {
            std::string s;
            for (const auto& b : lat.basis())
                s += " " + b;
            return s;
        }() + ")");
        for (const auto& g : lat.generators()) {
            RelClass cls = normalize(lat, {{g, 1}});
            json gj;
            gj["label"] = g;
            gj["coords"] = cls.coords;
            std::string line = "  " + g + " ->";
            for (std::size_t i = 0; i < cls.coords.size(); ++i)
                line += " " + std::to_string(cls.coords[i]);
            try {
                gj["chern"] = chern(cls);
                gj["maslov"] = maslov(cls);
                line += "  c1=" + std::to_string(chern(cls)) +
                        " maslov=" + std::to_string(maslov(cls));
            } catch (const lattice_error&) {
            }
            try {
                gj["area"] = area(cls).to_string();
                line += " area=" + area(cls).to_string();
            } catch (const lattice_error&) {
            }
            try {
                gj["boundary"] = boundary(cls);
            } catch (const lattice_error&) {
            }
            if (!lat.pairing_rows().empty()) {
                json pj;
                std::string pline = "    pairs:";
                for (const auto& [divisor, row] : lat.pairing_rows()) {
                    (void)row;
                    Int v = pair_with(cls, divisor);
                    pj[divisor] = v;
                    pline += " " + g + "." + divisor + "=" + std::to_string(v);
                }
                gj["pairings"] = std::move(pj);
                rep.lines.push_back(line);
                line = pline;
            }
            try {
                gj["in_basis_cone"] = positive_cone_member(cls, lat.basis());
            } catch (const math_error&) {
            }
            lj["generators"].push_back(std::move(gj));
            rep.lines.push_back(line);
        }
        rep.data["lattices"].push_back(std::move(lj));
    }

    rep.data["gluing"] = json::array();
    for (const auto& rule : c.gluing_rules) {
        json rj;
        rj["rule"] = rule.name;
        json vals;
        for (Functional f : {Functional::chern, Functional::maslov, Functional::area,
                             Functional::boundary}) {
            try {
                GlueOutcome out = glue_check(c.lattices, rule, f);
                json oj;
                oj["value"] = to_string(out.value);
                if (out.solved_term == -2)
                    oj["mode"] = "consistent";
                else if (out.solved_term == -1)
                    oj["mode"] = "solved result";
                else
                    oj["mode"] = "solved piece " + rule.pieces[out.solved_term].cls;
                vals[functional_name(f)] = std::move(oj);
                rep.lines.push_back("gluing " + rule.name + ": " + functional_name(f) + " = " +
                                    to_string(out.value) +
                                    (out.solved_term == -2 ? " (consistent)" : ""));
            } catch (const lattice_error&) {
                // Not enough declared data for this functional on this rule.
            }
        }
        rj["functionals"] = std::move(vals);
        rep.data["gluing"].push_back(std::move(rj));
    }

    rep.data["index_checks"] = json::array();
    for (const auto& ic : c.index_checks) {
        Int ind = fredholm_index(ic.n, ic.genus, ic.chi, ic.c1, ic.punctures);
        Rational cn = normal_chern(ind, ic.genus, ic.gamma0, ic.boundary_components);
        bool at = at_check(ind, cn, ic.z_du);
        json ij;
        ij["name"] = ic.name;
        ij["ind"] = ind;
        ij["c_n"] = cn.to_string();
        ij["z_du"] = ic.z_du;
        ij["automatic_transversality"] = at;
        rep.data["index_checks"].push_back(std::move(ij));
        rep.lines.push_back("index check '" + ic.name + "': ind=" + std::to_string(ind) +
                            " c_N=" + cn.to_string() + " Z=" + std::to_string(ic.z_du) +
                            (at ? "  transversality: automatic" : "  transversality: NOT automatic"));
    }
    return rep;
}

Report qh_command(const DocumentConfig& c, const PipelineOptions& opt) {
    if (!c.qh_ring)
        throw config_error("configuration has no qh_ring section");
    Report rep;
    const QHRing& ring = *c.qh_ring;
    rep.data["name"] = c.name;
    rep.data["ring"] = to_string(ring);
    rep.lines.push_back("ring: Lambda[Z]/(" + to_string(ring) + ")");

    bool ss = is_semisimple(ring, opt.precision);
    rep.data["semisimple"] = ss;
    rep.lines.push_back(std::string("semisimple: ") + (ss ? "yes" : "no"));

    rep.data["idempotents"] = json::array();
    bool verified = false;
    if (c.qh_root_mode != QHRootMode::none && ss) {
        std::vector<Novikov> roots = c.resolve_qh_roots();
        json rj = json::array();
        for (const auto& r : roots)
            rj.push_back(r.to_string());
        rep.data["roots"] = std::move(rj);
        std::vector<QHElement> es = idempotents(ring, roots);
        verified = verify_idempotents(es, ring);
        for (std::size_t i = 0; i < es.size(); ++i) {
            rep.data["idempotents"].push_back(to_string(es[i]));
            rep.lines.push_back("e" + std::to_string(i + 1) + " = " + to_string(es[i]));
        }
    }
    rep.data["idempotents_verified"] = verified;
    rep.lines.push_back(std::string("idempotent identities: ") +
                        (verified ? "verified exactly" : "not verified"));
    return rep;
}

Report full_report(const DocumentConfig& c, const PipelineOptions& opt) {
    Report rep;
    rep.data["name"] = c.name;

    Report pol = polytope_report(c);
    rep.data["polytope"] = pol.data;
    rep.lines.insert(rep.lines.end(), pol.lines.begin(), pol.lines.end());

    Report pot = potential_report(c, opt);
    rep.data["potential"] = pot.data;
    rep.lines.insert(rep.lines.end(), pot.lines.begin(), pot.lines.end());

    Report sol = solve_command(c, opt);
    rep.data["solve"] = sol.data;
    rep.lines.insert(rep.lines.end(), sol.lines.begin(), sol.lines.end());

    if (!c.lattices.empty()) {
        Report cls = classes_report(c);
        rep.data["classes"] = cls.data;
        rep.lines.insert(rep.lines.end(), cls.lines.begin(), cls.lines.end());
    }

    bool semisimple = false;
    bool verified = false;
    if (c.qh_ring) {
        Report q = qh_command(c, opt);
        rep.data["qh"] = q.data;
        rep.lines.insert(rep.lines.end(), q.lines.begin(), q.lines.end());
        semisimple = q.data["semisimple"].get<bool>();
        verified = q.data["idempotents_verified"].get<bool>();
    }

    PotentialFunction pf = c.build();
    FiberPoint u = resolve_fiber_point(c, opt.at);
    SolveReport sr = solve(leading_system(pf, u));
    Verdict v = make_verdict(sr, semisimple, verified);
    json vj;
    vj["has_critical_point"] = v.has_critical_point;
    vj["qh_semisimple"] = v.qh_semisimple;
    vj["conclusion"] = to_string(v.conclusion);
    vj["rationale"] = v.rationale;
    rep.data["verdict"] = std::move(vj);
    rep.lines.push_back("verdict: " + to_string(v.conclusion));
    rep.lines.push_back("  " + v.rationale);
    return rep;
}

namespace {

void run_check(std::vector<ChecklistItem>& items, const std::string& name,
               const std::function<std::string()>& body) {
    ChecklistItem item;
    item.name = name;
    try {
        item.detail = body();
        item.pass = true;
    } catch (const std::exception& e) {
        item.pass = false;
        item.detail = e.what();
    }
    items.push_back(std::move(item));
}

[[noreturn]] void fail_check(const std::string& msg) { throw error(msg); }

}  // namespace

std::vector<ChecklistItem> builtin_verification(const DocumentConfig& c,
                                                const Rational& precision) {
    std::vector<ChecklistItem> items;
    const unsigned m = c.cyclotomic_order;

    run_check(items, "potential has the expected four terms", [&] {
        PotentialFunction pf = c.build();
        if (pf.terms.size() != 4)
            fail_check("expected 4 terms, found " + std::to_string(pf.terms.size()) + ": " +
                       to_string(pf));
        auto expect = [&](Int count, std::vector<Int> mono, AffineExponent exp) {
            for (const auto& t : pf.terms)
                if (t.count == count && t.monomial == mono && t.exponent == exp &&
                    t.coefficient == Cyclotomic::one(m))
                    return;
            fail_check("missing term: count " + std::to_string(count) + " on " +
                       monomial_to_string(mono) + " with exponent " + exp.to_string());
        };
        expect(1, {1, 0}, AffineExponent(Rational(0), {Rational(1), Rational(0)}));
        expect(1, {0, 1}, AffineExponent(Rational(0), {Rational(0), Rational(1)}));
        expect(1, {-1, -4}, AffineExponent(Rational(4), {Rational(-1), Rational(-4)}));
        expect(2, {0, -2}, AffineExponent(Rational(2), {Rational(0), Rational(-2)}));
        return to_string(pf);
    });

    run_check(items, "balanced fiber is (2/3, 2/3)", [&] {
        PotentialFunction pf = c.build();
        std::vector<AffineExponent> exps;
        for (const auto& t : pf.terms)
            exps.push_back(t.exponent);
        BalanceResult b = balanced_point(exps);
        FiberPoint expected{Rational(2, 3), Rational(2, 3)};
        if (b.kind != BalanceResult::Kind::unique || b.point != expected)
            fail_check("balanced point came out " + balance_to_text(b));
        return to_string(b.point);
    });

    run_check(items, "critical system has three points on the +1 branch", [&] {
        PotentialFunction pf = c.build();
        FiberPoint u{Rational(2, 3), Rational(2, 3)};
        SolveReport sr = solve(leading_system(pf, u));
        if (sr.points.size() != 3)
            fail_check("expected 3 points, got " + std::to_string(sr.points.size()));
        if (sr.empty_branches.size() != 1)
            fail_check("expected exactly one empty branch");
        if (sr.empty_branches[0].residual != "1")
            fail_check("empty-branch residual is " + sr.empty_branches[0].residual +
                       ", expected 1");
        if (sr.empty_branches[0].branch.size() != 1 ||
            sr.empty_branches[0].branch[0] != "y1*y2^2 = -1")
            fail_check("empty branch is not the -1 monomial choice");
        if (!sr.unresolved.empty())
            fail_check("solver left unresolved eliminants");
        Cyclotomic one = Cyclotomic::one(m);
        Cyclotomic eight = Cyclotomic::from_rational(m, Rational(8));
        for (const auto& p : sr.points) {
            if (!verify_point(pf, u, p.y))
                fail_check("a solver point fails exact re-verification");
            if (p.y[0] * p.y[1].pow(2) != one)
                fail_check("a point violates y1*y2^2 = 1");
            if (p.y[1].pow(3) != eight)
                fail_check("a point violates y2^3 = 8");
        }
        return "3 points, 1 empty branch (residual 1), 0 unresolved";
    });

    run_check(items, "chern values propagate from the seeds", [&] {
        auto f4 = c.lattices.find("F4");
        if (f4 == c.lattices.end())
            fail_check("no F4 lattice configured");
        auto want = [&](const std::string& label, Int expect) {
            Int got = chern(normalize(f4->second, {{label, 1}}));
            if (got != expect)
                fail_check("c1(" + label + ") = " + std::to_string(got) + ", expected " +
                           std::to_string(expect));
        };
        want("e1", 1);
        want("e3", 1);
        want("e2", 6);
        for (Int k = 1; k <= 5; ++k) {
            const GluingRule* rule = nullptr;
            for (const auto& r : c.gluing_rules)
                if (r.name == "H-cap-k" + std::to_string(k))
                    rule = &r;
            if (!rule)
                fail_check("missing gluing rule H-cap-k" + std::to_string(k));
            GlueOutcome out = glue_check(c.lattices, *rule, Functional::chern);
            if (!std::holds_alternative<Int>(out.value) || std::get<Int>(out.value) != k)
                fail_check("c1 of the k=" + std::to_string(k) + " cap came out " +
                           to_string(out.value));
        }
        const GluingRule* exotic = nullptr;
        for (const auto& r : c.gluing_rules)
            if (r.name == "exotic-cap")
                exotic = &r;
        if (!exotic)
            fail_check("missing gluing rule exotic-cap");
        FunctionalValue mu = glue_forced(c.lattices, *exotic, Functional::maslov, 0);
        if (!std::holds_alternative<Int>(mu) || std::get<Int>(mu) != 2)
            fail_check("maslov of the exotic class came out " + to_string(mu));
        return "c1(e1)=c1(e3)=1, c1(e2)=6, c1(k-cap)=k for k=1..5, maslov(exotic)=2";
    });

    run_check(items, "exotic area from gluing matches the configured exponent", [&] {
        const GluingRule* exotic = nullptr;
        for (const auto& r : c.gluing_rules)
            if (r.name == "exotic-cap")
                exotic = &r;
        if (!exotic)
            fail_check("missing gluing rule exotic-cap");
        FunctionalValue a = glue_forced(c.lattices, *exotic, Functional::area, 0);
        AffineExponent expected(Rational(2), {Rational(0), Rational(-2)});
        if (!std::holds_alternative<AffineExponent>(a) ||
            std::get<AffineExponent>(a) != expected)
            fail_check("glued area came out " + to_string(a));
        bool found = false;
        for (const auto& t : c.extra_terms)
            if (t.exponent == expected)
                found = true;
        if (!found)
            fail_check("no configured extra term carries the exponent 2-2*u2");
        return "area = " + expected.to_string() + " by both derivations";
    });

    run_check(items, "pairing self-intersections are +4 and -4", [&] {
        auto f4 = c.lattices.find("F4");
        if (f4 == c.lattices.end())
            fail_check("no F4 lattice configured");
        Int e22 = pair_with(normalize(f4->second, {{"e2", 1}}), "e2");
        Int e44 = pair_with(normalize(f4->second, {{"e4", 1}}), "e4");
        if (e22 != 4)
            fail_check("e2.e2 = " + std::to_string(e22));
        if (e44 != -4)
            fail_check("e4.e4 = " + std::to_string(e44));
        return "e2.e2 = 4, e4.e4 = -4";
    });

    run_check(items, "index arithmetic gives (1,0), (2,0), (3,1) with transversality", [&] {
        if (c.index_checks.size() != 3)
            fail_check("expected 3 configured index checks");
        const std::vector<std::pair<Int, Rational>> expected{
            {1, Rational(0)}, {2, Rational(0)}, {3, Rational(1)}};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& ic = c.index_checks[i];
            Int ind = fredholm_index(ic.n, ic.genus, ic.chi, ic.c1, ic.punctures);
            Rational cn = normal_chern(ind, ic.genus, ic.gamma0, ic.boundary_components);
            if (ind != expected[i].first || cn != expected[i].second)
                fail_check("check '" + ic.name + "' gave (ind, c_N) = (" + std::to_string(ind) +
                           ", " + cn.to_string() + ")");
            if (!at_check(ind, cn, ic.z_du))
                fail_check("automatic transversality fails for '" + ic.name + "'");
        }
        return "(1,0), (2,0), (3,1); strict inequality holds for all three";
    });

    run_check(items, "quantum cohomology is semisimple with certified idempotents", [&] {
        if (!c.qh_ring)
            fail_check("no qh_ring section configured");
        if (!is_semisimple(*c.qh_ring, precision))
            fail_check("ring is not semisimple");
        std::vector<Novikov> roots = c.resolve_qh_roots();
        std::vector<QHElement> es = idempotents(*c.qh_ring, roots);
        if (!verify_idempotents(es, *c.qh_ring))
            fail_check("idempotent identities fail");
        // Closed form: (1/3) eps^{-2} (z^2 + eps z + eps^2).
        if (c.qh_ring->degree() == 3) {
            for (std::size_t i = 0; i < roots.size(); ++i) {
                Novikov third = Novikov::rational(c.cyclotomic_order, Rational(1, 3));
                QHElement closed{{third * roots[i].pow(-2) * roots[i].pow(2),
                                  third * roots[i].pow(-2) * roots[i],
                                  third * roots[i].pow(-2)}};
                if (es[i] != closed)
                    fail_check("idempotent " + std::to_string(i + 1) +
                               " differs from the closed form");
            }
        }
        return std::to_string(es.size()) + " idempotents, identities exact, closed form matches";
    });

    run_check(items, "verdict is superheavy", [&] {
        PipelineOptions opt;
        opt.precision = precision;
        Report rep = full_report(c, opt);
        std::string conclusion = rep.data["verdict"]["conclusion"].get<std::string>();
        if (conclusion != "superheavy")
            fail_check("conclusion came out '" + conclusion + "'");
        return conclusion;
    });

    return items;
}

Report checklist_report(const std::vector<ChecklistItem>& items) {
    Report rep;
    rep.data["checks"] = json::array();
    bool all = true;
    for (const auto& item : items) {
        json ij;
        ij["name"] = item.name;
        ij["pass"] = item.pass;
        ij["detail"] = item.detail;
        rep.data["checks"].push_back(std::move(ij));
        rep.lines.push_back(std::string(item.pass ? "[PASS] " : "[FAIL] ") + item.name +
                            (item.detail.empty() ? "" : "  -- " + item.detail));
        all = all && item.pass;
    }
    rep.data["all_pass"] = all;
    rep.lines.push_back(all ? "all checks passed" : "SOME CHECKS FAILED");
    return rep;
}

}  // namespace novpot
