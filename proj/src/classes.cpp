#include "novpot/classes.hpp"

#include <algorithm>
#include <sstream>

namespace novpot {

void ClassLattice::set_basis(std::vector<std::string> basis) {
    basis_ = std::move(basis);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::vector<Int> unit(basis_.size(), 0);
        unit[i] = 1;
        reps_[basis_[i]] = std::move(unit);
        if (std::find(generators_.begin(), generators_.end(), basis_[i]) == generators_.end())
            generators_.push_back(basis_[i]);
    }
}

void ClassLattice::add_generator(const std::string& label, std::vector<Int> basis_coords) {
    if (basis_coords.size() != basis_.size())
        throw config_error("relation for '" + label + "' has " +
                           std::to_string(basis_coords.size()) + " coordinates, expected " +
                           std::to_string(basis_.size()));
    if (reps_.count(label))
        throw config_error("generator '" + label + "' declared twice");
    reps_[label] = std::move(basis_coords);
    generators_.push_back(label);
}

void ClassLattice::set_pairing_row(const std::string& divisor, std::map<std::string, Int> row) {
    std::vector<Int> r(basis_.size(), 0);
    for (const auto& [label, v] : row) {
        auto it = std::find(basis_.begin(), basis_.end(), label);
        if (it == basis_.end())
            throw config_error("pairing row for '" + divisor + "' names non-basis class '" +
                               label + "'");
        r[static_cast<std::size_t>(it - basis_.begin())] = v;
    }
    pairings_[divisor] = std::move(r);
}

namespace {

void require_basis_label(const std::vector<std::string>& basis, const std::string& label,
                         const std::string& lattice) {
    if (std::find(basis.begin(), basis.end(), label) == basis.end())
        throw config_error("functional seeded on non-basis class '" + label +
                           "' in lattice '" + lattice + "'");
}

}  // namespace

void ClassLattice::seed_chern(const std::string& basis_label, Int value) {
    require_basis_label(basis_, basis_label, name);
    chern_[basis_label] = value;
}
void ClassLattice::seed_boundary(const std::string& basis_label, std::vector<Int> value) {
    require_basis_label(basis_, basis_label, name);
    boundary_[basis_label] = std::move(value);
}
void ClassLattice::seed_area(const std::string& basis_label, AffineExponent value) {
    require_basis_label(basis_, basis_label, name);
    area_.emplace(basis_label, std::move(value));
}

bool ClassLattice::has_generator(const std::string& label) const { return reps_.count(label) != 0; }

const std::vector<Int>& ClassLattice::rep(const std::string& label) const {
    auto it = reps_.find(label);
    if (it == reps_.end())
        throw lattice_error("unknown generator '" + label + "' in lattice '" + name + "'");
    return it->second;
}

std::optional<Int> ClassLattice::chern_seed(const std::string& b) const {
    auto it = chern_.find(b);
    if (it == chern_.end())
        return std::nullopt;
    return it->second;
}

std::optional<AffineExponent> ClassLattice::area_seed(const std::string& b) const {
    auto it = area_.find(b);
    if (it == area_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::vector<Int>> ClassLattice::boundary_seed(const std::string& b) const {
    auto it = boundary_.find(b);
    if (it == boundary_.end())
        return std::nullopt;
    return it->second;
}

RelClass normalize(const ClassLattice& lat, const GeneratorExpr& expr) {
    std::vector<Int> coords(lat.basis_size(), 0);
    for (const auto& [label, mult] : expr) {
        const std::vector<Int>& rep = lat.rep(label);
        for (std::size_t i = 0; i < coords.size(); ++i)
            coords[i] += mult * rep[i];
    }
    return RelClass{&lat, std::move(coords)};
}

Int pair_with(const RelClass& a, const std::string& divisor) {
    auto it = a.lattice->pairing_rows().find(divisor);
    if (it == a.lattice->pairing_rows().end())
        throw lattice_error("no pairing data for divisor '" + divisor + "' in lattice '" +
                            a.lattice->name + "'");
    Int acc = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        acc += a.coords[i] * it->second[i];
    return acc;
}

Int chern(const RelClass& a) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0)
            continue;
        auto seed = a.lattice->chern_seed(a.lattice->basis()[i]);
        if (!seed)
            throw lattice_error("chern undeclared on basis class '" + a.lattice->basis()[i] +
                                "' of lattice '" + a.lattice->name + "'");
        acc += a.coords[i] * *seed;
    }
    return acc;
}

Int maslov(const RelClass& a) { return 2 * chern(a); }

AffineExponent area(const RelClass& a) {
    AffineExponent acc = AffineExponent::constant_of(a.lattice->fiber_dim, Rational(0));
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0)
            continue;
        auto seed = a.lattice->area_seed(a.lattice->basis()[i]);
        if (!seed)
            throw lattice_error("area undeclared on basis class '" + a.lattice->basis()[i] +
                                "' of lattice '" + a.lattice->name + "'");
        AffineExponent term = *seed;
        term.scale(Rational(a.coords[i]));
        acc += term;
    }
    return acc;
}

std::vector<Int> boundary(const RelClass& a) {
    std::vector<Int> acc(a.lattice->fiber_dim, 0);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0)
            continue;
        auto seed = a.lattice->boundary_seed(a.lattice->basis()[i]);
        if (!seed)
            throw lattice_error("boundary undeclared on basis class '" + a.lattice->basis()[i] +
                                "' of lattice '" + a.lattice->name + "'");
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc[j] += a.coords[i] * (*seed)[j];
    }
    return acc;
}

bool positive_cone_member(const RelClass& a, const std::vector<std::string>& cone) {
    // Solve a = sum x_i g_i over Q, then require an integral, non-negative
    // unique solution.  Dependent generator sets are out of scope.
    const std::size_t n = a.coords.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(cone.size()));
    for (std::size_t j = 0; j < cone.size(); ++j) {
        const std::vector<Int>& rep = a.lattice->rep(cone[j]);
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = Rational(rep[i]);
    }
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i)
        b[i] = Rational(a.coords[i]);
    LinearSolution s = solve_rational(std::move(m), std::move(b));
    if (s.kind == LinearSolution::Kind::inconsistent)
        return false;
    if (s.kind == LinearSolution::Kind::underdetermined)
        throw math_error("positive-cone test needs linearly independent cone generators");
    for (const auto& x : s.particular)
        if (!x.is_integer() || x.sign() < 0)
            return false;
    return true;
}

std::string functional_name(Functional f) {
    switch (f) {
        case Functional::chern: return "chern";
        case Functional::maslov: return "maslov";
        case Functional::area: return "area";
        case Functional::boundary: return "boundary";
    }
    return "?";
}

std::string to_string(const FunctionalValue& v) {
    if (std::holds_alternative<Int>(v))
        return std::to_string(std::get<Int>(v));
    if (std::holds_alternative<AffineExponent>(v))
        return std::get<AffineExponent>(v).to_string();
    const auto& vec = std::get<std::vector<Int>>(v);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < vec.size(); ++i) {
        if (i)
            os << ", ";
        os << vec[i];
    }
    os << ")";
    return os.str();
}

namespace {

const ClassLattice& lattice_of(const LatticeSet& ls, const GluingTerm& t) {
    auto it = ls.find(t.lattice);
    if (it == ls.end())
        throw lattice_error("gluing rule references unknown lattice '" + t.lattice + "'");
    return it->second;
}

FunctionalValue scale_value(FunctionalValue v, Int mult) {
    if (std::holds_alternative<Int>(v))
        return Int(std::get<Int>(v) * mult);
    if (std::holds_alternative<AffineExponent>(v)) {
        AffineExponent a = std::get<AffineExponent>(v);
        a.scale(Rational(mult));
        return a;
    }
    auto vec = std::get<std::vector<Int>>(v);
    for (auto& x : vec)
        x *= mult;
    return vec;
}

FunctionalValue add_values(const FunctionalValue& a, const FunctionalValue& b) {
    if (std::holds_alternative<Int>(a))
        return Int(std::get<Int>(a) + std::get<Int>(b));
    if (std::holds_alternative<AffineExponent>(a))
        return std::get<AffineExponent>(a) + std::get<AffineExponent>(b);
    auto va = std::get<std::vector<Int>>(a);
    const auto& vb = std::get<std::vector<Int>>(b);
    if (va.size() != vb.size())
        throw dimension_error("boundary vectors of different lengths in gluing rule");
    for (std::size_t i = 0; i < va.size(); ++i)
        va[i] += vb[i];
    return va;
}

bool values_equal(const FunctionalValue& a, const FunctionalValue& b) {
    if (a.index() != b.index())
        return false;
    if (std::holds_alternative<Int>(a))
        return std::get<Int>(a) == std::get<Int>(b);
    if (std::holds_alternative<AffineExponent>(a))
        return std::get<AffineExponent>(a) == std::get<AffineExponent>(b);
    return std::get<std::vector<Int>>(a) == std::get<std::vector<Int>>(b);
}

}  // namespace

std::optional<FunctionalValue> try_functional(const LatticeSet& ls, const GluingTerm& term,
                                              Functional f) {
    const ClassLattice& lat = lattice_of(ls, term);
    if (!lat.has_generator(term.cls))
        throw lattice_error("gluing rule references unknown class '" + term.cls +
                            "' in lattice '" + lat.name + "'");
    RelClass c = normalize(lat, {{term.cls, term.mult}});
    try {
        switch (f) {
            case Functional::chern: return FunctionalValue(chern(c));
            case Functional::maslov: return FunctionalValue(maslov(c));
            case Functional::area: return FunctionalValue(area(c));
            case Functional::boundary: return FunctionalValue(boundary(c));
        }
    } catch (const lattice_error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

FunctionalValue glue_forced(const LatticeSet& ls, const GluingRule& rule, Functional f,
                            int solve_for) {
    // result = sum of pieces; move everything known to one side.
    std::optional<FunctionalValue> acc;
    auto absorb = [&](const FunctionalValue& v, Int sign) {
        FunctionalValue scaled = scale_value(v, sign);
        acc = acc ? add_values(*acc, scaled) : scaled;
    };
    if (solve_for == -1) {
        for (const auto& p : rule.pieces) {
            auto v = try_functional(ls, p, f);
            if (!v)
                throw lattice_error("cannot evaluate " + functional_name(f) + " on piece '" +
                                    p.cls + "' of rule '" + rule.name + "'");
            absorb(*v, 1);
        }
    } else {
        auto r = try_functional(ls, rule.result, f);
        if (!r)
            throw lattice_error("cannot evaluate " + functional_name(f) + " on result of rule '" +
                                rule.name + "'");
        absorb(*r, 1);
        for (std::size_t i = 0; i < rule.pieces.size(); ++i) {
            if (static_cast<int>(i) == solve_for)
                continue;
            auto v = try_functional(ls, rule.pieces[i], f);
            if (!v)
                throw lattice_error("cannot evaluate " + functional_name(f) + " on piece '" +
                                    rule.pieces[i].cls + "' of rule '" + rule.name + "'");
            absorb(*v, -1);
        }
    }
    return *acc;
}

GlueOutcome glue_check(const LatticeSet& ls, const GluingRule& rule, Functional f) {
    std::vector<int> unknown;
    auto rv = try_functional(ls, rule.result, f);
    if (!rv)
        unknown.push_back(-1);
    std::vector<std::optional<FunctionalValue>> pv;
    for (std::size_t i = 0; i < rule.pieces.size(); ++i) {
        pv.push_back(try_functional(ls, rule.pieces[i], f));
        if (!pv.back())
            unknown.push_back(static_cast<int>(i));
    }
    if (unknown.size() > 1)
        throw lattice_error("rule '" + rule.name + "' leaves " +
                            std::to_string(unknown.size()) + " terms undetermined for " +
                            functional_name(f));
    if (unknown.size() == 1)
        return GlueOutcome{glue_forced(ls, rule, f, unknown[0]), unknown[0]};

    FunctionalValue sum = *pv[0];
    for (std::size_t i = 1; i < pv.size(); ++i)
        sum = add_values(sum, *pv[i]);
    if (!values_equal(sum, *rv))
        throw inconsistency_error("rule '" + rule.name + "': " + functional_name(f) +
                                  " of pieces sums to " + to_string(sum) +
                                  " but the result has " + to_string(*rv));
    return GlueOutcome{*rv, -2};
}

Int fredholm_index(Int n, Int genus, Int chi, Int c1_term,
                   const std::vector<IndexPuncture>& punctures) {
    (void)genus;  // already encoded in chi; kept for the record
    Rational ind = Rational((n - 3) * chi + 2 * c1_term);
    for (const auto& p : punctures) {
        Rational half_dim = Rational(p.dim_n) / Rational(2);
        if (p.sign >= 0)
            ind += Rational(p.mu_cz) + half_dim;
        else
            ind -= Rational(p.mu_cz) - half_dim;
    }
    if (!ind.is_integer())
        throw math_error("fredholm index came out non-integral: " + ind.to_string());
    return static_cast<Int>(ind.num());
}

Rational normal_chern(Int ind, Int genus, Int gamma0, Int boundary_components) {
    return Rational(ind - 2 + 2 * genus + gamma0 + boundary_components) / Rational(2);
}

bool at_check(Int ind, const Rational& c_n, Int z_du) {
    return Rational(ind) > c_n + Rational(z_du);
}

}  // namespace novpot
