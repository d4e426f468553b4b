#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "novpot/polytope.hpp"

namespace novpot {

// Integer-lattice model of the relative homology of one piece of the cut:
// a list of generator labels, a distinguished basis, normal forms for the
// remaining generators, an intersection table against divisor labels, and
// (partially declared) linear functionals.
class ClassLattice {
public:
    std::string name;
    unsigned fiber_dim = 0;  // dimension of H_1 of the fiber torus

    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<std::string>& generators() const { return generators_; }

    // Construction used by the config loader.
    void set_basis(std::vector<std::string> basis);
    void add_generator(const std::string& label, std::vector<Int> basis_coords);
    void set_pairing_row(const std::string& divisor, std::map<std::string, Int> row);
    void seed_chern(const std::string& basis_label, Int value);
    void seed_boundary(const std::string& basis_label, std::vector<Int> value);
    void seed_area(const std::string& basis_label, AffineExponent value);

    bool has_generator(const std::string& label) const;
    // Normal form of a generator in basis coordinates.
    const std::vector<Int>& rep(const std::string& label) const;

    std::size_t basis_size() const { return basis_.size(); }

    std::optional<Int> chern_seed(const std::string& basis_label) const;
    std::optional<AffineExponent> area_seed(const std::string& basis_label) const;
    std::optional<std::vector<Int>> boundary_seed(const std::string& basis_label) const;
    const std::map<std::string, std::vector<Int>>& pairing_rows() const { return pairings_; }

private:
    std::vector<std::string> generators_;
    std::vector<std::string> basis_;
    std::map<std::string, std::vector<Int>> reps_;
    std::map<std::string, std::vector<Int>> pairings_;
    std::map<std::string, Int> chern_;
    std::map<std::string, std::vector<Int>> boundary_;
    std::map<std::string, AffineExponent> area_;
};

struct RelClass {
    const ClassLattice* lattice = nullptr;
    std::vector<Int> coords;  // in the lattice basis

    friend bool operator==(const RelClass& a, const RelClass& b) {
        return a.lattice == b.lattice && a.coords == b.coords;
    }
};

using GeneratorExpr = std::vector<std::pair<std::string, Int>>;

// Unique basis coordinates of an integer combination of generators.
RelClass normalize(const ClassLattice& lat, const GeneratorExpr& expr);

// Bilinear extension of the divisor pairing table.
Int pair_with(const RelClass& a, const std::string& divisor);

Int chern(const RelClass& a);
Int maslov(const RelClass& a);  // 2 * chern
AffineExponent area(const RelClass& a);
std::vector<Int> boundary(const RelClass& a);

// Whether a is a non-negative integer combination of the cone generators.
// Exact for linearly independent cone generators.
bool positive_cone_member(const RelClass& a, const std::vector<std::string>& cone);

// ---- gluing across the cut ----------------------------------------------

struct GluingTerm {
    std::string lattice;
    std::string cls;
    Int mult = 1;
};

struct GluingRule {
    std::string name;
    std::vector<GluingTerm> pieces;
    GluingTerm result;
};

enum class Functional { chern, maslov, area, boundary };

using FunctionalValue = std::variant<Int, AffineExponent, std::vector<Int>>;

std::string functional_name(Functional f);
std::string to_string(const FunctionalValue& v);

using LatticeSet = std::map<std::string, ClassLattice>;

// Value of the functional on a named class, when every needed seed is
// declared; nullopt otherwise.
std::optional<FunctionalValue> try_functional(const LatticeSet& ls,
                                              const GluingTerm& term, Functional f);

// Additivity across the rule: total value on the term at `solve_for`
// (pieces are indexed 0.., -1 means the result) forced by all the others.
// The returned value includes the term's multiplicity.
FunctionalValue glue_forced(const LatticeSet& ls, const GluingRule& rule,
                            Functional f, int solve_for);

// Auto mode: with no unknown terms, checks additivity and returns the
// result value (inconsistency_error on mismatch); with exactly one
// unknown, returns its forced total value and reports which term it was.
struct GlueOutcome {
    FunctionalValue value;
    int solved_term;  // -2 = all known (consistent), otherwise as solve_for
};
GlueOutcome glue_check(const LatticeSet& ls, const GluingRule& rule, Functional f);

// ---- SFT index arithmetic -------------------------------------------------

struct IndexPuncture {
    int sign;    // +1 positive, -1 negative
    Int mu_cz;   // Conley-Zehnder index in the chosen trivialization
    Int dim_n;   // dimension of the Morse-Bott orbit family
};

// ind = (n-3)chi + 2 c1 + sum_{+}(mu + dim/2) - sum_{-}(mu - dim/2).
Int fredholm_index(Int n, Int genus, Int chi, Int c1_term,
                   const std::vector<IndexPuncture>& punctures);

// c_N = (ind - 2 + 2g + #Gamma0 + #boundary components) / 2.
Rational normal_chern(Int ind, Int genus, Int gamma0, Int boundary_components);

// Automatic transversality test: ind > c_N + Z(du).
bool at_check(Int ind, const Rational& c_n, Int z_du);

}  // namespace novpot
