#pragma once

#include <string>
#include <vector>

#include "novpot/potential.hpp"

namespace novpot {

// Laurent polynomial in y_1..y_n over Q(zeta_m), T-free.  Terms are kept
// sorted lexicographically by exponent vector with no zero coefficients.
class LaurentPoly {
public:
    struct Term {
        Cyclotomic coeff;
        std::vector<Int> exps;
    };

    LaurentPoly(unsigned nvars, unsigned order) : nvars_(nvars), order_(order) {}
    static LaurentPoly from_terms(unsigned nvars, unsigned order, std::vector<Term> terms);

    unsigned nvars() const { return nvars_; }
    unsigned order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Exponent substitution e -> V^T e (multiplicative coordinate change).
    LaurentPoly transform(const std::vector<std::vector<Int>>& v) const;
    // Substitutes variable 0 by a nonzero constant; result has nvars-1.
    LaurentPoly substitute_first(const Cyclotomic& value) const;

    Cyclotomic eval(const std::vector<Cyclotomic>& y) const;

    // Span of exponents per variable summed up: the degree of the cleared
    // polynomial, an upper bound for its number of roots per variable.
    Int cleared_degree() const;

    std::string to_string(const std::string& var = "y") const;

private:
    unsigned nvars_;
    unsigned order_;
    std::vector<Term> terms_;
};

struct CriticalSystem {
    unsigned nvars = 0;
    unsigned order = 1;
    std::vector<LaurentPoly> equations;
};

// Divides each formal partial, evaluated at the fiber point, by its common
// T-power.  Throws non_balanced_fiber_error when a partial mixes
// valuations, invalid_fiber_error when the fiber is not admissible.
CriticalSystem leading_system(const PotentialFunction& pf, const FiberPoint& u);

struct CriticalPoint {
    std::vector<Cyclotomic> y;
    std::vector<std::string> branch;  // the monomial choices that led here
};

struct EmptyBranch {
    std::vector<std::string> branch;
    std::string residual;  // the provably nonzero leftover
};

struct UnresolvedEliminant {
    std::vector<std::string> branch;
    std::string eliminant;
    Int degree;
};

struct SolveReport {
    std::vector<CriticalPoint> points;
    std::vector<EmptyBranch> empty_branches;
    std::vector<UnresolvedEliminant> unresolved;
};

// Binomial-substitution pipeline: repeatedly turn a two-term equation into
// a monomial relation w^g = c, change multiplicative coordinates so the
// relation reads v_1^k = c, branch over the k roots, substitute, and
// recurse.  Residual constants prove branches empty; equations that never
// become binomial are reported as unresolved eliminants.
SolveReport solve(const CriticalSystem& s);

// Substitutes y into every formal partial at u and checks exact vanishing
// in the Novikov field.
bool verify_point(const PotentialFunction& pf, const FiberPoint& u,
                  const std::vector<Cyclotomic>& y);

}  // namespace novpot
