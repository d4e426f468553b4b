#pragma once

#include <string>
#include <vector>

#include "novpot/novikov.hpp"
#include "novpot/polytope.hpp"

namespace novpot {

// One family of Maslov-index-2 disks: how many times the evaluation map
// covers the fiber (count), an optional coefficient, the symplectic-area
// exponent as an affine function of the fiber point, and the boundary
// class as a monomial exponent vector.
struct PotentialTerm {
    Int count = 1;
    Cyclotomic coefficient;  // defaults to 1 in the configured field
    AffineExponent exponent;
    std::vector<Int> monomial;
};

struct PotentialFunction {
    unsigned nvars = 0;
    unsigned order = 1;  // coefficient-field order
    std::vector<PotentialTerm> terms;
};

// One term per facet (count, facet normal as monomial, facet functional as
// exponent) plus the extra terms, merged on (monomial, exponent).
PotentialFunction build_potential(const MomentPolytope& p, unsigned order,
                                  const std::vector<Int>& toric_counts,
                                  const std::vector<PotentialTerm>& extra);

struct EvaluatedTerm {
    Int count;
    Cyclotomic coefficient;
    Rational exponent;
    std::vector<Int> monomial;
};

// Numeric exponents at a fiber point; throws invalid_fiber_error naming
// the offending term if any exponent fails to be positive.
std::vector<EvaluatedTerm> evaluate_at(const PotentialFunction& pf, const FiberPoint& u);

// A formal Laurent term of the derivative: coefficient already folds the
// disk count and the differentiation factor.
struct FormalLaurentTerm {
    Cyclotomic coeff;
    AffineExponent exponent;
    std::vector<Int> monomial;
};

using FormalLaurent = std::vector<FormalLaurentTerm>;

// The n formal partial derivatives d/dy_i.
std::vector<FormalLaurent> partials(const PotentialFunction& pf);

std::string monomial_to_string(const std::vector<Int>& m, const std::string& var = "y");
std::string to_string(const PotentialFunction& pf);
std::string to_string(const FormalLaurent& eq);

}  // namespace novpot
