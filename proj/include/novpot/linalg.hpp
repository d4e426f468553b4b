#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "novpot/rational.hpp"

namespace novpot {

using Int = long long;

// Outcome of solving A x = b exactly over Q by Gaussian elimination.
struct LinearSolution {
    enum class Kind { inconsistent, unique, underdetermined } kind;
    std::vector<Rational> particular;            // valid unless inconsistent
    std::vector<std::vector<Rational>> nullspace;  // basis, empty when unique
};

LinearSolution solve_rational(std::vector<std::vector<Rational>> a,
                              std::vector<Rational> b);

Int gcd_int(Int a, Int b);

// Content (gcd of absolute values) of a nonzero integer vector.
Int vector_content(const std::vector<Int>& v);

// Unimodular completion of a primitive row vector p: returns U with first
// row p and |det U| = 1, together with V = U^{-1}.  New multiplicative
// coordinates w_j = y^{U_j} then satisfy y^a = w^{V^T a} and y_i = w^{V_i}.
struct UnimodularPair {
    std::vector<std::vector<Int>> u;
    std::vector<std::vector<Int>> v;  // inverse of u
};

UnimodularPair unimodular_completion(const std::vector<Int>& primitive_row);

}  // namespace novpot
