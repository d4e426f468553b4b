#pragma once

#include <string>
#include <vector>

#include "novpot/linalg.hpp"

namespace novpot {

using FiberPoint = std::vector<Rational>;

// Affine function of the fiber coordinates: constant + <gradient, u>.
struct AffineExponent {
    Rational constant;
    std::vector<Rational> gradient;

    AffineExponent() = default;
    AffineExponent(Rational c, std::vector<Rational> g)
        : constant(std::move(c)), gradient(std::move(g)) {}
    static AffineExponent constant_of(unsigned n, Rational c) {
        return AffineExponent(std::move(c), std::vector<Rational>(n, Rational(0)));
    }

    Rational eval(const FiberPoint& u) const;
    bool is_constant() const;

    AffineExponent operator-() const;
    AffineExponent& operator+=(const AffineExponent& o);
    AffineExponent& operator-=(const AffineExponent& o);
    AffineExponent& scale(const Rational& f);
    friend AffineExponent operator+(AffineExponent a, const AffineExponent& b) { return a += b; }
    friend AffineExponent operator-(AffineExponent a, const AffineExponent& b) { return a -= b; }
    friend bool operator==(const AffineExponent& a, const AffineExponent& b) {
        return a.constant == b.constant && a.gradient == b.gradient;
    }
    friend bool operator!=(const AffineExponent& a, const AffineExponent& b) { return !(a == b); }

    // Compact rendering used inside T^(...), e.g. "4-u1-4*u2".
    std::string to_string() const;
};

struct Facet {
    std::string name;          // optional label, may be empty
    std::vector<Int> normal;   // primitive integer normal
    Rational offset;           // constraint <normal, u> - offset >= 0
};

struct MomentPolytope {
    unsigned dimension = 0;
    std::vector<Facet> facets;
    bool compact_asserted = false;

    // Checks primitive nonzero normals, matching dimensions, and the facet
    // count bound when compactness is asserted.  Throws config_error.
    void validate() const;
};

// One affine functional per facet, in facet order: l_j(u) = <v_j, u> - c_j.
std::vector<AffineExponent> facet_functionals(const MomentPolytope& p);

// Strict interiority: l_j(u) > 0 for every facet.
bool is_interior(const MomentPolytope& p, const FiberPoint& u);

// Exact solution set of l_1(u) = l_2(u) = ... = l_k(u).
struct BalanceResult {
    enum class Kind { unique, family, empty } kind;
    FiberPoint point;                        // valid unless empty
    std::vector<std::vector<Rational>> directions;  // affine family directions
    unsigned family_dim() const { return static_cast<unsigned>(directions.size()); }
};

BalanceResult balanced_point(const std::vector<AffineExponent>& exponents);

std::string to_string(const FiberPoint& u);
FiberPoint parse_fiber_point(const std::string& text);

}  // namespace novpot
