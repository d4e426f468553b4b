#pragma once

#include <string>
#include <vector>

#include "novpot/critical.hpp"
#include "novpot/novikov.hpp"

namespace novpot {

// Quantum cohomology presented as Lambda[z]/(f) for a monic univariate f.
struct QHRing {
    unsigned order = 1;       // coefficient-field order
    std::vector<Novikov> f;   // degree-ascending, size d+1, f[d] == 1

    unsigned degree() const { return static_cast<unsigned>(f.size()) - 1; }
    void validate() const;  // monic, degree >= 1, uniform field order
};

// Remainder representative of degree < deg f.
struct QHElement {
    std::vector<Novikov> c;

    friend bool operator==(const QHElement& a, const QHElement& b) { return a.c == b.c; }
    friend bool operator!=(const QHElement& a, const QHElement& b) { return !(a == b); }
};

QHElement qh_zero(const QHRing& r);
QHElement qh_one(const QHRing& r);
QHElement qh_from_coeffs(const QHRing& r, std::vector<Novikov> coeffs);

QHElement qh_add(const QHElement& a, const QHElement& b, const QHRing& r);
QHElement qh_sub(const QHElement& a, const QHElement& b, const QHRing& r);
// Product reduced mod f.  Monic f makes the reduction division-free, so
// the result is exact.
QHElement qh_mul(const QHElement& a, const QHElement& b, const QHRing& r);

// Square-freeness certificate: gcd(f, f') is a unit.  Divisions by
// non-monomial leading coefficients run at the given truncation precision;
// when a zero-or-not decision cannot be certified at that precision a
// precision_error is raised with a suggested retry value.
bool is_semisimple(const QHRing& r, const Rational& precision);

// Lagrange idempotents for pairwise distinct roots of f:
//   e_i = prod_{j != i} (z - eps_j) / prod_{j != i} (eps_i - eps_j).
// Exact whenever the root differences are monomials; otherwise computed at
// an automatically chosen precision and certified by verify_idempotents,
// with a precision_error if certification keeps failing.
std::vector<QHElement> idempotents(const QHRing& r, const std::vector<Novikov>& roots);

// Exact check: e_i e_i == e_i, e_i e_j == 0 (i != j), sum e_i == 1.
bool verify_idempotents(const std::vector<QHElement>& es, const QHRing& r);

Novikov qh_eval(const QHRing& r, const Novikov& x);  // f(x)

enum class Conclusion { none, nondisplaceable, superheavy };

std::string to_string(Conclusion c);

struct Verdict {
    bool has_critical_point = false;
    bool qh_semisimple = false;
    Conclusion conclusion = Conclusion::none;
    std::string rationale;
};

// has_critical_point certifies nonvanishing Floer cohomology of the fiber;
// combined with a semisimple quantum cohomology (verified idempotent
// decomposition) it upgrades the verdict from non-displaceable to
// superheavy.
Verdict make_verdict(const SolveReport& report, bool semisimple, bool idempotents_verified);

std::string to_string(const QHElement& e, const std::string& var = "Z");
std::string to_string(const QHRing& r, const std::string& var = "Z");

}  // namespace novpot
