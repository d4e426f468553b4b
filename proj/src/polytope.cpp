#include "novpot/polytope.hpp"

#include <sstream>

namespace novpot {

Rational AffineExponent::eval(const FiberPoint& u) const {
    if (u.size() != gradient.size())
        throw dimension_error("fiber point dimension " + std::to_string(u.size()) +
                              " != " + std::to_string(gradient.size()));
    Rational r = constant;
    for (std::size_t i = 0; i < u.size(); ++i)
        r += gradient[i] * u[i];
    return r;
}

bool AffineExponent::is_constant() const {
    for (const auto& g : gradient)
        if (!g.is_zero())
            return false;
    return true;
}

AffineExponent AffineExponent::operator-() const {
    AffineExponent r = *this;
    r.constant = -r.constant;
    for (auto& g : r.gradient)
        g = -g;
    return r;
}

AffineExponent& AffineExponent::operator+=(const AffineExponent& o) {
    if (gradient.size() != o.gradient.size())
        throw dimension_error("affine exponent dimension mismatch");
    constant += o.constant;
    for (std::size_t i = 0; i < gradient.size(); ++i)
        gradient[i] += o.gradient[i];
    return *this;
}

AffineExponent& AffineExponent::operator-=(const AffineExponent& o) { return *this += -o; }

AffineExponent& AffineExponent::scale(const Rational& f) {
    constant *= f;
    for (auto& g : gradient)
        g *= f;
    return *this;
}

std::string AffineExponent::to_string() const {
    std::ostringstream os;
    bool emitted = false;
    if (!constant.is_zero()) {
        os << constant.to_string();
        emitted = true;
    }
    for (std::size_t i = 0; i < gradient.size(); ++i) {
        const Rational& g = gradient[i];
        if (g.is_zero())
            continue;
        Rational mag = g.abs();
        if (emitted)
            os << (g.sign() < 0 ? "-" : "+");
        else if (g.sign() < 0)
            os << "-";
        if (mag != Rational(1))
            os << mag.to_string() << "*";
        os << "u" << (i + 1);
        emitted = true;
    }
    if (!emitted)
        return "0";
    return os.str();
}

void MomentPolytope::validate() const {
    if (dimension == 0)
        throw config_error("polytope dimension must be positive");
    for (std::size_t j = 0; j < facets.size(); ++j) {
        const Facet& f = facets[j];
        if (f.normal.size() != dimension)
            throw config_error("facet " + std::to_string(j) + " normal has length " +
                               std::to_string(f.normal.size()) + ", expected " +
                               std::to_string(dimension));
        Int content = vector_content(f.normal);
        if (content == 0)
            throw config_error("facet " + std::to_string(j) + " has zero normal");
        if (content != 1)
            throw config_error("facet " + std::to_string(j) +
                               " normal is not primitive (content " +
                               std::to_string(content) + ")");
    }
    if (compact_asserted && facets.size() < dimension + 1)
        throw config_error("a compact polytope needs at least n+1 facets");
}

std::vector<AffineExponent> facet_functionals(const MomentPolytope& p) {
    std::vector<AffineExponent> out;
    out.reserve(p.facets.size());
    for (const Facet& f : p.facets) {
        AffineExponent a;
        a.constant = -f.offset;
        a.gradient.reserve(p.dimension);
        for (Int v : f.normal)
            a.gradient.push_back(Rational(v));
        out.push_back(std::move(a));
    }
    return out;
}

bool is_interior(const MomentPolytope& p, const FiberPoint& u) {
    if (u.size() != p.dimension)
        throw dimension_error("fiber point dimension mismatch");
    for (const auto& l : facet_functionals(p))
        if (l.eval(u).sign() <= 0)
            return false;
    return true;
}

BalanceResult balanced_point(const std::vector<AffineExponent>& exponents) {
    if (exponents.size() < 2)
        throw math_error("balancing needs at least two exponents");
    const std::size_t n = exponents[0].gradient.size();
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t j = 1; j < exponents.size(); ++j) {
        if (exponents[j].gradient.size() != n)
            throw dimension_error("affine exponent dimension mismatch");
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = exponents[0].gradient[i] - exponents[j].gradient[i];
        a.push_back(std::move(row));
        b.push_back(exponents[j].constant - exponents[0].constant);
    }
    LinearSolution s = solve_rational(std::move(a), std::move(b));
    BalanceResult r;
    switch (s.kind) {
        case LinearSolution::Kind::inconsistent:
            r.kind = BalanceResult::Kind::empty;
            break;
        case LinearSolution::Kind::unique:
            r.kind = BalanceResult::Kind::unique;
            r.point = std::move(s.particular);
            break;
        case LinearSolution::Kind::underdetermined:
            r.kind = BalanceResult::Kind::family;
            r.point = std::move(s.particular);
            r.directions = std::move(s.nullspace);
            break;
    }
    return r;
}

std::string to_string(const FiberPoint& u) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i)
            os << ", ";
        os << u[i].to_string();
    }
    os << ")";
    return os.str();
}

FiberPoint parse_fiber_point(const std::string& text) {
    FiberPoint u;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            throw config_error("empty coordinate in fiber point '" + text + "'");
        u.push_back(Rational::parse(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')')
            cur.push_back(c);
    }
    flush();
    return u;
}

}  // namespace novpot
