#include "novpot/linalg.hpp"

#include <cstdlib>
#include <numeric>

namespace novpot {

LinearSolution solve_rational(std::vector<std::vector<Rational>> a,
                              std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        Rational inv = Rational(1) / a[rank][col];
        for (std::size_t j = col; j < cols; ++j)
            a[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero())
                continue;
            Rational f = a[r][col];
            for (std::size_t j = col; j < cols; ++j)
                a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero())
            return {LinearSolution::Kind::inconsistent, {}, {}};

    LinearSolution out;
    out.particular.assign(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r)
        out.particular[pivot_col[r]] = b[r];

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rational> dir(cols, Rational(0));
        dir[free_col] = Rational(1);
        for (std::size_t r = 0; r < rank; ++r)
            dir[pivot_col[r]] = -a[r][free_col];
        out.nullspace.push_back(std::move(dir));
    }
    out.kind = out.nullspace.empty() ? LinearSolution::Kind::unique
                                     : LinearSolution::Kind::underdetermined;
    return out;
}

Int gcd_int(Int a, Int b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int vector_content(const std::vector<Int>& v) {
    Int g = 0;
    for (Int x : v)
        g = gcd_int(g, x);
    return g;
}

UnimodularPair unimodular_completion(const std::vector<Int>& primitive_row) {
    const std::size_t n = primitive_row.size();
    std::vector<Int> p = primitive_row;
    UnimodularPair pr;
    pr.u.assign(n, std::vector<Int>(n, 0));
    pr.v.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        pr.u[i][i] = pr.v[i][i] = 1;

    // Column-reduce p to e_1 with elementary operations; mirror them on V
    // (columns) and their inverses on U (rows), keeping U V = I.
    auto add_col = [&](std::size_t from, std::size_t to, Int f) {
        // p <- p * C,  C = I + f E_{from,to}
        p[to] += f * p[from];
        for (std::size_t r = 0; r < n; ++r)
            pr.v[r][to] += f * pr.v[r][from];
        for (std::size_t c = 0; c < n; ++c)
            pr.u[from][c] -= f * pr.u[to][c];
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        std::swap(p[i], p[j]);
        for (std::size_t r = 0; r < n; ++r)
            std::swap(pr.v[r][i], pr.v[r][j]);
        std::swap(pr.u[i], pr.u[j]);
    };
    auto negate_col = [&](std::size_t i) {
        p[i] = -p[i];
        for (std::size_t r = 0; r < n; ++r)
            pr.v[r][i] = -pr.v[r][i];
        for (std::size_t c = 0; c < n; ++c)
            pr.u[i][c] = -pr.u[i][c];
    };

    // Euclidean reduction across columns until only p[0] = 1 remains.
    while (true) {
        std::size_t nz = 0;
        std::size_t first = n;
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] != 0) {
                ++nz;
                if (first == n)
                    first = i;
            }
        if (nz == 0)
            throw math_error("unimodular completion of the zero vector");
        if (nz == 1) {
            if (first != 0)
                swap_cols(0, first);
            if (p[0] < 0)
                negate_col(0);
            if (p[0] != 1)
                throw math_error("unimodular completion needs a primitive vector");
            break;
        }
        // Reduce the largest entry by the smallest nonzero one.
        std::size_t smallest = first;
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] != 0 && std::llabs(p[i]) < std::llabs(p[smallest]))
                smallest = i;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == smallest || p[i] == 0)
                continue;
            Int f = p[i] / p[smallest];
            if (f != 0)
                add_col(smallest, i, -f);
        }
    }
    return pr;
}

}  // namespace novpot
