#pragma once

// Deliberately naive reference used only by tests. Shares nothing with the
// chain solver or the engine: polynomials are maps of monomials, R is
// applied by differentiating monomials, and every degree is solved by dense
// Gaussian elimination over Q.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "focal/homog_poly.hpp"
#include "focal/rational.hpp"

namespace oracle {

using focal::Convention;
using focal::Rational;

/// Bivariate polynomial: (i, j) -> coefficient of x^i y^j.
using Poly2 = std::map<std::pair<int, int>, Rational>;

inline void accumulate(Poly2& p, int i, int j, const Rational& c) {
    auto& slot = p[{i, j}];
    slot = slot + c;
    if (slot.is_zero()) p.erase({i, j});
}

inline Poly2 times(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) accumulate(r, ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

inline Poly2 minus(Poly2 a, const Poly2& b) {
    for (const auto& [e, c] : b) accumulate(a, e.first, e.second, -c);
    return a;
}

inline Poly2 dx(const Poly2& a) {
    Poly2 r;
    for (const auto& [e, c] : a)
        if (e.first > 0) accumulate(r, e.first - 1, e.second, c * Rational{e.first});
    return r;
}

inline Poly2 dy(const Poly2& a) {
    Poly2 r;
    for (const auto& [e, c] : a)
        if (e.second > 0) accumulate(r, e.first, e.second - 1, c * Rational{e.second});
    return r;
}

inline Poly2 rotation(const Poly2& f) {
    Poly2 y{{{0, 1}, Rational{1}}};
    Poly2 x{{{1, 0}, Rational{1}}};
    return minus(times(y, dx(f)), times(x, dy(f)));
}

/// Degree-k coefficients as a dense vector indexed by the y exponent.
inline std::vector<Rational> homogeneous_part(const Poly2& p, int k) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    for (const auto& [e, c] : p)
        if (e.first + e.second == k) v[static_cast<std::size_t>(e.second)] = c;
    return v;
}

inline Poly2 from_dense(const std::vector<Rational>& c) {
    const int k = static_cast<int>(c.size()) - 1;
    Poly2 p;
    for (int a = 0; a <= k; ++a)
        if (!c[a].is_zero()) p[{k - a, a}] = c[a];
    return p;
}

struct DenseLinearSystem {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;
};

/// Gauss-Jordan with exact pivoting; throws on a singular matrix.
inline std::vector<Rational> solve(DenseLinearSystem sys) {
    const std::size_t n = sys.matrix.size();
    for (const auto& row : sys.matrix)
        if (row.size() != n || sys.rhs.size() != n) throw std::logic_error("oracle: system not square");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sys.matrix[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("oracle: singular matrix");
        std::swap(sys.matrix[pivot], sys.matrix[col]);
        std::swap(sys.rhs[pivot], sys.rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sys.matrix[r][col].is_zero()) continue;
            Rational factor = sys.matrix[r][col] / sys.matrix[col][col];
            for (std::size_t c = col; c < n; ++c) sys.matrix[r][c] = sys.matrix[r][c] - factor * sys.matrix[col][c];
            sys.rhs[r] = sys.rhs[r] - factor * sys.rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = sys.rhs[i] / sys.matrix[i][i];
    return x;
}

struct NaiveSolution {
    std::vector<Rational> f;
    std::optional<Rational> s;
};

/// Solves R(f) + s (x^k + y^k) = g (s only for even k) by assembling the
/// matrix of R column by column from monomial images.
inline NaiveSolution naive_rotation_solve(const std::vector<Rational>& g, int k, Convention convention) {
    const bool even = k % 2 == 0;
    const std::size_t unknowns = static_cast<std::size_t>(k) + 1 + (even ? 1 : 0);
    DenseLinearSystem sys;
    sys.matrix.assign(unknowns, std::vector<Rational>(unknowns));
    sys.rhs.assign(unknowns, Rational{});
    for (int a = 0; a <= k; ++a) {
        Poly2 mono{{{k - a, a}, Rational{1}}};
        auto image = homogeneous_part(rotation(mono), k);
        for (int b = 0; b <= k; ++b) sys.matrix[b][a] = image[b];
    }
    for (int b = 0; b <= k; ++b) sys.rhs[b] = g[b];
    if (even) {
        sys.matrix[0][k + 1] = Rational{1};
        sys.matrix[k][k + 1] = sys.matrix[k][k + 1] + Rational{1};
        // Convention row: the y^k (N1) or x^k (N2) coefficient of f is zero.
        sys.matrix[k + 1][convention == Convention::N1 ? k : 0] = Rational{1};
    }
    auto x = solve(sys);
    NaiveSolution out;
    out.f.assign(x.begin(), x.begin() + k + 1);
    if (even) out.s = x[k + 1];
    return out;
}

/// Focal values of the cubic system with the 14 given coefficients
/// (canonical order) by the naive recursion: at degree k the part of
/// F_x Q - F_y P coming from f_2..f_{k-1} is expanded in full and
/// R(f_k) - s (x^k + y^k) = -(that part) is solved densely.
inline std::vector<Rational> naive_focal_values(const std::vector<Rational>& c, int n, Convention convention) {
    if (c.size() != 14) throw std::logic_error("oracle: need 14 coefficients");
    auto mono = [](int i, int j, const Rational& v) { return Poly2{{{i, j}, v}}; };
    Poly2 Q = mono(0, 1, Rational{1});
    Poly2 P = mono(1, 0, Rational{1});
    const int q_exp[7][2] = {{2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}};
    for (int i = 0; i < 7; ++i) {
        if (!c[i].is_zero()) accumulate(Q, q_exp[i][0], q_exp[i][1], c[i]);
        if (!c[7 + i].is_zero()) accumulate(P, q_exp[i][0], q_exp[i][1], c[7 + i]);
    }
    Poly2 F{{{2, 0}, Rational{1}}, {{0, 2}, Rational{1}}};
    std::vector<Rational> values;
    for (int k = 3; k <= 2 * n + 2; ++k) {
        Poly2 det = minus(times(dx(F), Q), times(dy(F), P));
        auto h = homogeneous_part(det, k);
        for (auto& v : h) v = -v;
        auto sol = naive_rotation_solve(h, k, convention);
        for (auto [e, v] : from_dense(sol.f)) accumulate(F, e.first, e.second, v);
        if (sol.s) values.push_back(-*sol.s);
    }
    return values;
}

}  // namespace oracle
