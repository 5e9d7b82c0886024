#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "focal/errors.hpp"
#include "focal/ring.hpp"

namespace focal {

/// How the kernel component (x^2+y^2)^(k/2) of an even-degree solution is
/// fixed: N1 zeroes the y^k coefficient, N2 zeroes the x^k coefficient.
enum class Convention { N1, N2 };

inline std::string to_string(Convention c) { return c == Convention::N1 ? "N1" : "N2"; }

inline Convention parse_convention(std::string_view text) {
    if (text == "N1" || text == "n1") return Convention::N1;
    if (text == "N2" || text == "n2") return Convention::N2;
    throw FormatError("unknown convention '" + std::string(text) + "' (expected N1 or N2)");
}

/// Dense homogeneous polynomial sum_a c[a] x^(k-a) y^a of structural degree k.
template <class E>
struct HomogPoly {
    int degree = 0;
    std::vector<E> coeffs;

    HomogPoly() : coeffs(1) {}
    HomogPoly(int k, std::vector<E> c) : degree(k), coeffs(std::move(c)) {
        if (degree < 0 || coeffs.size() != static_cast<std::size_t>(degree) + 1)
            throw Error("homogeneous polynomial of degree " + std::to_string(degree) + " needs " +
                        std::to_string(degree + 1) + " coefficients");
    }

    template <CoefficientRing R>
    static HomogPoly zero(const R& ring, int k) {
        return HomogPoly(k, std::vector<E>(static_cast<std::size_t>(k) + 1, ring.zero()));
    }

    /// x^k + y^k
    template <CoefficientRing R>
    static HomogPoly pure_powers(const R& ring, int k) {
        auto f = zero(ring, k);
        f.coeffs.front() = ring.one();
        f.coeffs.back() = k == 0 ? ring.from_int(2) : ring.one();
        return f;
    }

    /// (x^2 + y^2)^m
    template <CoefficientRing R>
    static HomogPoly circle_power(const R& ring, int m);

    const E& operator[](std::size_t a) const { return coeffs[a]; }
    E& operator[](std::size_t a) { return coeffs[a]; }

    friend bool operator==(const HomogPoly&, const HomogPoly&) = default;
};

namespace kernels {

// [Rf]_b = (k-b+1) c_{b-1} - (b+1) c_{b+1}
template <CoefficientRing R>
void rotation_apply(const R& ring, std::span<const element_t<R>> f, std::span<element_t<R>> out) {
    const int k = static_cast<int>(f.size()) - 1;
    for (int b = 0; b <= k; ++b) {
        auto acc = ring.zero();
        if (b >= 1) acc = ring.mul(ring.from_int(k - b + 1), f[b - 1]);
        if (b + 1 <= k) acc = ring.sub(acc, ring.mul(ring.from_int(b + 1), f[b + 1]));
        out[b] = acc;
    }
}

/// Solves R(f) + s (x^k + y^k) = g along the two parity chains of R. s is
/// only produced for even k. inverse[i] must hold 1/i for 1 <= i <= k.
template <CoefficientRing R>
std::optional<element_t<R>> rotation_solve(const R& ring, std::span<const element_t<R>> g,
                                           std::span<element_t<R>> f, Convention convention,
                                           std::span<const element_t<R>> inverse) {
    using E = element_t<R>;
    const int k = static_cast<int>(g.size()) - 1;
    auto div = [&](const E& a, int n) { return ring.mul(a, inverse[n]); };
    auto times = [&](int n, const E& a) { return ring.mul(ring.from_int(n), a); };

    if (k == 0) {
        f[0] = ring.zero();
        return div(g[0], 2);
    }

    // Downward odd-row chain: c_{b-1} = (g_b + (b+1) c_{b+1}) / (k-b+1).
    auto odd_rows_down = [&](int top_row) {
        for (int b = top_row; b >= 1; b -= 2) {
            E upper = b + 1 <= k ? times(b + 1, f[b + 1]) : ring.zero();
            f[b - 1] = div(ring.add(g[b], upper), k - b + 1);
        }
    };
    // Upward chain for rows b = first, first+2, ..., last:
    // c_{b+1} = ((k-b+1) c_{b-1} - g_b) / (b+1).
    auto rows_up = [&](int first, int last) {
        for (int b = first; b <= last; b += 2) f[b + 1] = div(ring.sub(times(k - b + 1, f[b - 1]), g[b]), b + 1);
    };

    if (k % 2 == 1) {
        f[1] = ring.neg(g[0]);
        rows_up(2, k - 1);
        odd_rows_down(k);
        return std::nullopt;
    }

    // Even k. Along the even rows c_{k-1} = alpha + s with alpha the s = 0
    // chain value, so the last row alpha + 2s = g_k fixes s.
    f[1] = ring.neg(g[0]);
    rows_up(2, k - 2);
    E s = div(ring.sub(g[k], f[k - 1]), 2);
    f[1] = ring.sub(s, g[0]);
    rows_up(2, k - 2);

    if (convention == Convention::N1) {
        f[k] = ring.zero();
        odd_rows_down(k - 1);
    } else {
        f[0] = ring.zero();
        rows_up(1, k - 1);
    }
    return s;
}

/// Reciprocals 1/0 (unused, zero), 1/1, ..., 1/max_divisor.
template <CoefficientRing R>
std::vector<element_t<R>> small_inverses(const R& ring, int max_divisor) {
    const auto ch = ring.characteristic();
    if (ch != 0 && ch <= static_cast<std::uint64_t>(max_divisor))
        throw RingError("uninvertible chain divisor: characteristic " + std::to_string(ch) +
                        " does not exceed degree " + std::to_string(max_divisor));
    std::vector<element_t<R>> inv;
    inv.reserve(static_cast<std::size_t>(max_divisor) + 1);
    inv.push_back(ring.zero());
    for (int i = 1; i <= max_divisor; ++i) inv.push_back(ring.inv(ring.from_int(i)));
    return inv;
}

}  // namespace kernels

template <CoefficientRing R>
HomogPoly<element_t<R>> add(const R& ring, const HomogPoly<element_t<R>>& f, const HomogPoly<element_t<R>>& g) {
    if (f.degree != g.degree) throw Error("degree mismatch in homogeneous sum");
    auto r = f;
    for (std::size_t a = 0; a < r.coeffs.size(); ++a) r.coeffs[a] = ring.add(f.coeffs[a], g.coeffs[a]);
    return r;
}

template <CoefficientRing R>
HomogPoly<element_t<R>> sub(const R& ring, const HomogPoly<element_t<R>>& f, const HomogPoly<element_t<R>>& g) {
    if (f.degree != g.degree) throw Error("degree mismatch in homogeneous difference");
    auto r = f;
    for (std::size_t a = 0; a < r.coeffs.size(); ++a) r.coeffs[a] = ring.sub(f.coeffs[a], g.coeffs[a]);
    return r;
}

template <CoefficientRing R>
HomogPoly<element_t<R>> scale(const R& ring, const element_t<R>& c, const HomogPoly<element_t<R>>& f) {
    auto r = f;
    for (auto& x : r.coeffs) x = ring.mul(c, x);
    return r;
}

/// Exact convolution of coefficient vectors.
template <CoefficientRing R>
HomogPoly<element_t<R>> multiply(const R& ring, const HomogPoly<element_t<R>>& f,
                                 const HomogPoly<element_t<R>>& g) {
    auto r = HomogPoly<element_t<R>>::zero(ring, f.degree + g.degree);
    for (int a = 0; a <= f.degree; ++a) {
        if (ring.is_zero(f.coeffs[a])) continue;
        for (int b = 0; b <= g.degree; ++b) r.coeffs[a + b] = ring.add(r.coeffs[a + b], ring.mul(f.coeffs[a], g.coeffs[b]));
    }
    return r;
}

/// d/dx; a degree-0 input gives the zero polynomial of degree 0.
template <CoefficientRing R>
HomogPoly<element_t<R>> diff_x(const R& ring, const HomogPoly<element_t<R>>& f) {
    if (f.degree == 0) return HomogPoly<element_t<R>>::zero(ring, 0);
    auto r = HomogPoly<element_t<R>>::zero(ring, f.degree - 1);
    for (int a = 0; a < f.degree; ++a) r.coeffs[a] = ring.mul(ring.from_int(f.degree - a), f.coeffs[a]);
    return r;
}

/// d/dy; a degree-0 input gives the zero polynomial of degree 0.
template <CoefficientRing R>
HomogPoly<element_t<R>> diff_y(const R& ring, const HomogPoly<element_t<R>>& f) {
    if (f.degree == 0) return HomogPoly<element_t<R>>::zero(ring, 0);
    auto r = HomogPoly<element_t<R>>::zero(ring, f.degree - 1);
    for (int a = 1; a <= f.degree; ++a) r.coeffs[a - 1] = ring.mul(ring.from_int(a), f.coeffs[a]);
    return r;
}

/// R(f) = y f_x - x f_y.
template <CoefficientRing R>
HomogPoly<element_t<R>> rotation_apply(const R& ring, const HomogPoly<element_t<R>>& f) {
    auto r = HomogPoly<element_t<R>>::zero(ring, f.degree);
    kernels::rotation_apply<R>(ring, f.coeffs, r.coeffs);
    return r;
}

template <class E>
struct RotationSolution {
    HomogPoly<E> f;
    std::optional<E> s;  // present exactly for even degree
};

/// Unique solution of R(f) + s (x^k + y^k) = g; s only for even k, with the
/// kernel ambiguity fixed by `convention`.
template <CoefficientRing R>
RotationSolution<element_t<R>> rotation_solve(const R& ring, const HomogPoly<element_t<R>>& g,
                                               Convention convention = Convention::N1) {
    auto inverse = kernels::small_inverses(ring, std::max(g.degree, 2));
    auto f = HomogPoly<element_t<R>>::zero(ring, g.degree);
    auto s = kernels::rotation_solve<R>(ring, g.coeffs, f.coeffs, convention, inverse);
    return {std::move(f), std::move(s)};
}

template <class E>
template <CoefficientRing R>
HomogPoly<E> HomogPoly<E>::circle_power(const R& ring, int m) {
    HomogPoly circle(2, {ring.one(), ring.zero(), ring.one()});
    HomogPoly r(0, {ring.one()});
    for (int i = 0; i < m; ++i) r = multiply(ring, r, circle);
    return r;
}

}  // namespace focal
