#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "focal/homog_poly.hpp"
#include "focal/prime_field.hpp"
#include "focal/sparse_poly.hpp"

namespace focal {

/// xdot = y + q(x, y), ydot = -(x + p(x, y)) with q, p of degree 2..d.
/// q[m-2] and p[m-2] hold the homogeneous parts of degree m; the linear
/// parts are implicit.
template <class E>
struct PolySystem {
    int degree = 2;
    std::vector<HomogPoly<E>> q;
    std::vector<HomogPoly<E>> p;

    const HomogPoly<E>& q_part(int m) const { return q[static_cast<std::size_t>(m - 2)]; }
    const HomogPoly<E>& p_part(int m) const { return p[static_cast<std::size_t>(m - 2)]; }

    friend bool operator==(const PolySystem&, const PolySystem&) = default;
};

template <class E>
using CubicCoefficients = std::array<E, kNumCoefficients>;

/// Index of a coefficient name ("q30", "p03", ...) in canonical order.
inline std::size_t coefficient_index(std::string_view name) {
    for (std::size_t i = 0; i < kNumCoefficients; ++i)
        if (name == kCoefficientNames[i]) return i;
    throw FormatError("unknown coefficient name '" + std::string(name) + "'");
}

/// Cubic system from the 14 coefficients (q20, q11, q02, q30, q21, q12, q03,
/// p20, p11, p02, p30, p21, p12, p03).
template <class E>
PolySystem<E> cubic_system(std::span<const E> c) {
    if (c.size() != kNumCoefficients) throw Error("cubic system needs 14 coefficients");
    PolySystem<E> sys;
    sys.degree = 3;
    sys.q.emplace_back(2, std::vector<E>(c.begin(), c.begin() + 3));
    sys.q.emplace_back(3, std::vector<E>(c.begin() + 3, c.begin() + 7));
    sys.p.emplace_back(2, std::vector<E>(c.begin() + 7, c.begin() + 10));
    sys.p.emplace_back(3, std::vector<E>(c.begin() + 10, c.begin() + 14));
    return sys;
}

template <class E>
PolySystem<E> cubic_system(const CubicCoefficients<E>& c) {
    return cubic_system<E>(std::span<const E>(c));
}

template <class E>
CubicCoefficients<E> cubic_coefficients(const PolySystem<E>& sys) {
    if (sys.degree != 3) throw Error("not a cubic-layout system");
    CubicCoefficients<E> c;
    std::size_t i = 0;
    for (const auto* parts : {&sys.q, &sys.p})
        for (const auto& part : *parts)
            for (const auto& x : part.coeffs) c[i++] = x;
    return c;
}

/// Applies `fn` to every coefficient, producing a system over another ring.
template <class E, class Fn>
auto map_system(const PolySystem<E>& sys, Fn&& fn) {
    using F = std::decay_t<decltype(fn(std::declval<const E&>()))>;
    PolySystem<F> out;
    out.degree = sys.degree;
    auto map_parts = [&](const std::vector<HomogPoly<E>>& in, std::vector<HomogPoly<F>>& dst) {
        for (const auto& part : in) {
            std::vector<F> c;
            c.reserve(part.coeffs.size());
            for (const auto& x : part.coeffs) c.push_back(fn(x));
            dst.emplace_back(part.degree, std::move(c));
        }
    };
    map_parts(sys.q, out.q);
    map_parts(sys.p, out.p);
    return out;
}

/// The linear center xdot = y, ydot = -x in the cubic layout.
template <CoefficientRing R>
PolySystem<element_t<R>> zero_system(const R& ring, int degree = 3) {
    PolySystem<element_t<R>> sys;
    sys.degree = degree;
    for (int m = 2; m <= degree; ++m) {
        sys.q.push_back(HomogPoly<element_t<R>>::zero(ring, m));
        sys.p.push_back(HomogPoly<element_t<R>>::zero(ring, m));
    }
    return sys;
}

/// The published cubic focus whose first eleven focal values vanish mod 29:
///   xdot = y + 3x^2 + 8xy + 5y^2 + 3x^3 + 25x^2y + 20xy^2 + 18y^3
///   ydot = -(x + 27x^2 + 9xy + 22y^2 + 11x^3 + 20x^2y + 4xy^2 + 3y^3)
inline constexpr std::array<std::int64_t, kNumCoefficients> kCubicFocus = {3,  8, 5,  3,  25, 20, 18,
                                                                             27, 9, 22, 11, 20, 4,  3};
inline constexpr std::uint32_t kCubicFocusPrime = 29;
inline constexpr int kCubicFocusDepth = 11;

template <CoefficientRing R>
PolySystem<element_t<R>> cubic_focus_example(const R& ring) {
    CubicCoefficients<element_t<R>> c;
    for (std::size_t i = 0; i < kNumCoefficients; ++i) c[i] = ring.from_int(kCubicFocus[i]);
    return cubic_system(c);
}

}  // namespace focal
