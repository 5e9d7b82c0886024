#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "focal/errors.hpp"
#include "focal/prime_field.hpp"

namespace focal {

/// Coefficients c_0..c_D (lowest first) of the polynomial of degree <= D
/// through (0, values[0]), ..., (D, values[D]). Needs p > D.
inline std::vector<Residue> interpolate_at_integers(const PrimeField& field, std::span<const Residue> values) {
    const std::size_t n = values.size();
    // Newton divided differences on nodes 0..n-1.
    std::vector<Residue> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level) {
        Residue inv = field.inv(field.from_int(static_cast<std::int64_t>(level)));
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = field.mul(field.sub(dd[i], dd[i - 1]), inv);
    }
    // Horner expansion of the Newton form.
    std::vector<Residue> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly <- poly * (x - i) + dd[i]
        std::vector<Residue> next(poly.size() + 1, field.zero());
        Residue node = field.from_int(static_cast<std::int64_t>(i));
        for (std::size_t a = 0; a < poly.size(); ++a) {
            next[a + 1] = field.add(next[a + 1], poly[a]);
            next[a] = field.sub(next[a], field.mul(node, poly[a]));
        }
        next[0] = field.add(next[0], dd[i]);
        poly = std::move(next);
    }
    return poly;
}

inline Residue evaluate_univariate(const PrimeField& field, std::span<const Residue> poly, Residue x) {
    Residue acc = field.zero();
    for (std::size_t i = poly.size(); i-- > 0;) acc = field.add(field.mul(acc, x), poly[i]);
    return acc;
}

/// Distinct roots in increasing order. The zero polynomial has no
/// well-defined root set; callers must check for it first.
inline std::vector<Residue> univariate_roots(const PrimeField& field, std::span<const Residue> poly) {
    std::size_t deg = poly.size();
    while (deg > 0 && poly[deg - 1].value == 0) --deg;
    if (deg == 0) throw Error("roots of the zero polynomial requested");
    --deg;
    std::vector<Residue> roots;
    if (deg == 0) return roots;
    if (deg == 1) {
        roots.push_back(field.neg(field.mul(poly[0], field.inv(poly[1]))));
        return roots;
    }
    if (deg == 2 && field.modulus() != 2) {
        const Residue a = poly[2], b = poly[1], c = poly[0];
        Residue disc = field.sub(field.mul(b, b), field.mul(field.from_int(4), field.mul(a, c)));
        Residue inv2a = field.inv(field.add(a, a));
        for (Residue r : field.sqrt(disc)) roots.push_back(field.mul(field.sub(r, b), inv2a));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }
    if (field.modulus() > (1u << 16)) throw Error("root finding above degree 2 only supported for p <= 65536");
    for (std::uint32_t x = 0; x < field.modulus(); ++x)
        if (evaluate_univariate(field, poly, Residue{x}).value == 0) roots.push_back(Residue{x});
    return roots;
}

}  // namespace focal
