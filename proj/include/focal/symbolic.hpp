#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "focal/focal_engine.hpp"
#include "focal/sparse_poly.hpp"

namespace focal {

/// The generic system of degree d (2 or 3) whose coefficients are the
/// canonical indeterminates q20..p03. For d = 2 the cubic ones are absent.
inline PolySystem<SparsePoly> generic_system(int d) {
    if (d != 2 && d != 3) throw Error("symbolic mode supports degree 2 or 3");
    CubicCoefficients<SparsePoly> c;
    for (std::size_t i = 0; i < kNumCoefficients; ++i) c[i] = SparsePoly::variable(i);
    auto sys = cubic_system(c);
    if (d == 2) {
        sys.degree = 2;
        sys.q.pop_back();
        sys.p.pop_back();
    }
    return sys;
}

/// s_1..s_n as polynomials in the system coefficients. Aborts with
/// ResourceLimit once any intermediate polynomial exceeds max_terms.
inline FocalSequence<SparsePoly> symbolic_focal_values(int d, int n, Convention convention = Convention::N1,
                                                       std::size_t max_terms = std::numeric_limits<std::size_t>::max()) {
    PolynomialRing ring(max_terms);
    FocalEngine<PolynomialRing> engine(ring, d, n, convention);
    return engine.focal_values(generic_system(d), n);
}

}  // namespace focal
