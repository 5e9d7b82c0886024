#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "focal/errors.hpp"
#include "focal/homog_poly.hpp"
#include "focal/poly_system.hpp"
#include "focal/ring.hpp"

namespace focal {

/// Focal values s_1..s_N of one system, with the ring and normalization
/// convention they were computed under.
template <class E>
struct FocalSequence {
    std::vector<E> values;  // values[j-1] = s_j
    Convention convention = Convention::N1;
    std::string ring;
    std::optional<int> first_nonzero;

    const E& s(int j) const { return values.at(static_cast<std::size_t>(j - 1)); }
};

/// Truncation f_2 + f_3 + ... + f_K of the formal first integral F.
template <class E>
struct MotionSeries {
    std::vector<HomogPoly<E>> parts;  // parts[k-2] = f_k

    int max_degree() const { return static_cast<int>(parts.size()) + 1; }
    const HomogPoly<E>& part(int k) const { return parts.at(static_cast<std::size_t>(k - 2)); }
    HomogPoly<E>& part(int k) { return parts.at(static_cast<std::size_t>(k - 2)); }
};

/// Degree-by-degree construction of F with F_x Q - F_y P = sum_j s_j (x^(2j+2) + y^(2j+2)),
/// where Q = y + q and P = x + p.
///
/// At degree k the parts f_{k+1-m}, m = 2..d, feed the convection term
///   g_k = sum_m [ d_x f_{k+1-m} * q_m - d_y f_{k+1-m} * p_m ]
/// and R(f_k) + g_k = s_j (x^k + y^k) is solved through the parity chains of
/// R. The engine owns reusable work buffers, so one instance should be kept
/// per thread and fed many systems.
template <CoefficientRing R>
class FocalEngine {
  public:
    using E = element_t<R>;

    /// Supports systems of degree <= max_system_degree and up to max_focal
    /// focal values. Over a field of characteristic p requires p >= 2N+5.
    FocalEngine(R ring, int max_system_degree, int max_focal, Convention convention = Convention::N1)
        : ring_(std::move(ring)), max_d_(max_system_degree), max_n_(max_focal), convention_(convention) {
        if (max_focal < 1) throw Error("number of focal values must be at least 1");
        if (max_system_degree < 2) throw Error("system degree must be at least 2");
        const auto ch = ring_.characteristic();
        if (ch != 0 && ch < static_cast<std::uint64_t>(2 * max_focal + 5))
            throw RingError("prime p = " + std::to_string(ch) + " too small for N = " + std::to_string(max_focal) +
                            ": need p >= 2N+5 = " + std::to_string(2 * max_focal + 5));
        const int top = 2 * max_n_ + 2;
        inverse_ = kernels::small_inverses(ring_, top);
        integers_.reserve(static_cast<std::size_t>(top) + 2);
        for (int i = 0; i <= top + 1; ++i) integers_.push_back(ring_.from_int(i));
        g_.assign(static_cast<std::size_t>(top) + 1, ring_.zero());
        solved_.assign(static_cast<std::size_t>(top) + 1, ring_.zero());
    }

    const R& ring() const noexcept { return ring_; }
    Convention convention() const noexcept { return convention_; }
    int max_focal() const noexcept { return max_n_; }

    /// Runs the recursion until s_N or until `on_value(j, s_j)` returns false.
    /// With `retain` every f_k is kept and returned; otherwise only the last
    /// d-1 parts are stored.
    template <class OnValue>
    std::optional<MotionSeries<E>> run(const PolySystem<E>& sys, int n, bool retain, OnValue&& on_value) {
        check(sys, n);
        const int d = sys.degree;
        const int top = 2 * n + 2;
        const std::size_t slots = retain ? static_cast<std::size_t>(top + 1) : static_cast<std::size_t>(d);
        if (parts_.size() < slots) parts_.resize(slots);
        auto slot = [&](int k) -> std::vector<E>& {
            return parts_[retain ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k % d)];
        };

        auto& f2 = slot(2);
        f2.assign(3, ring_.zero());
        f2[0] = ring_.one();
        f2[2] = ring_.one();

        for (int k = 3; k <= top; ++k) {
            convection(sys, k, slot);
            std::span<E> f(solved_.data(), static_cast<std::size_t>(k) + 1);
            auto s = kernels::rotation_solve<R>(ring_, std::span<const E>(g_.data(), f.size()), f, convention_,
                                                inverse_);
            auto& fk = slot(k);
            fk.resize(f.size());
            for (std::size_t a = 0; a < f.size(); ++a) fk[a] = ring_.neg(f[a]);
            if (s && !on_value((k - 2) / 2, *s)) {
                if (!retain) return std::nullopt;
                return collect(k);
            }
        }
        if (!retain) return std::nullopt;
        return collect(top);
    }

    FocalSequence<E> focal_values(const PolySystem<E>& sys, int n) {
        auto seq = empty_sequence();
        run(sys, n, false, [&](int, const E& s) { return record(seq, s); });
        return seq;
    }

    std::pair<FocalSequence<E>, MotionSeries<E>> focal_values_with_motion(const PolySystem<E>& sys, int n) {
        auto seq = empty_sequence();
        auto motion = run(sys, n, true, [&](int, const E& s) { return record(seq, s); });
        return {std::move(seq), std::move(*motion)};
    }

    /// Least j <= n with s_j != 0; no degree beyond 2j+2 is computed.
    std::optional<int> first_nonzero(const PolySystem<E>& sys, int n) {
        std::optional<int> found;
        run(sys, n, false, [&](int j, const E& s) {
            if (ring_.is_zero(s)) return true;
            found = j;
            return false;
        });
        return found;
    }

    /// Least j <= n with s_j != 0 together with that value.
    std::optional<std::pair<int, E>> first_nonzero_value(const PolySystem<E>& sys, int n) {
        std::optional<std::pair<int, E>> found;
        run(sys, n, false, [&](int j, const E& s) {
            if (ring_.is_zero(s)) return true;
            found.emplace(j, s);
            return false;
        });
        return found;
    }

  private:
    void check(const PolySystem<E>& sys, int n) const {
        if (n < 1) throw Error("number of focal values must be at least 1");
        if (n > max_n_)
            throw Error("engine configured for " + std::to_string(max_n_) + " focal values, asked for " +
                        std::to_string(n));
        if (sys.degree < 2 || sys.degree > max_d_) throw Error("system degree out of range for this engine");
        if (sys.q.size() != static_cast<std::size_t>(sys.degree - 1) || sys.p.size() != sys.q.size())
            throw Error("system parts do not match its degree");
        for (int m = 2; m <= sys.degree; ++m)
            if (sys.q_part(m).degree != m || sys.p_part(m).degree != m)
                throw Error("system part of index " + std::to_string(m) + " has wrong degree");
    }

    template <class Slot>
    void convection(const PolySystem<E>& sys, int k, Slot&& slot) {
        std::fill(g_.begin(), g_.begin() + k + 1, ring_.zero());
        const int m_max = std::min(sys.degree, k - 1);
        for (int m = 2; m <= m_max; ++m) {
            const auto& f = slot(k + 1 - m);
            const int n = k + 1 - m;
            const auto& q = sys.q_part(m).coeffs;
            const auto& p = sys.p_part(m).coeffs;
            for (int a = 0; a < n; ++a) {
                // d_x contributes (n-a) c_a, d_y contributes (a+1) c_{a+1}; both at x^(n-1-a) y^a.
                E dx = ring_.mul(integers_[n - a], f[a]);
                E dy = ring_.mul(integers_[a + 1], f[a + 1]);
                for (int c = 0; c <= m; ++c) {
                    auto& out = g_[a + c];
                    out = ring_.add(out, ring_.sub(ring_.mul(dx, q[c]), ring_.mul(dy, p[c])));
                }
            }
        }
    }

    FocalSequence<E> empty_sequence() const {
        FocalSequence<E> seq;
        seq.convention = convention_;
        seq.ring = ring_.describe();
        return seq;
    }

    bool record(FocalSequence<E>& seq, const E& s) const {
        seq.values.push_back(s);
        if (!seq.first_nonzero && !ring_.is_zero(s)) seq.first_nonzero = static_cast<int>(seq.values.size());
        return true;
    }

    MotionSeries<E> collect(int top) const {
        MotionSeries<E> motion;
        for (int k = 2; k <= top; ++k) motion.parts.emplace_back(k, parts_[static_cast<std::size_t>(k)]);
        return motion;
    }

    R ring_;
    int max_d_;
    int max_n_;
    Convention convention_;
    std::vector<E> inverse_;
    std::vector<E> integers_;
    std::vector<E> g_;
    std::vector<E> solved_;
    std::vector<std::vector<E>> parts_;
};

template <CoefficientRing R>
FocalSequence<element_t<R>> focal_values(const R& ring, const PolySystem<element_t<R>>& sys, int n,
                                         Convention convention = Convention::N1) {
    FocalEngine<R> engine(ring, sys.degree, n, convention);
    return engine.focal_values(sys, n);
}

template <CoefficientRing R>
std::pair<FocalSequence<element_t<R>>, MotionSeries<element_t<R>>> focal_values_with_motion(
    const R& ring, const PolySystem<element_t<R>>& sys, int n, Convention convention = Convention::N1) {
    FocalEngine<R> engine(ring, sys.degree, n, convention);
    return engine.focal_values_with_motion(sys, n);
}

template <CoefficientRing R>
std::optional<int> first_nonzero(const R& ring, const PolySystem<element_t<R>>& sys, int n_max,
                                 Convention convention = Convention::N1) {
    FocalEngine<R> engine(ring, sys.degree, n_max, convention);
    return engine.first_nonzero(sys, n_max);
}

/// Expands F_x Q - F_y P through degree K with generic polynomial arithmetic
/// and checks it equals sum_j s_j (x^(2j+2) + y^(2j+2)) exactly.
template <CoefficientRing R>
bool verify_identity(const R& ring, const PolySystem<element_t<R>>& sys, const MotionSeries<element_t<R>>& motion,
                     const FocalSequence<element_t<R>>& seq, int max_degree) {
    using E = element_t<R>;
    if (motion.max_degree() < max_degree) return false;
    if (static_cast<int>(seq.values.size()) < (max_degree - 2) / 2) return false;
    for (int k = 2; k <= max_degree; ++k) {
        HomogPoly<E> det = rotation_apply(ring, motion.part(k));
        for (int m = 2; m <= sys.degree && k + 1 - m >= 2; ++m) {
            const auto& f = motion.part(k + 1 - m);
            det = add(ring, det, multiply(ring, diff_x(ring, f), sys.q_part(m)));
            det = sub(ring, det, multiply(ring, diff_y(ring, f), sys.p_part(m)));
        }
        HomogPoly<E> expected = HomogPoly<E>::zero(ring, k);
        if (k % 2 == 0 && k >= 4) expected = scale(ring, seq.s((k - 2) / 2), HomogPoly<E>::pure_powers(ring, k));
        for (int a = 0; a <= k; ++a)
            if (!ring.is_zero(ring.sub(det[a], expected[a]))) return false;
    }
    return true;
}

}  // namespace focal
