#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "focal/errors.hpp"
#include "focal/rational.hpp"

namespace focal {

inline constexpr std::size_t kNumCoefficients = 14;

/// Names of the 14 cubic-system coefficients in canonical order. The first
/// letter says which part (q: xdot, p: ydot) and the digits are the x and y
/// exponents of the monomial.
inline constexpr std::array<const char*, kNumCoefficients> kCoefficientNames = {
    "q20", "q11", "q02", "q30", "q21", "q12", "q03", "p20", "p11", "p02", "p30", "p21", "p12", "p03"};

/// Weight 1 for quadratic coefficients, 2 for cubic ones.
inline constexpr std::array<int, kNumCoefficients> kCoefficientWeights = {1, 1, 1, 2, 2, 2, 2,
                                                                          1, 1, 1, 2, 2, 2, 2};

using Exponent = std::array<std::uint8_t, kNumCoefficients>;

/// Sparse polynomial in the 14 coefficient indeterminates with rational
/// coefficients. Terms are kept sorted by exponent (lexicographic) with no
/// zero coefficients, so equality is structural.
struct SparsePoly {
    std::vector<std::pair<Exponent, Rational>> terms;

    std::size_t size() const noexcept { return terms.size(); }
    bool is_zero() const noexcept { return terms.empty(); }

    static SparsePoly constant(const Rational& c) {
        SparsePoly r;
        if (!c.is_zero()) r.terms.emplace_back(Exponent{}, c);
        return r;
    }
    static SparsePoly variable(std::size_t index) {
        SparsePoly r;
        Exponent e{};
        e[index] = 1;
        r.terms.emplace_back(e, Rational{1});
        return r;
    }

    /// Weighted degree of each term; empty for the zero polynomial.
    std::vector<int> weighted_degrees() const {
        std::vector<int> out;
        out.reserve(terms.size());
        for (const auto& [e, c] : terms) {
            int w = 0;
            for (std::size_t i = 0; i < kNumCoefficients; ++i) w += kCoefficientWeights[i] * e[i];
            out.push_back(w);
        }
        return out;
    }

    bool is_weighted_homogeneous(int degree) const {
        auto w = weighted_degrees();
        return std::all_of(w.begin(), w.end(), [degree](int d) { return d == degree; });
    }

    Rational evaluate(std::span<const Rational> point) const {
        Rational acc;
        for (const auto& [e, c] : terms) {
            Rational t = c;
            for (std::size_t i = 0; i < kNumCoefficients; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    Residue evaluate(const PrimeField& field, std::span<const Residue> point) const {
        Residue acc = field.zero();
        for (const auto& [e, c] : terms) {
            Residue t = c.reduce(field);
            for (std::size_t i = 0; i < kNumCoefficients; ++i) t = field.mul(t, field.pow(point[i], e[i]));
            acc = field.add(acc, t);
        }
        return acc;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms) {
            bool neg = c < Rational{0};
            Rational mag = neg ? -c : c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            bool unit = mag == Rational{1};
            bool any_var = false;
            std::ostringstream vars;
            for (std::size_t i = 0; i < kNumCoefficients; ++i) {
                if (e[i] == 0) continue;
                if (any_var) vars << "*";
                vars << kCoefficientNames[i];
                if (e[i] > 1) vars << "^" << int(e[i]);
                any_var = true;
            }
            if (!unit || !any_var) {
                os << mag;
                if (any_var) os << "*";
            }
            os << vars.str();
        }
        return os.str();
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

/// Q[q20, ..., p03] with a term-count ceiling; exceeding it raises
/// ResourceLimit so long symbolic runs stop cleanly.
class PolynomialRing {
  public:
    using Element = SparsePoly;

    explicit PolynomialRing(std::size_t max_terms = std::numeric_limits<std::size_t>::max())
        : max_terms_(max_terms) {}

    std::size_t max_terms() const noexcept { return max_terms_; }
    std::uint64_t characteristic() const noexcept { return 0; }
    std::string describe() const { return "Q[q20..p03]"; }

    SparsePoly zero() const { return {}; }
    SparsePoly one() const { return SparsePoly::constant(Rational{1}); }
    SparsePoly from_int(std::int64_t n) const { return SparsePoly::constant(Rational{n}); }
    bool is_zero(const SparsePoly& a) const { return a.is_zero(); }

    SparsePoly add(const SparsePoly& a, const SparsePoly& b) const { return merge(a, b, false); }
    SparsePoly sub(const SparsePoly& a, const SparsePoly& b) const { return merge(a, b, true); }

    SparsePoly neg(const SparsePoly& a) const {
        SparsePoly r = a;
        for (auto& t : r.terms) t.second = -t.second;
        return r;
    }

    SparsePoly mul(const SparsePoly& a, const SparsePoly& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        const SparsePoly& small = a.size() <= b.size() ? a : b;
        const SparsePoly& large = a.size() <= b.size() ? b : a;
        // Multiplying by a monomial preserves lex order, so each row is
        // already sorted and rows combine by merging.
        SparsePoly acc;
        for (const auto& [e, c] : small.terms) {
            SparsePoly row;
            row.terms.reserve(large.size());
            for (const auto& [f, d] : large.terms) {
                Exponent g;
                for (std::size_t i = 0; i < kNumCoefficients; ++i) {
                    unsigned s = unsigned(e[i]) + f[i];
                    if (s > std::numeric_limits<std::uint8_t>::max()) throw ResourceLimit("exponent overflow");
                    g[i] = static_cast<std::uint8_t>(s);
                }
                row.terms.emplace_back(g, c * d);
            }
            acc = merge(acc, row, false);
        }
        return acc;
    }

    /// Only nonzero constants are units.
    SparsePoly inv(const SparsePoly& a) const {
        if (a.size() != 1 || a.terms[0].first != Exponent{})
            throw RingError("non-invertible element: non-constant polynomial");
        return SparsePoly::constant(Rational{1} / a.terms[0].second);
    }

  private:
    SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) const {
        SparsePoly r;
        r.terms.reserve(a.size() + b.size());
        auto i = a.terms.begin();
        auto j = b.terms.begin();
        while (i != a.terms.end() || j != b.terms.end()) {
            if (j == b.terms.end() || (i != a.terms.end() && i->first < j->first)) {
                r.terms.push_back(*i++);
            } else if (i == a.terms.end() || j->first < i->first) {
                r.terms.emplace_back(j->first, subtract ? -j->second : j->second);
                ++j;
            } else {
                Rational c = subtract ? i->second - j->second : i->second + j->second;
                if (!c.is_zero()) r.terms.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        if (r.size() > max_terms_)
            throw ResourceLimit("symbolic term count " + std::to_string(r.size()) + " exceeds ceiling " +
                                std::to_string(max_terms_));
        return r;
    }

    std::size_t max_terms_;
};

}  // namespace focal
