#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "focal/dual.hpp"
#include "focal/errors.hpp"
#include "focal/focal_engine.hpp"
#include "focal/poly_system.hpp"
#include "focal/prime_field.hpp"
#include "focal/version.hpp"

namespace focal {

/// k x 14 matrix over F_p; entry (j, i) is d s_{j+1} / d a_i at the base point.
struct JacobianMatrix {
    std::size_t rows = 0;
    std::size_t cols = kNumCoefficients;
    std::vector<Residue> entries;  // row-major

    JacobianMatrix() = default;
    JacobianMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Residue& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    Residue at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    friend bool operator==(const JacobianMatrix&, const JacobianMatrix&) = default;
};

using CubicDualRing = DualRing<PrimeField, kNumCoefficients>;

/// Runs the engine once over F_p[eps]^14 with eps seeded as the identity on
/// the coefficients, returning s_1..s_n with exact gradients.
inline FocalSequence<CubicDualRing::Element> dual_focal_values(const PrimeField& field,
                                                               const CubicCoefficients<Residue>& point, int n,
                                                               Convention convention) {
    CubicDualRing ring(field);
    CubicCoefficients<CubicDualRing::Element> seeded;
    for (std::size_t i = 0; i < kNumCoefficients; ++i) seeded[i] = ring.variable(point[i], i);
    FocalEngine<CubicDualRing> engine(ring, 3, n, convention);
    return engine.focal_values(cubic_system(seeded), n);
}

inline JacobianMatrix jacobian_from(const FocalSequence<CubicDualRing::Element>& seq, int k) {
    JacobianMatrix m(static_cast<std::size_t>(k), kNumCoefficients);
    for (int j = 1; j <= k; ++j)
        for (std::size_t i = 0; i < kNumCoefficients; ++i) m.at(j - 1, i) = seq.s(j).gradient[i];
    return m;
}

/// Jacobian of s_1..s_k at a cubic system over F_p. The engine runs to
/// s_{k+1}, hence p >= 2k+7.
inline JacobianMatrix jacobian(const PrimeField& field, const CubicCoefficients<Residue>& point, int k,
                               Convention convention = Convention::N1) {
    if (k < 1) throw Error("Jacobian depth must be at least 1");
    return jacobian_from(dual_focal_values(field, point, k + 1, convention), k);
}

/// Rank over F_p by Gaussian elimination.
inline std::size_t rank_mod_p(const PrimeField& field, JacobianMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col).value == 0) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        Residue inv = field.inv(m.at(rank, col));
        for (std::size_t c = 0; c < m.cols; ++c) m.at(rank, c) = field.mul(m.at(rank, c), inv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col).value == 0) continue;
            Residue factor = m.at(r, col);
            for (std::size_t c = 0; c < m.cols; ++c)
                m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

/// Which hypothesis of the lifting criterion failed.
class CertificationError : public Error {
  public:
    enum class Kind { PrefixNotVanishing, NextValueVanishes, RankDeficient };

    CertificationError(Kind kind, int detail, std::string message)
        : Error(std::move(message)), kind_(kind), detail_(detail) {}

    Kind kind() const noexcept { return kind_; }
    /// The failing index j for PrefixNotVanishing, the rank found for RankDeficient.
    int detail() const noexcept { return detail_; }

  private:
    Kind kind_;
    int detail_;
};

/// A point x over F_p where s_1..s_k vanish, s_{k+1} does not, and the
/// Jacobian of s_1..s_k has rank k. Then the tangent space of
/// V(s_1..s_k) at x has codimension k, x lies on a component that lifts to
/// characteristic zero, and s_{k+1} does not vanish on the complex vanishing
/// set: s_{k+1} is not in the radical of (s_1, ..., s_k).
///
/// Only certify_point and parse_certificate construct one, and both
/// recompute every fact first.
class Certificate {
  public:
    std::uint32_t prime() const noexcept { return prime_; }
    const CubicCoefficients<Residue>& point() const noexcept { return point_; }
    int depth() const noexcept { return depth_; }
    Residue next_value() const noexcept { return next_value_; }
    std::size_t rank() const noexcept { return rank_; }
    Convention convention() const noexcept { return convention_; }
    const JacobianMatrix& jacobian() const noexcept { return jacobian_; }
    const std::string& version() const noexcept { return version_; }

    std::string statement() const {
        const int k = depth_;
        std::ostringstream os;
        os << "At this point of V(s_1..s_" << k << ") over F_" << prime_ << " the tangent space has codimension " << k
           << ", so the point lies on a component of V(s_1..s_" << k << ") over Z that is not contained in the fiber"
           << " over F_" << prime_ << ". Since s_" << k + 1 << " does not vanish at the point, s_" << k + 1
           << " does not vanish on the complex variety V(s_1..s_" << k << "), i.e. s_" << k + 1
           << " is not in rad(s_1, ..., s_" << k << ").";
        if (k == 11) os << " Hence m(3) >= 12.";
        return os.str();
    }

    /// Fixed-order key-value text; identical inputs give identical bytes.
    void write(std::ostream& os) const {
        os << "format = focal-certificate/1\n";
        os << "artifact_version = " << version_ << "\n";
        os << "prime = " << prime_ << "\n";
        os << "depth = " << depth_ << "\n";
        os << "convention = " << to_string(convention_) << "\n";
        os << "coefficient_order =";
        for (auto* n : kCoefficientNames) os << " " << n;
        os << "\ncoefficients =";
        for (auto r : point_) os << " " << r;
        os << "\nvanishing = s_1..s_" << depth_ << " = 0\n";
        os << "next_value = " << next_value_ << "\n";
        os << "jacobian_rank = " << rank_ << "\n";
        for (std::size_t r = 0; r < jacobian_.rows; ++r) {
            os << "jacobian_row_" << r + 1 << " =";
            for (std::size_t c = 0; c < jacobian_.cols; ++c) os << " " << jacobian_.at(r, c);
            os << "\n";
        }
        os << "statement = " << statement() << "\n";
    }

    std::string str() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

  private:
    friend Certificate certify_point(const PrimeField&, const CubicCoefficients<Residue>&, int, Convention);

    Certificate() = default;

    std::uint32_t prime_ = 0;
    CubicCoefficients<Residue> point_{};
    int depth_ = 0;
    Residue next_value_{};
    std::size_t rank_ = 0;
    Convention convention_ = Convention::N1;
    JacobianMatrix jacobian_;
    std::string version_ = kVersion;
};

/// Recomputes s_1..s_{k+1} and the Jacobian rank at `point` and issues a
/// Certificate only if s_1..s_k = 0, s_{k+1} != 0 and rank = k.
inline Certificate certify_point(const PrimeField& field, const CubicCoefficients<Residue>& point, int k,
                                 Convention convention = Convention::N1) {
    if (k < 1) throw Error("certification depth must be at least 1");
    for (auto r : point)
        if (r.value >= field.modulus()) throw Error("coefficient not a canonical residue");

    // A nonvanishing prefix is reported even when p is too small for s_{k+1}.
    const int reachable = static_cast<int>((field.modulus() - 5) / 2);
    const int n = std::min(k + 1, reachable);
    if (n < 1) throw RingError("prime too small to evaluate any focal value");
    auto scalar = focal_values(field, cubic_system(point), n, convention);
    for (int j = 1; j <= std::min(k, n); ++j)
        if (!field.is_zero(scalar.s(j)))
            throw CertificationError(CertificationError::Kind::PrefixNotVanishing, j,
                                     "prefix not vanishing at j = " + std::to_string(j) + " (s_" + std::to_string(j) +
                                         " = " + std::to_string(scalar.s(j).value) + " mod " +
                                         std::to_string(field.modulus()) + ")");
    if (n < k + 1)
        throw RingError("p = " + std::to_string(field.modulus()) + " too small to certify depth " + std::to_string(k) +
                        ": need p >= 2(k+1)+5 = " + std::to_string(2 * (k + 1) + 5));
    auto dual = dual_focal_values(field, point, k + 1, convention);
    for (int j = 1; j <= k + 1; ++j)
        if (dual.s(j).value != scalar.s(j)) throw Error("internal: dual and scalar focal values disagree");

    if (field.is_zero(scalar.s(k + 1)))
        throw CertificationError(CertificationError::Kind::NextValueVanishes, k + 1,
                                 "next value vanishes: s_" + std::to_string(k + 1) + " = 0 mod " +
                                     std::to_string(field.modulus()));

    auto jac = jacobian_from(dual, k);
    auto rank = rank_mod_p(field, jac);
    if (rank != static_cast<std::size_t>(k))
        throw CertificationError(CertificationError::Kind::RankDeficient, static_cast<int>(rank),
                                 "rank deficient: Jacobian of s_1..s_" + std::to_string(k) + " has rank " +
                                     std::to_string(rank) + " < " + std::to_string(k));

    Certificate cert;
    cert.prime_ = field.modulus();
    cert.point_ = point;
    cert.depth_ = k;
    cert.next_value_ = scalar.s(k + 1);
    cert.rank_ = rank;
    cert.convention_ = convention;
    cert.jacobian_ = std::move(jac);
    return cert;
}

/// Re-verifies a certificate file from its embedded inputs alone. Returns
/// the freshly recomputed certificate; throws FormatError if any recorded
/// field differs from the recomputation.
inline Certificate recheck_certificate(std::istream& in) {
    std::map<std::string, std::string> fields;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find(" = ");
        if (eq == std::string::npos) throw FormatError("certificate line without ' = ': " + line);
        fields[line.substr(0, eq)] = line.substr(eq + 3);
    }
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = fields.find(key);
        if (it == fields.end()) throw FormatError("certificate missing field '" + key + "'");
        return it->second;
    };
    if (need("format") != "focal-certificate/1") throw FormatError("unsupported certificate format '" + need("format") + "'");

    std::uint32_t p = 0;
    int depth = 0;
    try {
        p = static_cast<std::uint32_t>(std::stoul(need("prime")));
        depth = std::stoi(need("depth"));
    } catch (const std::logic_error&) {
        throw FormatError("certificate prime/depth not integers");
    }
    PrimeField field(p);
    CubicCoefficients<Residue> point;
    std::istringstream coeffs(need("coefficients"));
    for (auto& r : point) {
        std::int64_t v;
        if (!(coeffs >> v) || v < 0 || v >= p) throw FormatError("certificate coefficients malformed");
        r = Residue{static_cast<std::uint32_t>(v)};
    }
    auto cert = certify_point(field, point, depth, parse_convention(need("convention")));

    std::istringstream fresh(cert.str());
    while (std::getline(fresh, line)) {
        auto eq = line.find(" = ");
        auto key = line.substr(0, eq);
        if (key == "artifact_version") continue;
        if (need(key) != line.substr(eq + 3)) throw FormatError("certificate field '" + key + "' does not match recomputation");
    }
    return cert;
}

}  // namespace focal
