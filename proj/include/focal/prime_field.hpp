#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "focal/errors.hpp"

namespace focal {

/// Deterministic Miller-Rabin; exact for every n < 2^32.
constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    for (std::uint64_t a : {2u, 7u, 61u}) {
        if (a % n == 0) continue;
        std::uint64_t x = 1, base = a, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Canonical residue in [0, p).
struct Residue {
    std::uint32_t value = 0;

    friend constexpr bool operator==(Residue, Residue) = default;
    friend constexpr auto operator<=>(Residue, Residue) = default;
    friend std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value; }
};

/// The prime field F_p for p < 2^31. Reduction uses a precomputed 64-bit
/// Barrett reciprocal; no multiprecision arithmetic is involved.
class PrimeField {
  public:
    using Element = Residue;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p >= (1u << 31)) throw RingError("prime modulus must be below 2^31");
        if (!is_prime(p)) throw RingError("modulus " + std::to_string(p) + " is not prime");
        barrett_ = ~std::uint64_t{0} / p_;
    }

    std::uint32_t modulus() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string describe() const { return "F_" + std::to_string(p_); }

    Residue zero() const noexcept { return {0}; }
    Residue one() const noexcept { return {1}; }

    Residue from_int(std::int64_t n) const noexcept {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }
    Residue from_uint(std::uint64_t n) const noexcept { return {reduce(n)}; }

    Residue add(Residue a, Residue b) const noexcept {
        std::uint32_t s = a.value + b.value;
        return {s >= p_ ? s - p_ : s};
    }
    Residue sub(Residue a, Residue b) const noexcept {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }
    Residue neg(Residue a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
    Residue mul(Residue a, Residue b) const noexcept {
        return {reduce(static_cast<std::uint64_t>(a.value) * b.value)};
    }
    bool is_zero(Residue a) const noexcept { return a.value == 0; }

    Residue pow(Residue a, std::uint64_t e) const noexcept {
        Residue r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Residue inv(Residue a) const {
        if (a.value == 0) throw RingError("non-invertible element: 0 mod " + std::to_string(p_));
        // Extended Euclid on signed 64-bit values.
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a.value;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return from_int(t);
    }

    /// Square roots of a in increasing order: {0} for a = 0, two roots for
    /// a nonzero quadratic residue, empty for a non-residue. Tonelli-Shanks.
    std::vector<Residue> sqrt(Residue a) const {
        if (a.value == 0 || p_ == 2) return {a};
        if (pow(a, (p_ - 1) / 2).value != 1) return {};

        std::uint32_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        Residue z{2};
        while (pow(z, (p_ - 1) / 2).value != p_ - 1) ++z.value;

        Residue c = pow(z, q);
        Residue x = pow(a, (q + 1) / 2);
        Residue t = pow(a, q);
        int m = s;
        while (t.value != 1) {
            int i = 0;
            Residue t2 = t;
            while (t2.value != 1) {
                t2 = mul(t2, t2);
                ++i;
            }
            Residue b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
            x = mul(x, b);
            c = mul(b, b);
            t = mul(t, c);
            m = i;
        }
        Residue y = neg(x);
        if (y.value < x.value) std::swap(x, y);
        return {x, y};
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

  private:
    std::uint32_t reduce(std::uint64_t x) const noexcept {
        auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t p_;
    std::uint64_t barrett_ = 0;
};

inline Residue mod_invert(Residue a, const PrimeField& field) { return field.inv(a); }

inline std::vector<Residue> mod_sqrt(Residue a, const PrimeField& field) {
    return field.sqrt(a);
}

}  // namespace focal
