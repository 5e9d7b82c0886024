#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "focal/errors.hpp"
#include "focal/prime_field.hpp"

namespace focal {

/// Exact rational in lowest terms with positive denominator; backed by GMP.
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw RingError("rational with zero denominator");
        q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "a" or "a/b" with optional sign.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (text.empty() || q.set_str(text, 10) != 0) throw FormatError("not a rational number: '" + text + "'");
        if (q.get_den() == 0) throw FormatError("zero denominator in '" + text + "'");
        return Rational(q);
    }

    const mpq_class& raw() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_zero() const noexcept { return sgn(q_) == 0; }
    std::string str() const { return q_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw RingError("non-invertible element: rational 0");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// Image in F_p; throws when p divides the denominator.
    Residue reduce(const PrimeField& field) const {
        auto p = static_cast<unsigned long>(field.modulus());
        mpz_class n = q_.get_num() % p;
        if (n < 0) n += p;
        mpz_class d = q_.get_den() % p;
        if (d == 0) throw RingError("denominator " + q_.get_den().get_str() + " not invertible mod " + std::to_string(p));
        Residue rn{static_cast<std::uint32_t>(n.get_ui())};
        Residue rd{static_cast<std::uint32_t>(d.get_ui())};
        return field.mul(rn, field.inv(rd));
    }

  private:
    mpq_class q_;
};

/// The field Q.
class RationalField {
  public:
    using Element = Rational;

    std::uint64_t characteristic() const noexcept { return 0; }
    std::string describe() const { return "Q"; }

    Rational zero() const { return Rational{}; }
    Rational one() const { return Rational{1}; }
    Rational from_int(std::int64_t n) const { return Rational{n}; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational neg(const Rational& a) const { return -a; }
    Rational inv(const Rational& a) const { return Rational{1} / a; }
    bool is_zero(const Rational& a) const { return a.is_zero(); }
};

}  // namespace focal
