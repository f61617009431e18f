#pragma once

// Exact scalars: arbitrary-precision rationals and the Gaussian rationals
// Q(i) built on them. Every value is kept in canonical form, so equality is
// structural.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace horadam {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero when `denominator` is zero.
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    int sign() const noexcept { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

    /// "n" or "n/d"; never a positive sign.
    std::string to_string() const;

private:
    mpq_class value_;
};

/// a + bi with a, b in Q.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = Rational()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(int re) : re_(re) {}   // NOLINT(google-explicit-constructor)

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    Rational norm() const;
    /// Throws DivisionByZero on zero.
    GaussianRational reciprocal() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
    friend bool operator==(const GaussianRational& lhs, const GaussianRational& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }

private:
    Rational re_;
    Rational im_;
};

using Scalar = GaussianRational;

GaussianRational add(const GaussianRational& lhs, const GaussianRational& rhs);
GaussianRational mul(const GaussianRational& lhs, const GaussianRational& rhs);
GaussianRational div(const GaussianRational& lhs, const GaussianRational& rhs);

/// Square-and-multiply. A negative exponent inverts the base first, so zero
/// raised to a negative power throws DivisionByZero.
GaussianRational int_pow(const GaussianRational& base, std::int64_t exponent);

/// Parses `real | imag | real sign imag` where `imag` is `rational "i" | "i"`
/// and `rational` is `["-"] digits ["/" digits]`. No whitespace is allowed.
GaussianRational parse_scalar(std::string_view text);

/// Canonical text in the same grammar: "3/2", "-1+2i", "1/3-5/7i", "-1i".
std::string format_scalar(const GaussianRational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);
std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
mpz_class binomial(std::int64_t n, std::int64_t k);

}  // namespace horadam
