#include "horadam/numeric.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "horadam/error.hpp"

namespace horadam {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (sgn(denominator) == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational GaussianRational::norm() const { return re_ * re_ + im_ * im_; }

GaussianRational GaussianRational::reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    if (is_real()) return {Rational(mpq_class(1 / re_.raw()))};
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    if (!rhs.im_.is_zero()) im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    if (!rhs.im_.is_zero()) im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    // Real-by-real products dominate the workload; skip the cross terms.
    if (is_real() && rhs.is_real()) {
        re_ *= rhs.re_;
        return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    if (rhs.is_real()) {
        re_ /= rhs.re_;
        if (!im_.is_zero()) im_ /= rhs.re_;
        return *this;
    }
    return *this *= rhs.reciprocal();
}

GaussianRational add(const GaussianRational& lhs, const GaussianRational& rhs) { return lhs + rhs; }
GaussianRational mul(const GaussianRational& lhs, const GaussianRational& rhs) { return lhs * rhs; }
GaussianRational div(const GaussianRational& lhs, const GaussianRational& rhs) { return lhs / rhs; }

GaussianRational int_pow(const GaussianRational& base, std::int64_t exponent) {
    GaussianRational factor = exponent < 0 ? base.reciprocal() : base;
    // Negating INT64_MIN overflows; go through unsigned arithmetic.
    auto e = exponent < 0 ? ~static_cast<std::uint64_t>(exponent) + 1 : static_cast<std::uint64_t>(exponent);
    GaussianRational result(1);
    while (e != 0) {
        if (e & 1U) result *= factor;
        e >>= 1U;
        if (e != 0) factor *= factor;
    }
    return result;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    GaussianRational parse() {
        if (text_.empty()) fail("empty scalar");
        if (peek() == 'i') {
            ++pos_;
            expect_end();
            return {Rational(0), Rational(1)};
        }
        Rational first = rational();
        if (at_end()) return {first};
        if (peek() == 'i') {
            ++pos_;
            expect_end();
            return {Rational(0), first};
        }
        if (peek() != '+' && peek() != '-') fail("expected '+', '-' or 'i'");
        const bool negative = peek() == '-';
        ++pos_;
        Rational imag(1);
        if (at_end()) fail("missing imaginary part");
        if (peek() != 'i') imag = rational();
        if (at_end() || peek() != 'i') fail("expected 'i'");
        ++pos_;
        expect_end();
        return {first, negative ? -imag : imag};
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void expect_end() const {
        if (!at_end()) fail("unexpected trailing character");
    }

    mpz_class digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        if (pos_ == start) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Rational rational() {
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        mpz_class num = digits();
        mpz_class den = 1;
        if (!at_end() && peek() == '/') {
            ++pos_;
            const std::size_t den_pos = pos_;
            den = digits();
            if (sgn(den) == 0) throw ParseError("zero denominator", den_pos);
        }
        if (negative) num = -num;
        return {num, den};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GaussianRational parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string format_scalar(const GaussianRational& value) {
    if (value.is_real()) return value.re().to_string();
    std::string imag = value.im().to_string() + "i";
    if (value.re().is_zero()) return imag;
    std::string out = value.re().to_string();
    if (value.im().sign() > 0) out += '+';
    return out + imag;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) { return os << format_scalar(value); }

mpz_class binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace horadam
