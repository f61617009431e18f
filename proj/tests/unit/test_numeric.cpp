#include <doctest.h>

#include <random>

#include "horadam/error.hpp"
#include "horadam/numeric.hpp"

using namespace horadam;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

Scalar random_scalar(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 17);
    for (;;) {
        Scalar value(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        if (allow_zero || !value.is_zero()) return value;
    }
}

}  // namespace

TEST_CASE("addition") {
    CHECK(add(S("1/2"), S("1/3")) == S("5/6"));
    CHECK(add(S("-7/3+2i"), Scalar()) == S("-7/3+2i"));
    CHECK(add(S("1/2+1/2i"), S("1/2-1/2i")) == Scalar(1));
}

TEST_CASE("multiplication") {
    CHECK(mul(Scalar::i(), Scalar::i()) == Scalar(-1));
    CHECK(mul(S("4/9-3i"), Scalar(1)) == S("4/9-3i"));
    CHECK(mul(S("1+i"), S("1-i")) == Scalar(2));
}

TEST_CASE("division") {
    CHECK(div(Scalar(1), Scalar::i()) == S("-1i"));
    CHECK(div(S("5/8+2/3i"), S("5/8+2/3i")) == Scalar(1));
    CHECK(div(Scalar(2), S("1+i")) == S("1-i"));
    CHECK(mul(div(Scalar(2), S("1+i")), S("1+i")) == Scalar(2));
    CHECK_THROWS_AS(div(Scalar(3), Scalar()), DivisionByZero);
    CHECK_THROWS_AS(Scalar().reciprocal(), DivisionByZero);
}

TEST_CASE("integer powers") {
    CHECK(int_pow(Scalar(-1), 7) == Scalar(-1));
    CHECK(int_pow(S("3/5-2i"), 0) == Scalar(1));
    CHECK(int_pow(S("1/2"), -3) == Scalar(8));
    CHECK(int_pow(S("i"), 4) == Scalar(1));
    CHECK(int_pow(S("i"), -1) == S("-1i"));
    CHECK_THROWS_AS(int_pow(Scalar(), -2), DivisionByZero);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Scalar x = random_scalar(rng, false);
        Scalar repeated(1);
        for (int e = 0; e <= 64; ++e) {
            CHECK(int_pow(x, e) == repeated);
            CHECK(int_pow(x, e) * int_pow(x, -e) == Scalar(1));
            repeated *= x;
        }
    }
}

TEST_CASE("canonical rationals") {
    const Rational r(mpz_class(6), mpz_class(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(mpz_class(0), mpz_class(-5)).denominator() == 1);
    CHECK(S("6/4") == S("3/2"));
    CHECK(format_scalar(S("0/7")) == "0");
}

TEST_CASE("parsing and formatting") {
    CHECK(S("3/2") == Scalar(Rational(3, 2)));
    CHECK(S("-1+2i") == Scalar(Rational(-1), Rational(2)));
    CHECK(S("1/3-5/7i") == Scalar(Rational(1, 3), Rational(-5, 7)));
    CHECK(S("i") == Scalar::i());
    CHECK(S("-1i") == -Scalar::i());
    CHECK_THROWS_AS(parse_scalar("-i"), ParseError);  // the grammar only allows a bare i after a real part
    CHECK(S("2-i") == Scalar(Rational(2), Rational(-1)));

    for (const char* text : {"3/2", "-1+2i", "1/3-5/7i", "-1i", "1i", "0", "-12", "7/9i", "-4/3+1i"}) {
        CHECK(format_scalar(S(text)) == text);
    }

    for (const char* bad : {"", "abc", "1.5", "1/0", "1 + 2i", "2i3", "--1", "1/", "+"}) {
        CHECK_THROWS_AS(parse_scalar(bad), ParseError);
    }
    try {
        parse_scalar("12x");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.position() == 2);
    }
}

TEST_CASE("field properties on random values") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar());
        if (!b.is_zero()) CHECK(div(mul(a, b), b) == a);
        CHECK(parse_scalar(format_scalar(a)) == a);
        CHECK(format_scalar(parse_scalar(format_scalar(a))) == format_scalar(a));
        CHECK(a * a.conj() == Scalar(a.norm()));
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
    for (int k = 0; k <= 40; ++k) {
        for (int j = 0; j <= k; ++j) {
            CHECK(binomial(k, j) == binomial(k, k - j));
            if (k > 0 && j > 0 && j < k) CHECK(binomial(k, j) == binomial(k - 1, j - 1) + binomial(k - 1, j));
        }
    }
}
