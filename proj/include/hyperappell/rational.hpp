#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperappell {

/// Arbitrary-precision rational kept in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Equality is therefore structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Parses "p/q" or "p" with an optional leading '-' on the numerator.
    /// Non-reduced input such as "2/4" is accepted and canonicalized.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] bool is_nonpositive_integer() const { return is_integer() && sgn(value_) <= 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Integer power; negative exponents invert (DivisionByZero on 0).
    [[nodiscard]] Rational pow(long exponent) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

/// Rising factorial x(x+1)...(x+n-1); 1 for n = 0.
Rational pochhammer(const Rational& x, unsigned n);

/// Falling factorial x(x-1)...(x-n+1); 1 for n = 0.
Rational falling_factorial(const Rational& x, unsigned n);

/// n!/(i!(n-i)!) for i <= n, else 0.
Rational binomial(unsigned n, unsigned i);

Rational factorial(unsigned n);

} // namespace hyperappell
