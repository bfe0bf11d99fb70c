#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "hyperappell/rational.hpp"

namespace hyperappell {

/// Finitely supported Laurent polynomial in x over the rationals, stored as a
/// dense ascending band starting at `min_exponent()`.
///
/// Canonical form: the first and last stored coefficients are nonzero; the
/// zero polynomial stores nothing and reports min_exponent 0. Equality is
/// structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Rational c); // NOLINT(google-explicit-constructor): constants embed
    LaurentPoly(long min_exponent, std::vector<Rational> coeffs);

    static LaurentPoly monomial(Rational c, long exponent);
    static LaurentPoly x() { return monomial(Rational(1), 1); }
    /// Ordinary polynomial from ascending coefficients c_0, c_1, ...
    static LaurentPoly from_ascending(std::vector<Rational> coeffs) { return {0, std::move(coeffs)}; }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return is_zero() || (min_exp_ == 0 && coeffs_.size() == 1); }
    /// True when no negative exponent is present.
    [[nodiscard]] bool is_ordinary() const { return is_zero() || min_exp_ >= 0; }

    [[nodiscard]] long min_exponent() const { return min_exp_; }
    /// Highest exponent; 0 for the zero polynomial.
    [[nodiscard]] long degree() const;
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(long exponent) const;
    [[nodiscard]] Rational leading_coeff() const;

    /// Exact value at x0; throws EvalAtPole for x0 = 0 with negative exponents.
    [[nodiscard]] Rational eval(const Rational& x0) const;
    [[nodiscard]] LaurentPoly derivative() const;
    /// p(f(x)); requires this to be ordinary, else ComposeWithLaurent.
    [[nodiscard]] LaurentPoly compose(const LaurentPoly& f) const;
    /// p(c x).
    [[nodiscard]] LaurentPoly scale_argument(const Rational& c) const;
    [[nodiscard]] LaurentPoly shift_exponents(long by) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(LaurentPoly lhs, const Rational& c) { return lhs *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly rhs) { return rhs *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

private:
    void normalize();

    long min_exp_ = 0;
    std::vector<Rational> coeffs_;
};

} // namespace hyperappell
