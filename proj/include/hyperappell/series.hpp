#pragma once

#include <span>
#include <vector>

#include "hyperappell/laurent_poly.hpp"

namespace hyperappell {

/// Formal power series in t known through t^order, with Laurent-polynomial
/// coefficients in x. Constant coefficients model a scalar series.
///
/// Every binary operation truncates to the smaller operand order; nothing is
/// ever extended silently.
class TruncatedSeries {
public:
    /// The zero series through t^order.
    explicit TruncatedSeries(unsigned order);
    /// Coefficients of t^0..t^N; the order is N = coeffs.size() - 1 (must be nonempty).
    explicit TruncatedSeries(std::vector<LaurentPoly> coeffs);

    static TruncatedSeries from_scalars(const std::vector<Rational>& coeffs);
    /// The unit series 1 through t^order.
    static TruncatedSeries one(unsigned order);
    /// e^{xt}: coefficient of t^s is x^s/s!.
    static TruncatedSeries exp_xt(unsigned order);

    [[nodiscard]] unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    [[nodiscard]] const LaurentPoly& coeff(unsigned s) const { return coeffs_.at(s); }
    [[nodiscard]] std::span<const LaurentPoly> coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_scalar() const;
    /// Constant-term values of a scalar series; throws InvalidParameter otherwise.
    [[nodiscard]] std::vector<Rational> scalars() const;

    /// Cauchy product truncated at min(order, rhs.order).
    [[nodiscard]] TruncatedSeries mul(const TruncatedSeries& rhs) const;
    /// r with mul(r) = 1 through order; NonUnitConstantTerm unless the
    /// t^0 coefficient is a nonzero constant.
    [[nodiscard]] TruncatedSeries reciprocal() const;
    /// A(c t).
    [[nodiscard]] TruncatedSeries scale_variable(const Rational& c) const;
    [[nodiscard]] TruncatedSeries truncate(unsigned order) const;

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return a.mul(b); }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<LaurentPoly> coeffs_;
};

inline TruncatedSeries exp_xt_series(unsigned order) { return TruncatedSeries::exp_xt(order); }
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a.mul(b); }
inline TruncatedSeries series_reciprocal(const TruncatedSeries& a) { return a.reciprocal(); }

} // namespace hyperappell
