#include "hyperappell/series.hpp"

#include <algorithm>

#include "hyperappell/errors.hpp"

namespace hyperappell {

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidParameter("a truncated series needs at least the t^0 coefficient");
}

TruncatedSeries TruncatedSeries::from_scalars(const std::vector<Rational>& coeffs) {
    std::vector<LaurentPoly> polys(coeffs.begin(), coeffs.end());
    return TruncatedSeries(std::move(polys));
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = LaurentPoly(Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::exp_xt(unsigned order) {
    TruncatedSeries s(order);
    Rational inv_fact(1);
    for (unsigned i = 0; i <= order; ++i) {
        if (i > 0) inv_fact /= Rational(static_cast<long>(i));
        s.coeffs_[i] = LaurentPoly::monomial(inv_fact, static_cast<long>(i));
    }
    return s;
}

bool TruncatedSeries::is_scalar() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.is_constant(); });
}

std::vector<Rational> TruncatedSeries::scalars() const {
    if (!is_scalar()) throw InvalidParameter("series has x-dependent coefficients");
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& p : coeffs_) out.push_back(p.coeff(0));
    return out;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& rhs) const {
    unsigned n = std::min(order(), rhs.order());
    TruncatedSeries out(n);
    for (unsigned i = 0; i <= n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= n; ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const LaurentPoly& a0 = coeffs_[0];
    if (a0.is_zero() || !a0.is_constant()) throw NonUnitConstantTerm();
    Rational inv = Rational(1) / a0.coeff(0);
    TruncatedSeries r(order());
    r.coeffs_[0] = LaurentPoly(inv);
    for (unsigned s = 1; s <= order(); ++s) {
        LaurentPoly acc;
        for (unsigned j = 1; j <= s; ++j) {
            if (coeffs_[j].is_zero() || r.coeffs_[s - j].is_zero()) continue;
            acc += coeffs_[j] * r.coeffs_[s - j];
        }
        r.coeffs_[s] = acc * (-inv);
    }
    return r;
}

TruncatedSeries TruncatedSeries::scale_variable(const Rational& c) const {
    TruncatedSeries out = *this;
    Rational power(1);
    for (auto& p : out.coeffs_) {
        p *= power;
        power *= c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncate(unsigned order) const {
    if (order > this->order()) throw InvalidParameter("cannot extend a truncated series");
    return TruncatedSeries(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

} // namespace hyperappell
