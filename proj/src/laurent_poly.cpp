#include "hyperappell/laurent_poly.hpp"

#include <algorithm>
#include <ostream>

#include "hyperappell/errors.hpp"

namespace hyperappell {

LaurentPoly::LaurentPoly(Rational c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(long min_exponent, std::vector<Rational> coeffs)
    : min_exp_(min_exponent), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(Rational c, long exponent) {
    LaurentPoly p;
    if (!c.is_zero()) {
        p.min_exp_ = exponent;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

void LaurentPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    min_exp_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) min_exp_ = 0;
}

long LaurentPoly::degree() const {
    if (is_zero()) return 0;
    return min_exp_ + static_cast<long>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(long exponent) const {
    long idx = exponent - min_exp_;
    if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(idx)];
}

Rational LaurentPoly::leading_coeff() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational LaurentPoly::eval(const Rational& x0) const {
    if (is_zero()) return Rational(0);
    if (x0.is_zero()) {
        if (min_exp_ < 0) throw EvalAtPole();
        return min_exp_ == 0 ? coeffs_.front() : Rational(0);
    }
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc * x0.pow(min_exp_);
}

LaurentPoly LaurentPoly::derivative() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        long e = min_exp_ + static_cast<long>(i);
        if (coeffs_[i].is_zero() || e == 0) {
            out.emplace_back(0);
            continue;
        }
        out.push_back(coeffs_[i] * Rational(e));
    }
    return {min_exp_ - 1, std::move(out)};
}

LaurentPoly LaurentPoly::compose(const LaurentPoly& f) const {
    if (!is_ordinary()) throw ComposeWithLaurent();
    if (is_zero()) return {};
    // Horner over the dense band, then the x^min_exp factor.
    LaurentPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * f + LaurentPoly(*it);
    }
    for (long e = 0; e < min_exp_; ++e) acc = acc * f;
    return acc;
}

LaurentPoly LaurentPoly::scale_argument(const Rational& c) const {
    if (c.is_zero()) return LaurentPoly(eval(c));
    std::vector<Rational> out(coeffs_);
    Rational power = c.pow(min_exp_);
    for (auto& v : out) {
        v *= power;
        power *= c;
    }
    return {min_exp_, std::move(out)};
}

LaurentPoly LaurentPoly::shift_exponents(long by) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.min_exp_ += by;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    long lo = std::min(min_exp_, rhs.min_exp_);
    long hi = std::max(degree(), rhs.degree());
    if (lo < min_exp_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Rational(0));
        min_exp_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[static_cast<std::size_t>(rhs.min_exp_ - lo) + i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) return *this = LaurentPoly();
    for (auto& v : coeffs_) {
        if (!v.is_zero()) v *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return {lhs.min_exp_ + rhs.min_exp_, std::move(out)};
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& v : out.coeffs_) v = -v;
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << p.coeffs_[i] << " * x^" << p.min_exp_ + static_cast<long>(i);
        first = false;
    }
    return os;
}

} // namespace hyperappell
