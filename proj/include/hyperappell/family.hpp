#pragma once

#include <vector>

#include "hyperappell/laurent_poly.hpp"
#include "hyperappell/rational.hpp"
#include "hyperappell/series.hpp"

namespace hyperappell {

/// Upper (a_1..a_p) and lower (b_1..b_q) parameter lists of a pFq.
/// Lower parameters that are zero or negative integers are rejected.
class HyperParams {
public:
    HyperParams() = default;
    HyperParams(std::vector<Rational> upper, std::vector<Rational> lower);

    [[nodiscard]] const std::vector<Rational>& upper() const { return upper_; }
    [[nodiscard]] const std::vector<Rational>& lower() const { return lower_; }

    /// Every parameter incremented by one (the pFq derivative shift).
    [[nodiscard]] HyperParams shifted() const;

    friend bool operator==(const HyperParams&, const HyperParams&) = default;

private:
    std::vector<Rational> upper_;
    std::vector<Rational> lower_;
};

/// Parameters, order k >= 1 and parameter m; determines A_n^(k)(m, .) for all n.
class FamilySpec {
public:
    FamilySpec(HyperParams params, unsigned k, Rational m);

    [[nodiscard]] const HyperParams& params() const { return params_; }
    [[nodiscard]] unsigned k() const { return k_; }
    [[nodiscard]] const Rational& m() const { return m_; }

    [[nodiscard]] FamilySpec with_k(unsigned k) const { return {params_, k, m_}; }
    [[nodiscard]] FamilySpec with_m(Rational m) const { return {params_, k_, std::move(m)}; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    HyperParams params_;
    unsigned k_;
    Rational m_;
};

/// The k ratios -n/k, -(n-1)/k, ..., -(n-k+1)/k. A negative n is allowed and
/// yields the positive ratios used by shifted parameter lists.
struct DeltaArray {
    unsigned k;
    long n;
    std::vector<Rational> entries;
};

/// prod_r a_r^(i) / prod_s b_s^(i); 1 when both lists are empty.
Rational gamma_ratio(const HyperParams& params, unsigned i);

DeltaArray delta_array(unsigned k, long n);
Rational product_delta(const DeltaArray& d);

/// Sum over i = 0..max_terms of gamma_ratio(params, i) * prod(extra_upper)^(i) * z^i / i!.
/// Stops early once a term vanishes. Throws LowerParamPole if a lower
/// Pochhammer factor hits zero inside the range.
Rational pfq_terminating(const HyperParams& params, const std::vector<Rational>& extra_upper,
                         const Rational& z, unsigned max_terms);

/// The same sum with symbolic argument z = scale / x^k, as a Laurent
/// polynomial in x with support {0, -k, -2k, ...}.
LaurentPoly pfq_inverse_power(const HyperParams& params, const std::vector<Rational>& extra_upper,
                              const Rational& scale, unsigned k, unsigned max_terms);

/// Standard-basis constructor: sum_i n! (-1)^{ki} gamma^i m^i / (i! k^{ki} (n-ki)!) x^{n-ki}.
LaurentPoly appell_poly(const FamilySpec& spec, unsigned n);
/// appell_poly for every n in 0..n_max.
std::vector<LaurentPoly> appell_polys(const FamilySpec& spec, unsigned n_max);

/// x^n times the terminating hypergeometric sum in m/x^k, built as a Laurent sum.
LaurentPoly appell_laurent_form(const FamilySpec& spec, unsigned n);

/// A(t): coefficient of t^{kr} is gamma^r (-1)^{kr} m^r / (k^{kr} r!), zero elsewhere.
TruncatedSeries generating_series(const FamilySpec& spec, unsigned order);

/// n! [t^n] A(t) e^{xt}.
LaurentPoly gf_coefficient_poly(const FamilySpec& spec, unsigned n);
/// gf_coefficient_poly for n = 0..n_max from one series product.
std::vector<LaurentPoly> gf_coefficient_polys(const FamilySpec& spec, unsigned n_max);

/// (sum_i (-1)^{ki} gamma^i m^i / (i! k^{ki}) D^{ki}) x^n by repeated differentiation.
LaurentPoly apply_diff_operator(const FamilySpec& spec, unsigned n);

/// A_n(m, f(x)); f must be an ordinary nonzero polynomial.
LaurentPoly composed_poly(const FamilySpec& spec, unsigned n, const LaurentPoly& f);

} // namespace hyperappell
