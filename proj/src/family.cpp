#include "hyperappell/family.hpp"

#include "hyperappell/errors.hpp"

namespace hyperappell {

namespace {

Rational signed_unit(bool negative) { return Rational(negative ? -1 : 1); }

// (-1)^k m / k^k: the argument of A(t) per power of t^k.
Rational series_argument(const FamilySpec& spec) {
    long k = spec.k();
    return signed_unit(k % 2 == 1) * spec.m() / Rational(k).pow(k);
}

// Running product of factors (r + s), kept as an unreduced integer fraction
// and canonicalized once when read. Saves a gcd per factor.
class TermRatio {
public:
    void times(const Rational& r, long s = 0) { step(num_, den_, r, s); }
    // False when r + s vanishes; the ratio is then unusable.
    bool over(const Rational& r, long s = 0) {
        step(den_, num_, r, s);
        return sgn(den_) != 0;
    }
    void times(unsigned long v) { num_ *= v; }
    void over(unsigned long v) { den_ *= v; }
    [[nodiscard]] Rational value() const { return Rational(mpq_class(num_, den_)); }

private:
    static void step(mpz_class& top, mpz_class& bottom, const Rational& r, long s) {
        top *= r.raw().get_num() + s * r.raw().get_den();
        bottom *= r.raw().get_den();
    }
    mpz_class num_ = 1;
    mpz_class den_ = 1;
};

} // namespace

HyperParams::HyperParams(std::vector<Rational> upper, std::vector<Rational> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
    for (const auto& b : lower_) {
        if (b.is_nonpositive_integer()) {
            throw InvalidParameter("lower parameter b = " + b.str() +
                                   " is zero or a negative integer; lower pFq parameters must avoid these poles");
        }
    }
}

HyperParams HyperParams::shifted() const {
    HyperParams out = *this;
    for (auto& a : out.upper_) a += 1;
    for (auto& b : out.lower_) b += 1;
    return out;
}

FamilySpec::FamilySpec(HyperParams params, unsigned k, Rational m)
    : params_(std::move(params)), k_(k), m_(std::move(m)) {
    if (k_ == 0) throw InvalidParameter("order k must be at least 1");
}

Rational gamma_ratio(const HyperParams& params, unsigned i) {
    Rational num(1);
    for (const auto& a : params.upper()) num *= pochhammer(a, i);
    Rational den(1);
    for (const auto& b : params.lower()) den *= pochhammer(b, i);
    return num / den;
}

DeltaArray delta_array(unsigned k, long n) {
    if (k == 0) throw InvalidParameter("order k must be at least 1");
    DeltaArray d{k, n, {}};
    d.entries.reserve(k);
    for (unsigned j = 0; j < k; ++j) d.entries.emplace_back(-(n - static_cast<long>(j)), static_cast<long>(k));
    return d;
}

Rational product_delta(const DeltaArray& d) {
    Rational out(1);
    for (const auto& e : d.entries) out *= e;
    return out;
}

namespace {

// Coefficients t_0..t_M of the hypergeometric sum, t_{i+1} = t_i * ratio(i) * z/(i+1).
std::vector<Rational> pfq_terms(const HyperParams& params, const std::vector<Rational>& extra_upper,
                                const Rational& z, unsigned max_terms) {
    std::vector<Rational> terms;
    terms.reserve(max_terms + 1);
    Rational term(1);
    terms.push_back(term);
    for (unsigned i = 0; i < max_terms; ++i) {
        const long shift = i;
        TermRatio ratio;
        ratio.times(z);
        for (const auto& a : params.upper()) ratio.times(a, shift);
        for (const auto& a : extra_upper) ratio.times(a, shift);
        ratio.over(static_cast<unsigned long>(i) + 1);
        for (const auto& b : params.lower()) {
            if (!ratio.over(b, shift)) {
                throw LowerParamPole("lower parameter " + b.str() + " reaches a pole at term " + std::to_string(i + 1));
            }
        }
        term *= ratio.value();
        if (term.is_zero()) break;
        terms.push_back(term);
    }
    return terms;
}

} // namespace

Rational pfq_terminating(const HyperParams& params, const std::vector<Rational>& extra_upper,
                         const Rational& z, unsigned max_terms) {
    Rational sum(0);
    for (const auto& t : pfq_terms(params, extra_upper, z, max_terms)) sum += t;
    return sum;
}

LaurentPoly pfq_inverse_power(const HyperParams& params, const std::vector<Rational>& extra_upper,
                              const Rational& scale, unsigned k, unsigned max_terms) {
    auto terms = pfq_terms(params, extra_upper, scale, max_terms);
    // Term i sits at x^{-k i}; lay the band out ascending from the last term.
    const std::size_t last = terms.size() - 1;
    std::vector<Rational> dense(k * last + 1);
    for (std::size_t i = 0; i <= last; ++i) dense[k * (last - i)] = std::move(terms[i]);
    return {-static_cast<long>(k * last), std::move(dense)};
}

LaurentPoly appell_poly(const FamilySpec& spec, unsigned n) {
    const unsigned k = spec.k();
    const Rational arg = series_argument(spec);
    // Ascending band from x^{n - k*floor(n/k)} in steps of k; each coefficient
    // is the previous one times (n-k(i-1))_k falling * gamma step * arg / i.
    std::vector<Rational> dense(n + 1);
    Rational c(1);
    dense[n] = c;
    for (unsigned i = 1; k * i <= n; ++i) {
        const long shift = static_cast<long>(i) - 1;
        TermRatio ratio;
        ratio.times(arg);
        for (unsigned d = k * (i - 1); d < k * i; ++d) ratio.times(static_cast<unsigned long>(n - d));
        ratio.over(static_cast<unsigned long>(i));
        for (const auto& a : spec.params().upper()) ratio.times(a, shift);
        for (const auto& b : spec.params().lower()) ratio.over(b, shift);
        c *= ratio.value();
        if (c.is_zero()) break;
        dense[n - k * i] = c;
    }
    return LaurentPoly::from_ascending(std::move(dense));
}

std::vector<LaurentPoly> appell_polys(const FamilySpec& spec, unsigned n_max) {
    std::vector<LaurentPoly> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(appell_poly(spec, n));
    return out;
}

LaurentPoly appell_laurent_form(const FamilySpec& spec, unsigned n) {
    const unsigned k = spec.k();
    DeltaArray delta = delta_array(k, n);
    LaurentPoly sum = pfq_inverse_power(spec.params(), delta.entries, spec.m(), k, n / k);
    return sum.shift_exponents(n);
}

TruncatedSeries generating_series(const FamilySpec& spec, unsigned order) {
    const unsigned k = spec.k();
    const Rational arg = series_argument(spec);
    std::vector<Rational> coeffs(order + 1);
    Rational term(1);
    coeffs[0] = term;
    for (unsigned r = 1; k * r <= order; ++r) {
        const long shift = static_cast<long>(r) - 1;
        TermRatio ratio;
        ratio.times(arg);
        ratio.over(static_cast<unsigned long>(r));
        for (const auto& a : spec.params().upper()) ratio.times(a, shift);
        for (const auto& b : spec.params().lower()) ratio.over(b, shift);
        term *= ratio.value();
        coeffs[k * r] = term;
    }
    return TruncatedSeries::from_scalars(coeffs);
}

std::vector<LaurentPoly> gf_coefficient_polys(const FamilySpec& spec, unsigned n_max) {
    TruncatedSeries product = generating_series(spec, n_max) * TruncatedSeries::exp_xt(n_max);
    std::vector<LaurentPoly> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(product.coeff(n) * factorial(n));
    return out;
}

LaurentPoly gf_coefficient_poly(const FamilySpec& spec, unsigned n) {
    TruncatedSeries product = generating_series(spec, n) * TruncatedSeries::exp_xt(n);
    return product.coeff(n) * factorial(n);
}

LaurentPoly apply_diff_operator(const FamilySpec& spec, unsigned n) {
    const unsigned k = spec.k();
    const Rational arg = series_argument(spec);
    LaurentPoly derived = LaurentPoly::monomial(Rational(1), n);
    LaurentPoly out = derived;
    // c_i = gamma^i arg^i / i!, built incrementally.
    Rational c(1);
    for (unsigned i = 1; k * i <= n; ++i) {
        for (unsigned d = 0; d < k; ++d) derived = derived.derivative();
        const long shift = static_cast<long>(i) - 1;
        TermRatio ratio;
        ratio.times(arg);
        ratio.over(static_cast<unsigned long>(i));
        for (const auto& a : spec.params().upper()) ratio.times(a, shift);
        for (const auto& b : spec.params().lower()) ratio.over(b, shift);
        c *= ratio.value();
        if (c.is_zero()) break;
        out += derived * c;
    }
    return out;
}

LaurentPoly composed_poly(const FamilySpec& spec, unsigned n, const LaurentPoly& f) {
    if (f.is_zero()) throw InvalidParameter("inner polynomial f must be nonzero");
    if (!f.is_ordinary()) throw ComposeWithLaurent();
    return appell_poly(spec, n).compose(f);
}

} // namespace hyperappell
