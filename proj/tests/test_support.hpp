#pragma once

// Test-only helpers and independent oracles. Nothing here may call the
// family constructors it is used to check.

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "hyperappell/family.hpp"
#include "hyperappell/laurent_poly.hpp"
#include "hyperappell/rational.hpp"

namespace testing {

using hyperappell::FamilySpec;
using hyperappell::HyperParams;
using hyperappell::LaurentPoly;
using hyperappell::Rational;

inline Rational R(const char* text) { return Rational::parse(text); }

/// Ordinary polynomial from ascending integer coefficients.
inline LaurentPoly poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c(ascending.begin(), ascending.end());
    return LaurentPoly::from_ascending(std::move(c));
}

inline std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
    std::vector<Rational> out;
    for (const char* t : texts) out.push_back(R(t));
    return out;
}

inline FamilySpec spec(unsigned k, const char* m, std::initializer_list<const char*> a = {},
                       std::initializer_list<const char*> b = {}) {
    return {HyperParams(rationals(a), rationals(b)), k, R(m)};
}

/// Deterministic generator of small rationals and polynomials.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long span = 9, long max_den = 6) { return {integer(-span, span), integer(1, max_den)}; }

    LaurentPoly laurent(long min_exp_lo, long min_exp_hi, unsigned max_len) {
        long lo = integer(min_exp_lo, min_exp_hi);
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_len)));
        for (auto& v : c) v = rational();
        return {lo, std::move(c)};
    }

    LaurentPoly ordinary(unsigned max_len) { return laurent(0, 0, max_len); }

private:
    std::mt19937 rng_;
};

/// Product of Pochhammer symbols straight from the definition, no recurrences.
inline Rational pochhammer_direct(const Rational& x, unsigned n) {
    Rational out(1);
    for (unsigned j = 0; j < n; ++j) out *= x + Rational(static_cast<long>(j));
    return out;
}

inline Rational factorial_direct(unsigned n) {
    Rational out(1);
    for (unsigned j = 2; j <= n; ++j) out *= Rational(static_cast<long>(j));
    return out;
}

/// n! [t^n] of A(t) e^{xt}, with A(t) = sum_r gamma^(r) ((-1)^k m t^k / k^k)^r / r!
/// expanded from the pFq definition and the Cauchy product written out by
/// hand: the coefficient of x^s is [t^{n-s}]A(t) * n!/s!.
inline LaurentPoly egf_oracle(const FamilySpec& s, unsigned n) {
    const long k = s.k();
    std::vector<Rational> dense(n + 1);
    for (unsigned r = 0; static_cast<long>(r) * k <= static_cast<long>(n); ++r) {
        Rational gamma(1);
        for (const auto& a : s.params().upper()) gamma *= pochhammer_direct(a, r);
        for (const auto& b : s.params().lower()) gamma /= pochhammer_direct(b, r);
        Rational z = Rational(k % 2 == 0 ? 1 : -1) * s.m();
        Rational kk(1);
        for (long j = 0; j < k; ++j) kk *= Rational(k);
        Rational term = gamma / factorial_direct(r);
        for (unsigned j = 0; j < r; ++j) term *= z / kk;
        unsigned power = static_cast<unsigned>(k) * r;
        unsigned xs = n - power;
        dense[xs] = term * factorial_direct(n) / factorial_direct(xs);
    }
    return LaurentPoly::from_ascending(std::move(dense));
}

/// Probabilists' Hermite coefficients from the explicit sum
/// He_n = sum_j (-1)^j n! / (j! (n-2j)! 2^j) x^{n-2j}.
inline LaurentPoly hermite_explicit(unsigned n) {
    std::vector<Rational> dense(n + 1);
    for (unsigned j = 0; 2 * j <= n; ++j) {
        Rational c = factorial_direct(n) / (factorial_direct(j) * factorial_direct(n - 2 * j));
        for (unsigned t = 0; t < j; ++t) c *= Rational(-1, 2);
        dense[n - 2 * j] = c;
    }
    return LaurentPoly::from_ascending(std::move(dense));
}

/// A compact lattice of families covering p, q in {0,1,2}, each k and m.
inline std::vector<FamilySpec> small_lattice(std::vector<unsigned> ks = {1, 2, 3, 4}) {
    const std::vector<std::vector<Rational>> uppers{{}, {R("1/2")}, {R("2"), R("5/3")}};
    const std::vector<std::vector<Rational>> lowers{{}, {R("7")}, {R("1"), R("5/3")}};
    const std::vector<Rational> ms{R("-2"), R("-1/2"), R("1"), R("3")};
    std::vector<FamilySpec> out;
    for (const auto& a : uppers)
        for (const auto& b : lowers)
            for (unsigned k : ks)
                for (const auto& m : ms) out.emplace_back(HyperParams(a, b), k, m);
    return out;
}

} // namespace testing
