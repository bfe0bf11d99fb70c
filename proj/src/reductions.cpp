#include "hyperappell/reductions.hpp"

#include "hyperappell/errors.hpp"

namespace hyperappell {

LaurentPoly hermite_probabilists(unsigned n) {
    LaurentPoly prev(Rational(1));
    if (n == 0) return prev;
    LaurentPoly cur = LaurentPoly::x();
    for (unsigned j = 1; j < n; ++j) {
        LaurentPoly next = LaurentPoly::x() * cur - prev * Rational(static_cast<long>(j));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LaurentPoly gould_hopper(unsigned n, unsigned k, const Rational& h) {
    if (k == 0) throw InvalidParameter("order k must be at least 1");
    LaurentPoly out;
    const Rational n_fact = factorial(n);
    for (unsigned i = 0; k * i <= n; ++i) {
        Rational c = n_fact / (factorial(i) * factorial(n - k * i)) * h.pow(i);
        out += LaurentPoly::monomial(std::move(c), static_cast<long>(n - k * i));
    }
    return out;
}

FamilySpec reduce_spec(ReductionKind kind, unsigned k, const Rational& h) {
    switch (kind) {
    case ReductionKind::hermite:
        if (k != 2) throw BadReduction("the Hermite reduction requires k = 2, got k = " + std::to_string(k));
        return {HyperParams{}, 2, Rational(-2)};
    case ReductionKind::gould_hopper: {
        if (k == 0) throw BadReduction("the Gould-Hopper reduction requires k >= 1");
        long kk = k;
        Rational m = Rational(kk % 2 == 0 ? 1 : -1) * h * Rational(kk).pow(kk);
        return {HyperParams{}, k, m};
    }
    }
    throw BadReduction("unknown reduction");
}

} // namespace hyperappell
