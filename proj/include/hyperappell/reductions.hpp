#pragma once

#include "hyperappell/family.hpp"

namespace hyperappell {

/// Probabilists' Hermite He_n from He_{n+1} = x He_n - n He_{n-1}. Does not
/// touch the family constructors.
LaurentPoly hermite_probabilists(unsigned n);

/// Gould-Hopper g_n(x, h) = sum_i n!/(i!(n-ki)!) h^i x^{n-ki}, the EGF
/// expansion of e^{xt + h t^k}.
LaurentPoly gould_hopper(unsigned n, unsigned k, const Rational& h);

enum class ReductionKind { hermite, gould_hopper };

/// p = q = 0 family reproducing the named special case. Hermite requires k = 2
/// and ignores h.
FamilySpec reduce_spec(ReductionKind kind, unsigned k, const Rational& h);

} // namespace hyperappell
