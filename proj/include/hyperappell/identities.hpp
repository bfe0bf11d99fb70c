#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperappell/family.hpp"

namespace hyperappell {

/// Grid checks carry the flattened sample values of both sides.
using Witness = std::variant<LaurentPoly, Rational, std::vector<Rational>>;

/// Verdict of one identity instance. `holds` is true iff the two witnesses
/// are structurally equal. `secondary` carries the extra verdict described in
/// `note` when an identity has one (closed-form agreement for the
/// convolution identity, Appell property of A_n(Mx) for multiplication).
struct IdentityReport {
    std::string identity_name;
    FamilySpec spec;
    unsigned n;
    std::string inputs; // extra indices, e.g. "M=2" or "k2=3"
    bool holds;
    Witness lhs_witness;
    Witness rhs_witness;
    std::string note;
    std::optional<bool> secondary;
};

/// A_n' = n A_{n-1}. Requires n >= 1.
IdentityReport check_appell_derivative(const FamilySpec& spec, unsigned n);

/// The hypergeometric identity obtained from A_n' = n A_{n-1}, with all
/// three pFq terms expanded as Laurent sums in x^{-k}. Requires n >= 1.
IdentityReport check_corollary1(const FamilySpec& spec, unsigned n);

/// A_n(x+y) = sum C(n,i) y^{n-i} A_i(x) = sum C(n,i) x^{n-i} A_i(y), certified
/// on x in {0..n}, y in {1..n+1}.
IdentityReport check_addition(const FamilySpec& spec, unsigned n);

/// A_n(Mx) = sum C(n,i) (M-1)^{n-i} x^{n-i} A_i(x), symbolically.
IdentityReport check_multiplication(const FamilySpec& spec, unsigned n, const Rational& M);

/// sum C(n,i) A_i^(k1)(x) A_{n-i}^(k2)(y) is symmetric in k1 <-> k2, certified
/// on the same (n+1) x (n+1) grid as the addition check.
IdentityReport check_index_interchange(const HyperParams& params, const Rational& m, unsigned k1, unsigned k2,
                                       unsigned n);

/// sum (-1)^i C(n,i) A_i A_{n-i} against n! [t^n] A(t) A(-t).
IdentityReport check_convolution(const FamilySpec& spec, unsigned n);

/// Closed-form right side of the convolution identity as printed; only
/// defined when k divides n.
std::optional<Rational> convolution_closed_form(const FamilySpec& spec, unsigned n);

/// Even k: A_n(m,-x) = (-1)^n A_n(m,x). Odd k: A_n(m,-x) = (-1)^n A_n(-m,x).
IdentityReport check_parity(const FamilySpec& spec, unsigned n);

/// d/dx A_n(f(x)) = n f'(x) A_{n-1}(f(x)). Requires n >= 1.
IdentityReport check_composed_derivative(const FamilySpec& spec, unsigned n, const LaurentPoly& f);

/// All four constructors agree: standard basis, Laurent pFq form,
/// generating-function product and differential operator.
IdentityReport check_representations(const FamilySpec& spec, unsigned n);

enum class ConnectionDirection { family_over_monomials, monomials_over_family };

/// alpha_0..alpha_N of the generating-function ratio. family_over_monomials
/// uses A(t) itself, monomials_over_family its reciprocal.
std::vector<Rational> connection_coefficients(const FamilySpec& spec, unsigned N, ConnectionDirection direction);

/// Q_n = sum_j n!/j! alpha_{n-j} P_j, with (Q, P) = (A, x^j) or (x^n, A_j).
/// `alphas` must hold at least n + 1 entries.
LaurentPoly connection_reconstruct(const FamilySpec& spec, const std::vector<Rational>& alphas,
                                   ConnectionDirection direction, unsigned n);

/// The reconstruction above compared with its target (A_n or x^n).
IdentityReport check_connection(const FamilySpec& spec, unsigned n, ConnectionDirection direction);

} // namespace hyperappell
