#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperappell/family.hpp"

namespace hyperappell {

/// One polynomial of a family as exchanged on disk:
/// {"family":{"a":[..],"b":[..],"k":int,"m":"p/q"},"n":int,"min_exponent":int,"coeffs":[..]}
/// Coefficients ascend from min_exponent, which is 0 for ordinary polynomials.
struct PolyDocument {
    FamilySpec family;
    unsigned n;
    LaurentPoly poly;
};

/// Comma-separated rational list; the empty string is the empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_json(const PolyDocument& doc);
PolyDocument poly_document_from_json(std::string_view text);

/// {"k":int,"m":"p/q","a":[..],"b":[..]}
std::string family_to_json(const FamilySpec& spec);
/// ["p/q",...]
std::string rational_list_to_json(const std::vector<Rational>& values);

/// Descending powers with explicit signs, e.g. "x^{2} - 1".
std::string to_latex(const LaurentPoly& p);
/// Header "exponent,coefficient" then one row per exponent of the serialized
/// band (from min(0, min_exponent) up to the degree).
std::string to_csv(const LaurentPoly& p);
/// "c_j * x^j" terms joined by " + ", ascending; "0" for the zero polynomial.
std::string to_plain(const LaurentPoly& p);

} // namespace hyperappell
