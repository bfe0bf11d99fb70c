#include "hyperappell/format.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hyperappell/errors.hpp"

namespace hyperappell {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rationals_json(std::span<const Rational> values) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

std::vector<Rational> rationals_from_json(const ordered_json& arr, const char* field) {
    if (!arr.is_array()) throw ParseError(std::string("field '") + field + "' must be an array of rational strings");
    std::vector<Rational> out;
    for (const auto& v : arr) {
        if (!v.is_string()) throw ParseError(std::string("field '") + field + "' must hold rational strings");
        out.push_back(Rational::parse(v.get<std::string>()));
    }
    return out;
}

const ordered_json& require(const ordered_json& obj, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end()) throw ParseError(std::string("missing field '") + field + "'");
    return *it;
}

long require_integer(const ordered_json& obj, const char* field, long min_value) {
    const auto& v = require(obj, field);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
    long value = v.get<long>();
    if (value < min_value) {
        throw ParseError(std::string("field '") + field + "' must be at least " + std::to_string(min_value));
    }
    return value;
}

// Serialized band: ordinary polynomials are written densely from x^0, Laurent
// ones from their lowest exponent.
long band_start(const LaurentPoly& p) { return p.is_zero() ? 0 : std::min<long>(0, p.min_exponent()); }

std::vector<Rational> band(const LaurentPoly& p) {
    std::vector<Rational> out;
    if (p.is_zero()) return out;
    for (long e = band_start(p); e <= p.degree(); ++e) out.push_back(p.coeff(e));
    return out;
}

std::string latex_number(const Rational& r) {
    if (r.is_integer()) return r.str();
    return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

} // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_json(const PolyDocument& doc) {
    ordered_json family;
    family["a"] = rationals_json(doc.family.params().upper());
    family["b"] = rationals_json(doc.family.params().lower());
    family["k"] = doc.family.k();
    family["m"] = doc.family.m().str();
    ordered_json j;
    j["family"] = std::move(family);
    j["n"] = doc.n;
    j["min_exponent"] = band_start(doc.poly);
    j["coeffs"] = rationals_json(band(doc.poly));
    return j.dump();
}

PolyDocument poly_document_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        const auto& family = require(j, "family");
        HyperParams params(rationals_from_json(require(family, "a"), "a"), rationals_from_json(require(family, "b"), "b"));
        const auto& m = require(family, "m");
        if (!m.is_string()) throw ParseError("field 'm' must be a rational string");
        FamilySpec spec(std::move(params), static_cast<unsigned>(require_integer(family, "k", 1)), Rational::parse(m.get<std::string>()));
        LaurentPoly poly(require_integer(j, "min_exponent", std::numeric_limits<long>::min()), rationals_from_json(require(j, "coeffs"), "coeffs"));
        return {std::move(spec), static_cast<unsigned>(require_integer(j, "n", 0)), std::move(poly)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("schema violation: ") + e.what());
    }
}

std::string family_to_json(const FamilySpec& spec) {
    ordered_json j;
    j["k"] = spec.k();
    j["m"] = spec.m().str();
    j["a"] = rationals_json(spec.params().upper());
    j["b"] = rationals_json(spec.params().lower());
    return j.dump();
}

std::string rational_list_to_json(const std::vector<Rational>& values) { return rationals_json(values).dump(); }

std::string to_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    auto coeffs = p.coeffs();
    for (long e = p.degree(); e >= p.min_exponent(); --e) {
        const Rational& c = coeffs[static_cast<std::size_t>(e - p.min_exponent())];
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = negative ? -c : c;
        if (e == 0) {
            out += latex_number(mag);
            continue;
        }
        if (mag != Rational(1)) out += latex_number(mag);
        out += e == 1 ? std::string("x") : "x^{" + std::to_string(e) + "}";
    }
    return out;
}

std::string to_csv(const LaurentPoly& p) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    long e = band_start(p);
    for (const auto& c : band(p)) os << e++ << ',' << c << '\n';
    return os.str();
}

std::string to_plain(const LaurentPoly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

} // namespace hyperappell
