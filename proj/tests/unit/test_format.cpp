#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperappell/errors.hpp"
#include "hyperappell/format.hpp"
#include "test_support.hpp"

using namespace hyperappell;
using testing::poly;
using testing::R;
using testing::rationals;
using testing::spec;

TEST_CASE("rational lists") {
    CHECK(parse_rational_list("").empty());
    CHECK(parse_rational_list("1/2,3") == rationals({"1/2", "3"}));
    CHECK(parse_rational_list("-4/6") == rationals({"-2/3"}));
    CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_rational_list("1,"), ParseError);
}

TEST_CASE("JSON document layout") {
    PolyDocument doc{spec(2, "-2"), 3, poly({0, -3, 0, 1})};
    CHECK(to_json(doc) ==
          R"({"family":{"a":[],"b":[],"k":2,"m":"-2"},"n":3,"min_exponent":0,"coeffs":["0","-3","0","1"]})");

    PolyDocument laurent{spec(3, "5/3", {"1/2", "7"}, {"2"}), 4,
                         LaurentPoly(-2, rationals({"-3/4", "0", "1"}))};
    CHECK(to_json(laurent) ==
          R"({"family":{"a":["1/2","7"],"b":["2"],"k":3,"m":"5/3"},"n":4,"min_exponent":-2,"coeffs":["-3/4","0","1"]})");
    CHECK(family_to_json(spec(3, "-27")) == R"({"k":3,"m":"-27","a":[],"b":[]})");
}

TEST_CASE("JSON round trip is bit-exact") {
    testing::Gen gen(2024);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = spec(static_cast<unsigned>(gen.integer(1, 4)), "3/7", {"-1/2"}, {"5/3"});
        PolyDocument doc{s, static_cast<unsigned>(gen.integer(0, 9)), gen.laurent(-4, 4, 7)};
        std::string text = to_json(doc);
        PolyDocument back = poly_document_from_json(text);
        CHECK(back.poly == doc.poly);
        CHECK(back.family == doc.family);
        CHECK(back.n == doc.n);
        CHECK(to_json(back) == text);
    }
}

TEST_CASE("JSON schema violations") {
    CHECK_THROWS_AS(poly_document_from_json("{"), ParseError);
    CHECK_THROWS_AS(poly_document_from_json(R"({"n":1})"), ParseError);
    CHECK_THROWS_AS(
        poly_document_from_json(R"({"family":{"a":[],"b":[],"k":0,"m":"1"},"n":1,"min_exponent":0,"coeffs":[]})"),
        ParseError);
    CHECK_THROWS_AS(
        poly_document_from_json(R"({"family":{"a":[],"b":[],"k":2,"m":1},"n":1,"min_exponent":0,"coeffs":[]})"),
        ParseError);
    CHECK_THROWS_AS(
        poly_document_from_json(R"({"family":{"a":[],"b":[],"k":2,"m":"1"},"n":1,"min_exponent":0,"coeffs":[2]})"),
        ParseError);
    CHECK_THROWS_AS(
        poly_document_from_json(R"({"family":{"a":[],"b":["-2"],"k":2,"m":"1"},"n":1,"min_exponent":0,"coeffs":[]})"),
        InvalidParameter);
}

TEST_CASE("LaTeX rendering") {
    CHECK(to_latex(poly({-1, 0, 1})) == "x^{2} - 1");
    CHECK(to_latex(poly({0, -3, 0, 1})) == "x^{3} - 3x");
    CHECK(to_latex(LaurentPoly()) == "0");
    CHECK(to_latex(poly({-7})) == "-7");
    CHECK(to_latex(LaurentPoly(-2, rationals({"1/2", "0", "-1", "-3/4"}))) ==
          "-\\frac{3}{4}x - 1 + \\frac{1}{2}x^{-2}");
}

TEST_CASE("CSV and plain rendering") {
    CHECK(to_csv(poly({-1, 0, 1})) == "exponent,coefficient\n0,-1\n1,0\n2,1\n");
    CHECK(to_csv(LaurentPoly()) == "exponent,coefficient\n");
    CHECK(to_plain(poly({0, -3, 0, 1})) == "-3 * x^1 + 1 * x^3");
    CHECK(to_plain(LaurentPoly()) == "0");
}
