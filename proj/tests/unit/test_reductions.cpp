#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperappell/errors.hpp"
#include "hyperappell/reductions.hpp"
#include "test_support.hpp"

using namespace hyperappell;
using testing::poly;
using testing::R;

TEST_CASE("Hermite recurrence") {
    CHECK(hermite_probabilists(0) == poly({1}));
    CHECK(hermite_probabilists(1) == poly({0, 1}));
    CHECK(hermite_probabilists(2) == poly({-1, 0, 1}));
    CHECK(hermite_probabilists(4) == poly({3, 0, -6, 0, 1}));
    CHECK(hermite_probabilists(4).eval(Rational(2)) == Rational(-5));
    for (unsigned n = 0; n <= 20; ++n) CHECK(hermite_probabilists(n) == testing::hermite_explicit(n));
}

TEST_CASE("Gould-Hopper closed form") {
    CHECK(gould_hopper(3, 3, Rational(1)) == poly({6, 0, 0, 1}));
    CHECK(gould_hopper(2, 3, R("-5/7")) == poly({0, 0, 1}));
    CHECK(gould_hopper(4, 2, R("-1/2")) == poly({3, 0, -6, 0, 1}));
    for (unsigned n = 0; n <= 20; ++n) CHECK(gould_hopper(n, 2, R("-1/2")) == hermite_probabilists(n));
}

TEST_CASE("reduction specs") {
    auto gh = reduce_spec(ReductionKind::gould_hopper, 3, Rational(1));
    CHECK(gh.m() == Rational(-27));
    CHECK(gh.k() == 3);
    CHECK(gh.params().upper().empty());
    CHECK(gh.params().lower().empty());

    auto he = reduce_spec(ReductionKind::hermite, 2, R("99"));
    CHECK(he.m() == Rational(-2));
    CHECK(he.k() == 2);

    CHECK(reduce_spec(ReductionKind::gould_hopper, 2, R("-1/2")) == he);
    CHECK_THROWS_AS(reduce_spec(ReductionKind::hermite, 3, Rational(0)), BadReduction);
}

TEST_CASE("family members reproduce the special cases") {
    auto he = reduce_spec(ReductionKind::hermite, 2, Rational(0));
    for (unsigned n = 0; n <= 20; ++n) CHECK(appell_poly(he, n) == hermite_probabilists(n));
    for (unsigned k = 1; k <= 4; ++k) {
        for (const char* h : {"1", "-1", "1/2"}) {
            auto s = reduce_spec(ReductionKind::gould_hopper, k, R(h));
            for (unsigned n = 0; n <= 20; ++n) CHECK(appell_poly(s, n) == gould_hopper(n, k, R(h)));
        }
    }
}
