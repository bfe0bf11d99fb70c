#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperappell/cli.hpp"
#include "hyperappell/format.hpp"
#include "test_support.hpp"

using namespace hyperappell;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_CASE("coeffs") {
    auto he3 = run({"coeffs", "--k", "2", "--m", "-2", "--n", "3"});
    CHECK(he3.code == 0);
    CHECK(he3.out ==
          "{\"family\":{\"a\":[],\"b\":[],\"k\":2,\"m\":\"-2\"},\"n\":3,\"min_exponent\":0,"
          "\"coeffs\":[\"0\",\"-3\",\"0\",\"1\"]}\n");

    auto low = run({"coeffs", "--k", "3", "--m", "5", "--n", "2"});
    CHECK(low.code == 0);
    CHECK(low.out ==
          "{\"family\":{\"a\":[],\"b\":[],\"k\":3,\"m\":\"5\"},\"n\":2,\"min_exponent\":0,"
          "\"coeffs\":[\"0\",\"0\",\"1\"]}\n");

    auto bad = run({"coeffs", "--k", "2", "--m", "-2", "--b", "-1", "--n", "2"});
    CHECK(bad.code == 3);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("--b") != std::string::npos);
    CHECK(bad.err.find("zero or a negative integer") != std::string::npos);
}

TEST_CASE("coeffs output formats") {
    CHECK(run({"coeffs", "--k", "2", "--m", "-2", "--n", "2", "--format", "latex"}).out == "x^{2} - 1\n");
    CHECK(run({"coeffs", "--k", "2", "--m", "-2", "--n", "2", "--format", "plain"}).out == "-1 * x^0 + 1 * x^2\n");
    CHECK(run({"coeffs", "--k", "2", "--m", "-2", "--n", "2", "--format", "csv"}).out ==
          "exponent,coefficient\n0,-1\n1,0\n2,1\n");
    CHECK(run({"coeffs", "--k", "2", "--m", "1/2", "--a", "1/2,3", "--b", "5/3", "--n", "2"}).out ==
          "{\"family\":{\"a\":[\"1/2\",\"3\"],\"b\":[\"5/3\"],\"k\":2,\"m\":\"1/2\"},\"n\":2,\"min_exponent\":0,"
          "\"coeffs\":[\"9/40\",\"0\",\"1\"]}\n");
}

TEST_CASE("usage errors name the flag") {
    auto m = run({"coeffs", "--k", "2", "--m", "abc", "--n", "2"});
    CHECK(m.code == 2);
    CHECK(m.err.find("--m") != std::string::npos);

    auto a = run({"coeffs", "--k", "2", "--m", "1", "--a", "1/0x", "--n", "2"});
    CHECK(a.code == 2);
    CHECK(a.err.find("--a") != std::string::npos);

    auto missing = run({"coeffs", "--k", "2", "--m", "1"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--n") != std::string::npos);

    auto k = run({"coeffs", "--k", "two", "--m", "1", "--n", "1"});
    CHECK(k.code == 2);
    CHECK(k.err.find("--k") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "nonsense", "--k", "2", "--m", "1", "--n", "1"}).code == 2);
    CHECK(run({"coeffs", "--k", "2", "--m", "1", "--n", "1", "--format", "pdf"}).code == 2);
}

TEST_CASE("domain errors") {
    CHECK(run({"coeffs", "--k", "0", "--m", "1", "--n", "1"}).code == 3);
    CHECK(run({"reduce", "hermite", "--k", "3"}).code == 3);
    CHECK(run({"coeffs", "--k", "2", "--m", "1", "--b", "0", "--n", "1"}).code == 3);
}

TEST_CASE("eval") {
    CHECK(run({"eval", "--k", "2", "--m", "-2", "--n", "4", "--x", "2"}).out == "-5\n");
    CHECK(run({"eval", "--k", "5", "--m", "9", "--n", "0", "--x", "7/3"}).out == "1\n");
    CHECK(run({"eval", "--k", "2", "--m", "0", "--n", "3", "--x", "1/2"}).out == "1/8\n");
}

TEST_CASE("verify") {
    auto appell = run({"verify", "appell", "--k", "2", "--m", "-2", "--n-max", "10"});
    CHECK(appell.code == 0);
    CHECK(count_lines(appell.out) == 10);
    CHECK(appell.out.rfind("appell n=1: holds\n", 0) == 0);

    auto conv = run({"verify", "convolution", "--k", "1", "--m", "1", "--n", "2"});
    CHECK(conv.code == 0);
    CHECK(conv.out == "convolution n=2: holds vs oracle; paper-RHS mismatch (4 vs 0)\n");

    auto empty = run({"verify", "appell", "--k", "2", "--m", "-2", "--n-max", "0"});
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());

    CHECK(run({"verify", "addition", "--k", "2", "--m", "-2", "--n-max", "3"}).out.size() > 0);
    CHECK(count_lines(run({"verify", "addition", "--k", "2", "--m", "-2", "--n-max", "3"}).out) == 4);
    CHECK(run({"verify", "multiplication", "--k", "2", "--m", "-2", "--n", "2", "--M", "2"}).out ==
          "multiplication n=2 M=2: holds; A_n(m,Mx) loses the Appell derivative property\n");
    CHECK(run({"verify", "multiplication", "--k", "2", "--m", "-2", "--n", "2"}).code == 2);
    CHECK(run({"verify", "interchange", "--k", "2", "--k2", "3", "--m", "-2", "--n", "5"}).code == 0);
    CHECK(run({"verify", "interchange", "--k", "2", "--m", "-2", "--n", "5"}).code == 2);
    CHECK(run({"verify", "composed", "--k", "2", "--m", "-2", "--n", "3", "--f", "1,0,1"}).code == 0);
    CHECK(run({"verify", "parity", "--k", "3", "--m", "1/2", "--a", "2", "--n-min", "2", "--n-max", "6"}).code ==
          0);
    CHECK(run({"verify", "corollary1", "--k", "2", "--m", "1", "--a", "2", "--b", "3", "--n", "5"}).code == 0);
    CHECK(run({"verify", "appell", "--k", "2", "--m", "-2", "--n", "0"}).code == 2);
    CHECK(run({"verify", "appell", "--k", "2", "--m", "-2"}).code == 2);
}

TEST_CASE("genfun, connect and reduce") {
    CHECK(run({"genfun", "--k", "2", "--m", "-2", "--order", "4"}).out == "[\"1\",\"0\",\"-1/2\",\"0\",\"1/8\"]\n");
    CHECK(run({"connect", "--k", "2", "--m", "-2", "--order", "4"}).out == "[\"1\",\"0\",\"-1/2\",\"0\",\"1/8\"]\n");
    CHECK(run({"connect", "--k", "2", "--m", "-2", "--order", "2", "--direction", "monomials-over-family"}).out ==
          "[\"1\",\"0\",\"1/2\"]\n");
    CHECK(run({"reduce", "gould-hopper", "--k", "3", "--h", "1"}).out == "{\"k\":3,\"m\":\"-27\",\"a\":[],\"b\":[]}\n");
    CHECK(run({"reduce", "hermite"}).out == "{\"k\":2,\"m\":\"-2\",\"a\":[],\"b\":[]}\n");
    CHECK(run({"reduce", "gould-hopper", "--k", "3"}).code == 2);
}

TEST_CASE("export and --out round trip") {
    auto dir = std::filesystem::temp_directory_path() / "hyperappell_cli_test";
    std::filesystem::create_directories(dir);
    auto json_path = (dir / "he2.json").string();

    auto written = run({"coeffs", "--k", "2", "--m", "-2", "--n", "2", "--out", json_path});
    CHECK(written.code == 0);
    CHECK(written.out.empty());

    std::ifstream in(json_path);
    std::stringstream text;
    text << in.rdbuf();
    PolyDocument doc = poly_document_from_json(text.str());
    CHECK(doc.poly == testing::poly({-1, 0, 1}));

    CHECK(run({"export", "--in", json_path, "--format", "latex"}).out == "x^{2} - 1\n");
    CHECK(run({"export", "--in", json_path}).out == text.str());
    CHECK(run({"export", "--k", "2", "--m", "-2", "--n", "2", "--format", "latex"}).out == "x^{2} - 1\n");
    CHECK(run({"export", "--in", (dir / "missing.json").string()}).code == 2);

    std::ofstream(dir / "bad.json") << "{\"n\":1}";
    CHECK(run({"export", "--in", (dir / "bad.json").string()}).code == 3);
    std::filesystem::remove_all(dir);
}
