#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "oracles.hpp"
#include "slicekit/cli.hpp"
#include "slicekit/io.hpp"

using namespace slicekit;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("slicekit_test_") + name;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("slice function file round trip") {
    auto d = make_domain(6, 3);
    SliceFunction f = oracles::random_function(d, 1300);
    std::string doc = slice_function_to_json(f);
    SliceFunction back = slice_function_from_json(doc);
    CHECK(back == f);
    CHECK(slice_function_to_json(back) == doc);
    CHECK_THROWS(slice_function_from_json("{\"kind\":\"cube\",\"n\":2,\"values\":[]}"));
}

TEST_CASE("cube function file round trip") {
    CubeFunction f = parse_cube_function_spec("random-rat:7", 4);
    std::string doc = cube_function_to_json(f);
    CHECK(cube_function_from_json(doc) == f);
}

TEST_CASE("derivative assignment round trip") {
    DerivativeAssignment z;
    z.level = 2;
    for (const auto& P : enumerate_shifted_sorted(6, 2))
        z.entries[P] = make_rat(3, 4);
    std::string text = derivative_assignment_to_text(z);
    auto back = parse_derivative_assignment(text, 6);
    CHECK(back.level == 2);
    CHECK(back.entries == z.entries);

    DerivativeAssignment z0;
    z0.level = 0;
    z0.entries[KTuple()] = make_rat(-5, 1);
    auto b0 = parse_derivative_assignment(derivative_assignment_to_text(z0), 6);
    CHECK(b0.entries == z0.entries);
    CHECK_THROWS(parse_derivative_assignment("(1,2) := 1/2\n", 6));  // no header
}

TEST_CASE("function spec parsing") {
    auto d31 = make_domain(3, 1);
    SliceFunction dict = parse_slice_function_spec("dictator:1", d31);
    CHECK(dict.values == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});

    auto d42 = make_domain(4, 2);
    SliceFunction a = parse_slice_function_spec("and:1,2", d42);
    for (std::size_t i = 0; i < d42->size(); ++i)
        CHECK(a.values[i] == (d42->element(i) == 0b0011 ? 1 : 0));

    CHECK(parse_slice_function_spec("const:7/3", d42) == constant(d42, make_rat(7, 3)));
    CHECK(parse_slice_function_spec("psi:(1,2)", d42) ==
          psi_function(d42, KTuple({{1, 2}})));
    CHECK(parse_slice_function_spec("chi:2", d42) == chi_function(d42, {2}));
    CHECK(parse_slice_function_spec("random-rat:5", d42) ==
          parse_slice_function_spec("random-rat:5", d42));
    CHECK(parse_slice_function_spec("random-bool:5", d42) !=
          parse_slice_function_spec("random-bool:6", d42));
    CHECK_THROWS(parse_slice_function_spec("dictator:9", d42));
    CHECK_THROWS(parse_slice_function_spec("nonsense:1", d42));

    CubeFunction par = parse_cube_function_spec("parity:1,2", 3);
    CHECK(par.values[0b00] == 1);
    CHECK(par.values[0b01] == -1);
    CHECK(par.values[0b11] == 1);
}

TEST_CASE("cli examples") {
    auto approx = run_cli({"approximate", "--n", "6", "--ell", "3", "--k", "1",
                           "--f", "dictator:1"});
    CHECK(approx.code == 0);
    CHECK(approx.out.find("distance: 0 (~0)") != std::string::npos);

    auto shift = run_cli({"shift", "--n", "8", "--tuple", "(2,8)(6,7)"});
    CHECK(shift.code == 0);
    CHECK(shift.out.find("m=33") != std::string::npos);
    CHECK(shift.out.find("D_(2,6)(7,8)") != std::string::npos);
    CHECK(shift.out.find("D_(2,7)(6,8)") != std::string::npos);

    auto verify = run_cli({"verify", "--suite", "identities", "--n", "6", "--ell", "3"});
    CHECK(verify.code == 0);

    auto tail = run_cli({"tail", "--n", "4", "--ell", "2", "--s", "2", "--t", "1.4142135623730951"});
    CHECK(tail.code == 0);
    CHECK(tail.out.find("exact_tail: 1/6") != std::string::npos);
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"approximate", "--n", "6"}).code == 2);
    CHECK(run_cli({"derive", "--n", "6", "--ell", "3", "--f", "dictator:1",
                   "--tuple", "(1,1)"}).code == 2);
    CHECK(run_cli({"verify", "--suite", "unknown", "--n", "5", "--ell", "2"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("cli determinism") {
    std::vector<std::string> args = {"spectrum", "--n", "6", "--ell", "3",
                                     "--f", "random-rat:42"};
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("cli file round trip") {
    std::string path = temp_path("roundtrip.json");
    auto write = run_cli({"derive", "--n", "6", "--ell", "3", "--f", "random-rat:9",
                          "--tuple", "(1,2)", "--out", path});
    REQUIRE(write.code == 0);
    SliceFunction expected =
        derivative(oracles::random_function(make_domain(6, 3), 9), KTuple({{1, 2}}));
    SliceFunction read = slice_function_from_json(read_text_file(path));
    CHECK(read == expected);
    std::remove(path.c_str());
}
