#include "doctest.h"

#include "qclaw/errors.hpp"
#include "qclaw/seedio.hpp"

using namespace qclaw;

TEST_CASE("seed file parsing") {
    const std::string text = R"({
      "m": 2, "n_ex": 1,
      "lambda": [[0, -1], [1, 0]],
      "b_tilde": [[0], [1]],
      "names": ["a", "b"],
      "grading": [1, 0],
      "description": "smallest pair with a frozen variable"
    })";
    const SeedFile seed = parse_seed_json(text);
    CHECK(seed.pair.m == 2);
    CHECK(seed.pair.n_ex == 1);
    CHECK(seed.pair.d == std::vector<long long>{1});
    CHECK(seed.names == std::vector<std::string>{"a", "b"});
    REQUIRE(seed.grading.has_value());
    CHECK(*seed.grading == GradingVector{1, 0});
    CHECK(seed.description == "smallest pair with a frozen variable");
}

TEST_CASE("located parse errors") {
    CHECK_THROWS_AS(parse_seed_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_seed_json(R"({"m": 2, "n_ex": 1, "b_tilde": [[0],[1]]})"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_seed_json(
            R"({"m": 2, "n_ex": 1, "lambda": [[0,-1],[1,"x"]], "b_tilde": [[0],[1]]})"),
        "field 'lambda', entry (2,2) is not an integer", ParseError);
    // invalid pairs surface the library's located validation errors
    CHECK_THROWS_AS(
        parse_seed_json(R"({"m": 2, "n_ex": 1, "lambda": [[0,1],[1,0]], "b_tilde": [[0],[1]]})"),
        NotSkewSymmetricError);
    CHECK_THROWS_AS(
        parse_seed_json(
            R"({"m": 2, "n_ex": 1, "lambda": [[0,-1],[1,0]], "b_tilde": [[0],[1]], "grading": [0,1]})"),
        NotInLatticeError);
}

TEST_CASE("serialization round trip") {
    const std::string text =
        R"({"m": 2, "n_ex": 2, "lambda": [[0,1],[-1,0]], "b_tilde": [[0,1],[-1,0]]})";
    const SeedFile seed = parse_seed_json(text);
    const SeedFile again = parse_seed_json(seed_to_json(seed));
    CHECK(again.pair.lambda == seed.pair.lambda);
    CHECK(again.pair.b_tilde == seed.pair.b_tilde);
    CHECK(seed_to_json(again) == seed_to_json(seed));
}
