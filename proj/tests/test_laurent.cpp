#include "doctest.h"

#include <random>

#include "qclaw/laurent.hpp"

using namespace qclaw;

namespace {

Laurent random_laurent(std::mt19937_64& rng, int nvars) {
    Laurent x(nvars);
    const int nterms = static_cast<int>(rng() % 3) + 1;
    for (int t = 0; t < nterms; ++t) {
        ExponentVec e(nvars);
        for (auto& v : e) v = static_cast<long long>(rng() % 7) - 3;
        const long long c = static_cast<long long>(rng() % 9) - 4;
        if (c != 0) x += Laurent::monomial(std::move(e), Rational(c));
    }
    return x;
}

}  // namespace

TEST_CASE("arithmetic and canonical form") {
    const Laurent x1 = Laurent::variable(2, 0);
    const Laurent x2 = Laurent::variable(2, 1);
    CHECK((x1 * x2) == (x2 * x1));
    CHECK((x1 - x1).is_zero());
    const Laurent inv = Laurent::monomial({-1, 0}, Rational(1));
    CHECK(inv * x1 == Laurent::one(2));
    // Golden form: descending lex, unit coefficients and exponents suppressed.
    CHECK((inv * x2 + inv).to_string() == "x1^-1*x2 + x1^-1");
    CHECK((x1 + x2).to_string() == "x1 + x2");
    CHECK(Laurent::zero(2).to_string() == "0");
    CHECK((inv * x2 + inv).to_string({"u", "v"}) == "u^-1*v + u^-1");
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Laurent a = random_laurent(rng, 3);
        Laurent b = random_laurent(rng, 3);
        if (b.is_zero()) b = Laurent::one(3);
        const auto quot = (a * b).divide_exact(b);
        REQUIRE(quot.has_value());
        CHECK(*quot == a);
    }
    // x2 is not divisible by x1 + 1
    const Laurent g = Laurent::variable(2, 0) + Laurent::one(2);
    CHECK(!Laurent::variable(2, 1).divide_exact(g).has_value());
}

TEST_CASE("powers") {
    const Laurent x = Laurent::variable(1, 0) + Laurent::one(1);
    CHECK(x.pow(0) == Laurent::one(1));
    CHECK(x.pow(2) == x * x);
    CHECK(x.pow(3) == x * x * x);
}
