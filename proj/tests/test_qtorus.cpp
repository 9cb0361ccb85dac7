#include "doctest.h"

#include <random>

#include "qclaw/errors.hpp"
#include "qclaw/qtorus.hpp"

using namespace qclaw;

namespace {

const IntMat kLambda{{0, -1}, {1, 0}};

QCoeff random_coeff(std::mt19937_64& rng) {
    QCoeff c;
    const int nterms = static_cast<int>(rng() % 3) + 1;
    for (int t = 0; t < nterms; ++t) {
        const long long a = static_cast<long long>(rng() % 7) - 3;
        const long long k = static_cast<long long>(rng() % 9) - 4;
        if (a != 0) c += QCoeff::term(Rational(a), k);
    }
    return c;
}

TorusElement random_element(std::mt19937_64& rng, const FramePtr& frame) {
    TorusElement x = TorusElement::zero(frame);
    const int nterms = static_cast<int>(rng() % 3) + 1;
    for (int t = 0; t < nterms; ++t) {
        ExponentVec e(frame->rank());
        for (auto& v : e) v = static_cast<long long>(rng() % 7) - 3;
        x += TorusElement::monomial(frame, std::move(e), random_coeff(rng));
    }
    return x;
}

FramePtr random_frame(std::mt19937_64& rng, int m) {
    IntMat lambda(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j) {
            lambda.at(i, j) = static_cast<long long>(rng() % 7) - 3;
            lambda.at(j, i) = -lambda.at(i, j);
        }
    }
    return make_frame(lambda);
}

}  // namespace

TEST_CASE("normalized monomial multiplication") {
    const ToricFrame frame(kLambda);
    auto [c, e] = monomial_mul(frame, {1, 0}, {0, 1});
    CHECK(c == QCoeff::q_power(-1));  // q^{-1/2}
    CHECK(e == ExponentVec{1, 1});
    auto [c2, e2] = monomial_mul(frame, {0, 1}, {1, 0});
    CHECK(c2 == QCoeff::q_power(1));
    CHECK(e2 == ExponentVec{1, 1});
    auto [c3, e3] = monomial_mul(frame, {2, -1}, {-2, 1});
    CHECK(c3 == QCoeff::one());
    CHECK(e3 == ExponentVec{0, 0});
}

TEST_CASE("element arithmetic") {
    const FramePtr frame = make_frame(kLambda);
    const TorusElement x1 = TorusElement::generator(frame, 0);
    const TorusElement x2 = TorusElement::generator(frame, 1);
    CHECK(TorusElement::monomial(frame, {1, 0}) * TorusElement::monomial(frame, {-1, 0}) ==
          TorusElement::one(frame));
    CHECK((x1 + x1.scalar_mul(QCoeff(Rational(-1)))).is_zero());
    // (M(e1)+M(e2)) M(e1) = M(2e1) + q^{1/2} M(e1+e2)
    const TorusElement prod = (x1 + x2) * x1;
    const TorusElement expect = TorusElement::monomial(frame, {2, 0}) +
                                TorusElement::monomial(frame, {1, 1}, QCoeff::q_power(1));
    CHECK(prod == expect);
}

TEST_CASE("ordered-product basis conversion") {
    // X_1^{a_1} X_2^{a_2} = M(a_1 e_1) M(a_2 e_2) = unit * M(a).
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const FramePtr frame = random_frame(rng, 3);
        ExponentVec a(3);
        for (auto& v : a) v = static_cast<long long>(rng() % 7) - 3;
        TorusElement ordered = TorusElement::one(frame);
        for (int i = 0; i < 3; ++i) {
            ExponentVec e(3, 0);
            e[i] = a[i];
            ordered = ordered * TorusElement::monomial(frame, std::move(e));
        }
        CHECK(ordered == TorusElement::monomial(frame, a, ordered_basis_unit(*frame, a)));
    }
}

TEST_CASE("exact one-sided division") {
    const FramePtr frame = make_frame(kLambda);
    const TorusElement x1 = TorusElement::generator(frame, 0);
    const TorusElement x2 = TorusElement::generator(frame, 1);
    const TorusElement g = x1 + x2;
    CHECK(g.left_divide_exact(g) == TorusElement::one(frame));
    // invert the elem_arith example
    const TorusElement y = TorusElement::monomial(frame, {2, 0}) +
                           TorusElement::monomial(frame, {1, 1}, QCoeff::q_power(1));
    CHECK(y.left_divide_exact(g) == x1);
    CHECK_THROWS_AS(x2.left_divide_exact(x1 + TorusElement::one(frame)), NotDivisibleError);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const FramePtr f = random_frame(rng, 3);
        TorusElement a = random_element(rng, f), b = random_element(rng, f);
        if (a.is_zero()) a = TorusElement::one(f);
        if (b.is_zero()) b = TorusElement::one(f);
        CHECK((a * b).left_divide_exact(a) == b);
        CHECK((a * b).right_divide_exact(b) == a);
    }
}

TEST_CASE("associativity of the normalized product") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const FramePtr f = random_frame(rng, 3);
        const TorusElement a = random_element(rng, f), b = random_element(rng, f),
                           c = random_element(rng, f);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("decomposition along a direction") {
    const FramePtr frame = make_frame(kLambda);
    const TorusElement x2 = TorusElement::generator(frame, 1);
    auto d0 = x2.decompose_along(0);
    REQUIRE(d0.parts.size() == 1);
    CHECK(d0.parts.at(0) == x2);

    const TorusElement x = TorusElement::monomial(frame, {1, 1}) +
                           TorusElement::monomial(frame, {2, 0});
    auto d = x.decompose_along(0);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts.at(1) == TorusElement::monomial(frame, {0, 1}, QCoeff::q_power(1)));
    CHECK(d.parts.at(2) == TorusElement::one(frame));
    CHECK(d.reassemble() == x);

    CHECK(TorusElement::zero(frame).decompose_along(0).parts.empty());

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const FramePtr f = random_frame(rng, 3);
        const TorusElement a = random_element(rng, f);
        for (int k = 0; k < 3; ++k) CHECK(a.decompose_along(k).reassemble() == a);
    }
}

TEST_CASE("specialization at q=1") {
    const FramePtr frame = make_frame(kLambda);
    CHECK(TorusElement::monomial(frame, {1, 0}, QCoeff::q_power(1)).specialize_q1() ==
          Laurent::variable(2, 0));
    const QCoeff q_minus_1 = QCoeff::q_power(2) - QCoeff::one();
    CHECK(TorusElement::monomial(frame, {0, 1}, q_minus_1).specialize_q1().is_zero());
    const TorusElement mut = TorusElement::monomial(frame, {-1, 1}) +
                             TorusElement::monomial(frame, {-1, 0});
    CHECK(mut.specialize_q1().to_string() == "x1^-1*x2 + x1^-1");

    // algebra homomorphism onto the commutative torus
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const FramePtr f = random_frame(rng, 3);
        const TorusElement a = random_element(rng, f), b = random_element(rng, f);
        CHECK((a * b).specialize_q1() == a.specialize_q1() * b.specialize_q1());
        CHECK((a + b).specialize_q1() == a.specialize_q1() + b.specialize_q1());
    }
}

TEST_CASE("p-divisibility") {
    const FramePtr frame = make_frame(kLambda);
    const QCoeff q_minus_1 = QCoeff::q_power(2) - QCoeff::one();
    const TorusElement x = TorusElement::monomial(frame, {1, 0}, q_minus_1) +
                           TorusElement::monomial(frame, {0, 1}, QCoeff::p());
    CHECK(x.p_valuation() == 1);
    CHECK(TorusElement::generator(frame, 0).p_valuation() == 0);
    CHECK(!TorusElement::zero(frame).p_valuation().has_value());

    // valuations add and the torus is a domain (a zero divisor would break this)
    std::mt19937_64 rng(41);
    long long divisible_products = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const FramePtr f = random_frame(rng, 3);
        TorusElement a = random_element(rng, f), b = random_element(rng, f);
        if (rng() % 2) a = a.scalar_mul(QCoeff::p());
        const auto va = a.p_valuation(), vb = b.p_valuation();
        const auto vab = (a * b).p_valuation();
        if (va && vb) {
            CHECK(vab == *va + *vb);
            if (*vab >= 1) {
                ++divisible_products;
                CHECK((*va >= 1 || *vb >= 1));
            }
        } else {
            CHECK(!vab.has_value());
        }
    }
    CHECK(divisible_products > 50);
}

TEST_CASE("canonical text form") {
    const FramePtr frame = make_frame(kLambda);
    const TorusElement x = TorusElement::monomial(frame, {-1, 1}) +
                           TorusElement::monomial(frame, {2, 0}, QCoeff::q_power(1));
    CHECK(x.to_string() == "(1) * M[-1,1] + (1*q^(1/2)) * M[2,0]");
}
