#include "doctest.h"

#include <random>

#include "qclaw/errors.hpp"
#include "qclaw/seedcore.hpp"

using namespace qclaw;

namespace {

CompatiblePair rank1_frozen() {
    return check_compatible(IntMat{{0, -1}, {1, 0}}, IntMat{{0}, {1}});
}

CompatiblePair a2() {
    return check_compatible(IntMat{{0, 1}, {-1, 0}}, IntMat{{0, 1}, {-1, 0}});
}

CompatiblePair a2_principal() {
    return check_compatible(
        IntMat{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 1, 0}},
        IntMat{{0, 1}, {-1, 0}, {1, 0}, {0, 1}});
}

CompatiblePair a3_principal() {
    return check_compatible(
        IntMat{{0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1},
               {1, 0, 0, 0, -1, 0}, {0, 1, 0, 1, 0, -1}, {0, 0, 1, 0, 1, 0}},
        IntMat{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

std::vector<CompatiblePair> bundled() {
    return {rank1_frozen(), a2(), a2_principal(), a3_principal()};
}

}  // namespace

TEST_CASE("compatibility validation") {
    CHECK(rank1_frozen().d == std::vector<long long>{1});
    CHECK(a2().d == std::vector<long long>{1, 1});
    CHECK_THROWS_AS(check_compatible(IntMat{{0, 0}, {0, 0}}, IntMat{{0}, {1}}),
                    NotCompatibleError);
    CHECK_THROWS_AS(check_compatible(IntMat{{0, 1}, {1, 0}}, IntMat{{0}, {1}}),
                    NotSkewSymmetricError);
    CHECK_THROWS_AS(check_compatible(IntMat{{0, -1}, {1, 0}}, IntMat{{1}, {0}}),
                    NotSkewSymmetrizableError);
}

TEST_CASE("matrix mutation") {
    CHECK(mutate_matrix(IntMat{{0, 2}, {-2, 0}}, 0) == IntMat{{0, -2}, {2, 0}});
    CHECK(mutate_matrix(IntMat{{0}, {1}}, 0) == IntMat{{0}, {-1}});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat b(3, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) b.at(i, j) = static_cast<long long>(rng() % 7) - 3;
        b.at(0, 0) = b.at(1, 1) = 0;
        for (int k = 0; k < 2; ++k) CHECK(mutate_matrix(mutate_matrix(b, k), k) == b);
    }
}

TEST_CASE("pair mutation") {
    const CompatiblePair p1 = mutate_pair(rank1_frozen(), 0);
    CHECK(p1.lambda == IntMat{{0, 1}, {-1, 0}});
    CHECK(p1.b_tilde == IntMat{{0}, {-1}});
    CHECK(p1.d == std::vector<long long>{1});

    const CompatiblePair p2 = mutate_pair(a2(), 0);
    CHECK(p2.lambda == IntMat{{0, -1}, {1, 0}});
    CHECK(p2.b_tilde == IntMat{{0, -1}, {1, 0}});

    for (const CompatiblePair& pair : bundled()) {
        for (int k = 0; k < pair.n_ex; ++k) {
            const CompatiblePair back = mutate_pair(mutate_pair(pair, k), k);
            CHECK(back.lambda == pair.lambda);
            CHECK(back.b_tilde == pair.b_tilde);
            CHECK(back.d == pair.d);
        }
    }
}

TEST_CASE("exchange binomial") {
    const ExchangeBinomial b1 = exchange_binomial(rank1_frozen(), 0);
    CHECK(b1.b_plus == ExponentVec{0, 1});
    CHECK(b1.b_minus == ExponentVec{0, 0});
    CHECK(b1.m_plus == -1);
    CHECK(b1.m_minus == 0);
    CHECK(!b1.degenerate);

    const ExchangeBinomial b2 = exchange_binomial(a2(), 0);
    CHECK(b2.b_plus == ExponentVec{0, 0});
    CHECK(b2.b_minus == ExponentVec{0, 1});
    CHECK(b2.m_plus == 0);
    CHECK(b2.m_minus == 1);
}

TEST_CASE("quantum seed mutation") {
    const CompatiblePair pair = rank1_frozen();
    QuantumSeed seed = QuantumSeed::initial(pair);
    const QuantumSeed next = mutate_quantum_seed(seed, 0);
    const TorusElement expect = TorusElement::monomial(seed.frame, {-1, 1}) +
                                TorusElement::monomial(seed.frame, {-1, 0});
    CHECK(next.vars[0] == TorusElement::reinterpret(seed.frame, next.vars[0]));
    CHECK(next.vars[0].terms() == expect.terms());
    CHECK(next.vars[1].terms() == TorusElement::generator(seed.frame, 1).terms());

    const QuantumSeed a2next = mutate_quantum_seed(QuantumSeed::initial(a2()), 0);
    const FramePtr f = a2next.initial_frame;
    CHECK(a2next.vars[0].terms() ==
          (TorusElement::monomial(f, {-1, 0}) + TorusElement::monomial(f, {-1, 1})).terms());

    // involutivity, including the frame and pair data
    for (const CompatiblePair& p : bundled()) {
        const QuantumSeed init = QuantumSeed::initial(p);
        for (int k = 0; k < p.n_ex; ++k) {
            const QuantumSeed back = mutate_quantum_seed(mutate_quantum_seed(init, k), k);
            CHECK(back.pair.lambda == p.lambda);
            CHECK(back.pair.b_tilde == p.b_tilde);
            for (int i = 0; i < p.m; ++i) CHECK(back.vars[i].terms() == init.vars[i].terms());
        }
    }
}

TEST_CASE("classical seed mutation") {
    ClassicalSeed seed = ClassicalSeed::initial(IntMat{{0}, {1}});
    seed = mutate_classical_seed(seed, 0);
    CHECK(seed.vars[0].to_string() == "x1^-1*x2 + x1^-1");

    // A2 recursion by hand: after mu1 then mu2 the new variables are
    // (x2+1)/x1 and (x1+x2+1)/(x1 x2).
    ClassicalSeed s = ClassicalSeed::initial(IntMat{{0, 1}, {-1, 0}});
    s = mutate_classical_seed(s, 0);
    CHECK(s.vars[0].to_string() == "x1^-1*x2 + x1^-1");
    s = mutate_classical_seed(s, 1);
    CHECK(s.vars[1].to_string() == "x2^-1 + x1^-1 + x1^-1*x2^-1");

    std::mt19937_64 rng(9);
    for (const CompatiblePair& p : bundled()) {
        const ClassicalSeed init = ClassicalSeed::initial(p.b_tilde);
        for (int k = 0; k < p.n_ex; ++k) {
            const ClassicalSeed back = mutate_classical_seed(mutate_classical_seed(init, k), k);
            CHECK(back.vars == init.vars);
            CHECK(back.b_tilde == init.b_tilde);
        }
    }
}

TEST_CASE("specialization commutes with mutation on random paths") {
    std::mt19937_64 rng(77);
    for (const CompatiblePair& p : bundled()) {
        for (int trial = 0; trial < 5; ++trial) {
            QuantumSeed qs = QuantumSeed::initial(p);
            ClassicalSeed cs = ClassicalSeed::initial(p.b_tilde);
            for (int step = 0; step < 5; ++step) {
                const int k = static_cast<int>(rng() % p.n_ex);
                qs = mutate_quantum_seed(qs, k);
                cs = mutate_classical_seed(cs, k);
                for (int i = 0; i < p.m; ++i) CHECK(qs.vars[i].specialize_q1() == cs.vars[i]);
            }
        }
    }
}

TEST_CASE("exchange graph enumeration") {
    const ExchangeGraph pentagon = enumerate_exchange_graph(a2(), 8);
    CHECK(pentagon.clusters.size() == 5);
    CHECK(pentagon.variable_keys.size() == 5);
    CHECK(pentagon.closed);

    const ExchangeGraph rank1 = enumerate_exchange_graph(rank1_frozen(), 4);
    CHECK(rank1.clusters.size() == 2);
    CHECK(rank1.closed);

    CHECK(enumerate_exchange_graph(a2(), 0).clusters.size() == 1);

    // A2 with principal coefficients also closes at 5 clusters.
    const ExchangeGraph principal = enumerate_exchange_graph(a2_principal(), 8);
    CHECK(principal.clusters.size() == 5);
    CHECK(principal.closed);

    // A3 closes at 14 clusters with 9 non-frozen variables.
    const ExchangeGraph a3 = enumerate_exchange_graph(a3_principal(), 10);
    CHECK(a3.clusters.size() == 14);
    CHECK(a3.variable_keys.size() == 9);
    CHECK(a3.closed);

    // truncation is reported
    CHECK(!enumerate_exchange_graph(a3_principal(), 2).closed);
}
