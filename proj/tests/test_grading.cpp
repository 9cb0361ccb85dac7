#include "doctest.h"

#include "qclaw/errors.hpp"
#include "qclaw/grading.hpp"

using namespace qclaw;

namespace {

CompatiblePair rank1_frozen() {
    return check_compatible(IntMat{{0, -1}, {1, 0}}, IntMat{{0}, {1}});
}

CompatiblePair a2_principal() {
    return check_compatible(
        IntMat{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 1, 0}},
        IntMat{{0, 1}, {-1, 0}, {1, 0}, {0, 1}});
}

}  // namespace

TEST_CASE("grading lattice bases") {
    CHECK(grading_lattice(IntMat{{0}, {1}}).basis == IntMat{{1, 0}});
    CHECK(grading_lattice(IntMat{{0, 1}, {-1, 0}, {1, 0}, {0, 1}}).basis ==
          IntMat{{1, 0, 0, -1}, {0, 1, 1, 0}});
    CHECK(grading_lattice(IntMat{{0, 1}, {-1, 0}}).rank() == 0);

    CHECK(in_grading_lattice(IntMat{{0}, {1}}, {1, 0}));
    CHECK(!in_grading_lattice(IntMat{{0}, {1}}, {0, 1}));
}

TEST_CASE("degree of an element") {
    const FramePtr frame = make_frame(IntMat{{0, -1}, {1, 0}});
    CHECK(degree_of(TorusElement::generator(frame, 0), {1, 0}) == 1);
    const TorusElement mut = TorusElement::monomial(frame, {-1, 1}) +
                             TorusElement::monomial(frame, {-1, 0});
    CHECK(degree_of(mut, {1, 0}) == -1);
    CHECK(degree_of(mut.specialize_q1(), {1, 0}) == -1);
    const TorusElement mixed = TorusElement::generator(frame, 0) +
                               TorusElement::generator(frame, 1);
    CHECK_THROWS_AS(degree_of(mixed, {1, 0}), NotHomogeneousError);
    try {
        degree_of(mixed, {1, 0});
    } catch (const NotHomogeneousError& e) {
        CHECK(e.degrees == std::vector<long long>{0, 1});
    }
    CHECK_THROWS_AS(degree_of(TorusElement::zero(frame), {1, 0}), ZeroElementError);
}

TEST_CASE("homogeneity along mutation") {
    const HomogeneityReport r1 = check_homogeneous_mutation(rank1_frozen(), {1, 0}, 2);
    CHECK(r1.ok);
    // initial cluster (1, 0), mutated cluster (-1, 0): relation balances at 0
    CHECK(r1.cluster_degrees[0] == std::vector<long long>{1, 0});

    const HomogeneityReport r2 = check_homogeneous_mutation(a2_principal(), {1, 0, 0, -1}, 8);
    CHECK(r2.ok);
    CHECK(r2.violations.empty());

    const HomogeneityReport r0 = check_homogeneous_mutation(a2_principal(), {0, 0, 0, 0}, 4);
    CHECK(r0.ok);
    for (const auto& degs : r0.cluster_degrees)
        for (long long g : degs) CHECK(g == 0);

    CHECK_THROWS_AS(check_homogeneous_mutation(rank1_frozen(), {0, 1}, 2), NotInLatticeError);
}
