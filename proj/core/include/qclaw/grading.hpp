#pragma once

#include <string>
#include <vector>

#include "qclaw/intmat.hpp"
#include "qclaw/laurent.hpp"
#include "qclaw/qtorus.hpp"
#include "qclaw/seedcore.hpp"

namespace qclaw {

using GradingVector = std::vector<long long>;

/// Z-basis of the lattice {d in Z^m : d^T B~ = 0} of grading vectors with
/// homogeneous exchange relations.
struct GradingLattice {
    IntMat basis;  // rows, in canonical Hermite form; may have zero rows count

    int rank() const { return basis.rows(); }
    std::vector<GradingVector> basis_vectors() const;
};

GradingLattice grading_lattice(const IntMat& b_tilde);

/// d^T B~ = 0, i.e. membership in the grading lattice.
bool in_grading_lattice(const IntMat& b_tilde, const GradingVector& d);

/// Common degree d·c of all monomials, when it exists.
/// Throws ZeroElementError on zero input and NotHomogeneousError (carrying
/// the set of distinct degrees) otherwise.
long long degree_of(const TorusElement& x, const GradingVector& d);
long long degree_of(const Laurent& x, const GradingVector& d);

struct HomogeneityReport {
    bool ok = true;
    long long cases_checked = 0;
    std::vector<std::string> violations;  // witness path + description
    // Degree of each variable of each enumerated cluster, BFS order.
    std::vector<std::vector<long long>> cluster_degrees;
};

/// Enumerates quantum and classical variables to max_depth and checks that
/// every variable is homogeneous, every exchange relation balances
/// (deg x_k + deg x'_k = d·b_+ = d·b_-), and the induced degrees of each
/// mutated seed again lie in the mutated grading lattice.
HomogeneityReport check_homogeneous_mutation(const CompatiblePair& pair, const GradingVector& d,
                                             int max_depth);

}  // namespace qclaw
