#pragma once

#include <string>
#include <vector>

#include "qclaw/intmat.hpp"
#include "qclaw/laurent.hpp"
#include "qclaw/qtorus.hpp"

namespace qclaw {

/// Validated compatible pair (Lambda, B~): Lambda m x m skew-symmetric,
/// B~ m x n_ex with skew-symmetrizable principal part, and
/// B~^T Lambda = (D | 0) with D = diag(d), d_k > 0.
struct CompatiblePair {
    int m = 0;
    int n_ex = 0;
    IntMat lambda;
    IntMat b_tilde;
    std::vector<long long> d;
};

/// Validates and assembles a CompatiblePair.  Throws NotSkewSymmetricError,
/// NotSkewSymmetrizableError or NotCompatibleError.
CompatiblePair check_compatible(const IntMat& lambda, const IntMat& b_tilde);

/// Fomin-Zelevinsky matrix mutation in direction k (0-based, k < n_ex).
IntMat mutate_matrix(const IntMat& b_tilde, int k);

/// Mutates the whole pair; the result passes check_compatible with the same
/// d-vector.  Both sign choices of the conjugating E-matrix are computed and
/// must agree.
CompatiblePair mutate_pair(const CompatiblePair& pair, int k);

/// Data of the two-term quantum exchange relation in direction k of the
/// current pair: X_k * X'_k = q^{m_+/2} M(b_+) + q^{m_-/2} M(b_-) with
/// b_+ = sum [b_ik]_+ e_i, b_- = sum [-b_ik]_+ e_i, m_± = e_k^T Lambda b_±.
struct ExchangeBinomial {
    ExponentVec b_plus, b_minus;
    long long m_plus = 0, m_minus = 0;
    bool degenerate = false;  // zero exchange column
};

ExchangeBinomial exchange_binomial(const CompatiblePair& pair, int k);

/// Quantum seed: current pair and frame, plus the current quantum cluster
/// variables written in the coordinates of the initial frame.
struct QuantumSeed {
    CompatiblePair pair;
    FramePtr frame;          // frame of the current seed (pair.lambda)
    FramePtr initial_frame;  // frame of the seed this one was mutated from
    std::vector<TorusElement> vars;
    std::vector<int> path;  // 0-based mutation sequence from the initial seed

    static QuantumSeed initial(const CompatiblePair& pair);
};

/// One quantum mutation step.  The new variable is computed in initial-frame
/// coordinates by expanding the exchange binomial in the current variables
/// and dividing exactly by the old k-th variable; failure of that division
/// would contradict the quantum Laurent phenomenon and raises NonLaurentError.
QuantumSeed mutate_quantum_seed(const QuantumSeed& seed, int k);

/// Classical seed: current exchange matrix plus the cluster variables as
/// Laurent polynomials in the initial variables.
struct ClassicalSeed {
    int m = 0;
    int n_ex = 0;
    IntMat b_tilde;
    std::vector<Laurent> vars;
    std::vector<int> path;

    static ClassicalSeed initial(const IntMat& b_tilde);
};

ClassicalSeed mutate_classical_seed(const ClassicalSeed& seed, int k);

/// Breadth-first closure of the mutation class up to max_depth.  Seeds equal
/// up to a simultaneous permutation of the exchangeable indices are
/// identified; frozen rows are never permuted.
struct ExchangeGraph {
    std::vector<QuantumSeed> clusters;         // canonical representatives, BFS order
    std::vector<std::string> variable_keys;    // canonical strings of distinct non-frozen vars
    long long mutations_performed = 0;
    bool closed = false;  // true when the closure was reached before max_depth
    int max_depth = 0;
};

ExchangeGraph enumerate_exchange_graph(const CompatiblePair& pair, int max_depth);

/// Canonical identification key of a seed up to permutation of exchangeable
/// indices (minimum over all such permutations).
std::string seed_canonical_key(const QuantumSeed& seed);

}  // namespace qclaw
