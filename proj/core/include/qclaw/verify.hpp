#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qclaw/grading.hpp"
#include "qclaw/qtorus.hpp"
#include "qclaw/seedcore.hpp"

namespace qclaw {

struct VerificationReport {
    std::string check_name;
    bool pass = true;
    long long cases_run = 0;
    std::vector<std::string> witnesses;  // failing inputs, serialized
    std::vector<std::string> notes;      // informational, deterministic
    long long millis = 0;

    /// {"check_name","status","cases_run","witnesses","notes"[,"millis"]}.
    /// Timing is excluded by default so that fixed-seed runs serialize
    /// byte-identically.
    std::string to_json(bool include_timing = false) const;
};

/// Expresses x (an element of the pair's torus) in the basis of the
/// mu_k-mutated frame, when x lies in the adjacent torus.  Nonnegative
/// powers of the direction generator always rewrite; negative powers need
/// exact division by products of the exchange binomial, and a failed
/// division certifies non-membership (NotInAdjacentTorusError).
TorusElement rewrite_in_adjacent_frame(const CompatiblePair& pair, const TorusElement& x, int k);
TorusElement rewrite_in_adjacent_frame(const QuantumSeed& seed, const TorusElement& x, int k);

/// Exact symbolic checks, in the mutated frame, of the commutation rule
/// Q^{jm/2} (X'_k)^{-1} = (X'_k)^{-1} Q^{(j+2)m/2} and of the product
/// formulas expanding powers of the old variable through the exchange
/// binomial.
VerificationReport verify_power_identities(const CompatiblePair& pair, int k, int l_max);

/// Sampled check of (p T) ∩ T_k = T ∩ (p T_k) for p = q^{1/2}-1: elements of
/// the intersection keep their p-valuation under frame rewriting, in both
/// directions, and the decompositions on the two sides match through the
/// exchange-binomial product relation.
VerificationReport verify_prop_key(const CompatiblePair& pair, int k, int n_samples,
                                   std::uint64_t rng_seed);

/// Quantum variables specialize at q=1 to the independently computed
/// classical variables, seed by seed, over the enumerated graph; the induced
/// map between the variable sets is a bijection.
VerificationReport specialization_check(const CompatiblePair& pair, int max_depth);

/// Quantum mutation never fails exact division: BFS enumeration plus random
/// mutation paths.
VerificationReport verify_laurent(const CompatiblePair& pair, int max_depth, int n_paths,
                                  int path_len, std::uint64_t rng_seed);

/// For each degree g in [g_min, g_max], the dimension over Q of the span of
/// classical products of enumerated cluster variables (at most max_factors
/// factors) against the rank over R of the corresponding quantum products.
/// A desk-scale probe, not a proof.
VerificationReport graded_dimension_report(const CompatiblePair& pair, const GradingVector& d,
                                           long long g_min, long long g_max, int max_depth,
                                           int max_factors = 4);

}  // namespace qclaw
