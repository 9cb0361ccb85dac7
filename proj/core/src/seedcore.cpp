#include "qclaw/seedcore.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "qclaw/errors.hpp"

namespace qclaw {

namespace {

long long pos_part(long long v) { return v > 0 ? v : 0; }

void check_skew_symmetrizable(const IntMat& b) {
    const int n = b.rows();
    for (int i = 0; i < n; ++i) {
        if (b.at(i, i) != 0)
            throw NotSkewSymmetrizableError("principal part has nonzero diagonal entry at index " +
                                            std::to_string(i + 1));
        for (int j = 0; j < i; ++j) {
            const long long x = b.at(i, j), y = b.at(j, i);
            if ((x == 0) != (y == 0) || (x != 0 && (x > 0) == (y > 0)))
                throw NotSkewSymmetrizableError("sign pattern violation at (" + std::to_string(i + 1) +
                                                "," + std::to_string(j + 1) + ")");
        }
    }
    // Propagate the symmetrizer ratios d_j/d_i = -b_ij/b_ji and check cycles.
    std::vector<Rational> ratio(n, 0);
    std::vector<int> state(n, 0);
    for (int start = 0; start < n; ++start) {
        if (state[start]) continue;
        ratio[start] = 1;
        state[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (b.at(i, j) == 0) continue;
                const Rational r = ratio[i] * Rational(-b.at(i, j)) / Rational(b.at(j, i));
                if (!state[j]) {
                    ratio[j] = r;
                    state[j] = 1;
                    queue.push_back(j);
                } else if (ratio[j] != r) {
                    throw NotSkewSymmetrizableError("no positive symmetrizer exists");
                }
            }
        }
    }
}

}  // namespace

CompatiblePair check_compatible(const IntMat& lambda, const IntMat& b_tilde) {
    const int m = lambda.rows();
    if (lambda.cols() != m) throw DimensionError("lambda must be square");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j)
            if (lambda.at(i, j) != -lambda.at(j, i))
                throw NotSkewSymmetricError("lambda is not skew-symmetric", i, j);
    const int n_ex = b_tilde.cols();
    if (b_tilde.rows() != m || n_ex > m)
        throw DimensionError("b_tilde must be m x n_ex with n_ex <= m");

    IntMat principal(n_ex, n_ex);
    for (int i = 0; i < n_ex; ++i)
        for (int j = 0; j < n_ex; ++j) principal.at(i, j) = b_tilde.at(i, j);
    check_skew_symmetrizable(principal);

    const IntMat prod = b_tilde.transpose() * lambda;  // n_ex x m, must be (D | 0)
    CompatiblePair pair{m, n_ex, lambda, b_tilde, {}};
    for (int i = 0; i < n_ex; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (prod.at(i, j) != 0)
                throw NotCompatibleError("b_tilde^T * lambda has off-diagonal entry", i, j);
        }
        if (prod.at(i, i) <= 0)
            throw NotCompatibleError("b_tilde^T * lambda has non-positive diagonal entry", i, i);
        pair.d.push_back(prod.at(i, i));
    }
    return pair;
}

IntMat mutate_matrix(const IntMat& b_tilde, int k) {
    if (k < 0 || k >= b_tilde.cols()) throw IndexError("mutation index out of range");
    IntMat out(b_tilde.rows(), b_tilde.cols());
    for (int i = 0; i < b_tilde.rows(); ++i) {
        for (int j = 0; j < b_tilde.cols(); ++j) {
            if (i == k || j == k) {
                out.at(i, j) = -b_tilde.at(i, j);
            } else {
                out.at(i, j) = b_tilde.at(i, j) +
                               pos_part(b_tilde.at(i, k)) * pos_part(b_tilde.at(k, j)) -
                               pos_part(-b_tilde.at(i, k)) * pos_part(-b_tilde.at(k, j));
            }
        }
    }
    return out;
}

namespace {

// Berenstein-Zelevinsky conjugation matrix E_eps for direction k.
IntMat bz_e_matrix(const CompatiblePair& pair, int k, int eps) {
    IntMat e = IntMat::identity(pair.m);
    e.at(k, k) = -1;
    for (int i = 0; i < pair.m; ++i) {
        if (i != k) e.at(i, k) = pos_part(-eps * pair.b_tilde.at(i, k));
    }
    return e;
}

}  // namespace

CompatiblePair mutate_pair(const CompatiblePair& pair, int k) {
    if (k < 0 || k >= pair.n_ex) throw IndexError("mutation index out of range");
    const IntMat e_plus = bz_e_matrix(pair, k, +1);
    const IntMat e_minus = bz_e_matrix(pair, k, -1);
    const IntMat lambda_plus = e_plus.transpose() * pair.lambda * e_plus;
    const IntMat lambda_minus = e_minus.transpose() * pair.lambda * e_minus;
    if (lambda_plus != lambda_minus)
        throw Error("mutated lambda depends on the E-matrix sign choice (pair not compatible?)");
    CompatiblePair out = check_compatible(lambda_plus, mutate_matrix(pair.b_tilde, k));
    if (out.d != pair.d) throw Error("compatibility datum changed under mutation");
    return out;
}

ExchangeBinomial exchange_binomial(const CompatiblePair& pair, int k) {
    if (k < 0 || k >= pair.n_ex) throw IndexError("exchange index out of range");
    ExchangeBinomial bin;
    bin.b_plus.assign(pair.m, 0);
    bin.b_minus.assign(pair.m, 0);
    for (int i = 0; i < pair.m; ++i) {
        if (i == k) continue;
        bin.b_plus[i] = pos_part(pair.b_tilde.at(i, k));
        bin.b_minus[i] = pos_part(-pair.b_tilde.at(i, k));
    }
    ExponentVec ek(pair.m, 0);
    ek[k] = 1;
    const ToricFrame frame(pair.lambda);
    bin.m_plus = frame.skew_form(ek, bin.b_plus);
    bin.m_minus = frame.skew_form(ek, bin.b_minus);
    bin.degenerate = std::all_of(bin.b_plus.begin(), bin.b_plus.end(), [](long long v) { return v == 0; }) &&
                     std::all_of(bin.b_minus.begin(), bin.b_minus.end(), [](long long v) { return v == 0; });
    return bin;
}

QuantumSeed QuantumSeed::initial(const CompatiblePair& pair) {
    QuantumSeed seed;
    seed.pair = pair;
    seed.frame = make_frame(pair.lambda, "initial");
    seed.initial_frame = seed.frame;
    for (int i = 0; i < pair.m; ++i)
        seed.vars.push_back(TorusElement::generator(seed.initial_frame, i));
    return seed;
}

namespace {

// M'(b) for b in N^m, expressed in initial-frame coordinates: the normalized
// product of the current cluster variables, ordered by ascending index.
TorusElement normalized_var_monomial(const QuantumSeed& seed, const ExponentVec& b) {
    TorusElement prod = TorusElement::one(seed.initial_frame);
    for (int i = 0; i < seed.pair.m; ++i) {
        for (long long r = 0; r < b[i]; ++r) prod = prod * seed.vars[i];
    }
    const ToricFrame current(seed.pair.lambda);
    // ordered product = ordered_basis_unit * M'(b)
    const QCoeff unit = ordered_basis_unit(current, b);
    auto inv = QCoeff::one().divide_exact(unit);  // unit is a q-power
    return prod.scalar_mul(*inv);
}

}  // namespace

QuantumSeed mutate_quantum_seed(const QuantumSeed& seed, int k) {
    const ExchangeBinomial bin = exchange_binomial(seed.pair, k);
    const TorusElement numerator =
        normalized_var_monomial(seed, bin.b_plus).scalar_mul(QCoeff::q_power(bin.m_plus)) +
        normalized_var_monomial(seed, bin.b_minus).scalar_mul(QCoeff::q_power(bin.m_minus));
    auto new_var = numerator.try_left_divide(seed.vars[k]);
    if (!new_var)
        throw NonLaurentError("quantum exchange division failed in direction " +
                              std::to_string(k + 1) + " (Laurent phenomenon violated)");
    QuantumSeed out;
    out.pair = mutate_pair(seed.pair, k);
    out.path = seed.path;
    out.path.push_back(k);
    std::ostringstream id;
    for (size_t i = 0; i < out.path.size(); ++i) id << (i ? "," : "mu:") << (out.path[i] + 1);
    out.frame = make_frame(out.pair.lambda, id.str());
    out.initial_frame = seed.initial_frame;
    out.vars = seed.vars;
    out.vars[k] = *new_var;
    return out;
}

ClassicalSeed ClassicalSeed::initial(const IntMat& b_tilde) {
    ClassicalSeed seed;
    seed.m = b_tilde.rows();
    seed.n_ex = b_tilde.cols();
    seed.b_tilde = b_tilde;
    for (int i = 0; i < seed.m; ++i) seed.vars.push_back(Laurent::variable(seed.m, i));
    return seed;
}

ClassicalSeed mutate_classical_seed(const ClassicalSeed& seed, int k) {
    if (k < 0 || k >= seed.n_ex) throw IndexError("mutation index out of range");
    Laurent plus = Laurent::one(seed.m);
    Laurent minus = Laurent::one(seed.m);
    for (int i = 0; i < seed.m; ++i) {
        const long long b = seed.b_tilde.at(i, k);
        if (i == k || b == 0) continue;
        if (b > 0) {
            plus = plus * seed.vars[i].pow(b);
        } else {
            minus = minus * seed.vars[i].pow(-b);
        }
    }
    auto new_var = (plus + minus).divide_exact(seed.vars[k]);
    if (!new_var)
        throw NonLaurentError("classical exchange division failed in direction " +
                              std::to_string(k + 1));
    ClassicalSeed out = seed;
    out.b_tilde = mutate_matrix(seed.b_tilde, k);
    out.vars[k] = *new_var;
    out.path.push_back(k);
    return out;
}

std::string seed_canonical_key(const QuantumSeed& seed) {
    const int n_ex = seed.pair.n_ex;
    const int m = seed.pair.m;
    std::vector<int> perm(n_ex);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::string> var_strings(m);
    for (int i = 0; i < m; ++i) var_strings[i] = seed.vars[i].to_string();
    std::string best;
    do {
        std::ostringstream os;
        for (int i = 0; i < m; ++i) {
            os << (i ? "|" : "") << var_strings[i < n_ex ? perm[i] : i];
        }
        os << ";";
        for (int i = 0; i < m; ++i) {
            const int row = i < n_ex ? perm[i] : i;
            for (int j = 0; j < n_ex; ++j) os << seed.pair.b_tilde.at(row, perm[j]) << ",";
        }
        std::string key = os.str();
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

ExchangeGraph enumerate_exchange_graph(const CompatiblePair& pair, int max_depth) {
    if (max_depth < 0) throw IndexError("max_depth must be nonnegative");
    ExchangeGraph graph;
    graph.max_depth = max_depth;
    graph.closed = true;

    QuantumSeed init = QuantumSeed::initial(pair);
    std::unordered_set<std::string> seen{seed_canonical_key(init)};
    std::unordered_set<std::string> var_keys;
    std::deque<std::pair<QuantumSeed, int>> queue;
    queue.emplace_back(init, 0);
    graph.clusters.push_back(std::move(init));

    while (!queue.empty()) {
        auto [seed, depth] = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < pair.n_ex; ++i) var_keys.insert(seed.vars[i].to_string());
        for (int k = 0; k < pair.n_ex; ++k) {
            QuantumSeed next = mutate_quantum_seed(seed, k);
            ++graph.mutations_performed;
            std::string key = seed_canonical_key(next);
            if (seen.contains(key)) continue;
            if (depth + 1 > max_depth) {
                graph.closed = false;  // truncated: unexplored seed beyond the horizon
                continue;
            }
            seen.insert(std::move(key));
            queue.emplace_back(next, depth + 1);
            graph.clusters.push_back(std::move(next));
        }
    }
    graph.variable_keys.assign(var_keys.begin(), var_keys.end());
    std::sort(graph.variable_keys.begin(), graph.variable_keys.end());
    return graph;
}

}  // namespace qclaw
