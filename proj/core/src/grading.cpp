#include "qclaw/grading.hpp"

#include <set>
#include <sstream>

#include "qclaw/errors.hpp"

namespace qclaw {

std::vector<GradingVector> GradingLattice::basis_vectors() const {
    std::vector<GradingVector> out;
    for (int i = 0; i < basis.rows(); ++i) {
        GradingVector v(basis.cols());
        for (int j = 0; j < basis.cols(); ++j) v[j] = basis.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

GradingLattice grading_lattice(const IntMat& b_tilde) {
    // d^T B~ = 0  <=>  B~^T d = 0
    return GradingLattice{integer_kernel(b_tilde.transpose())};
}

bool in_grading_lattice(const IntMat& b_tilde, const GradingVector& d) {
    if (static_cast<int>(d.size()) != b_tilde.rows()) return false;
    for (int j = 0; j < b_tilde.cols(); ++j) {
        long long s = 0;
        for (int i = 0; i < b_tilde.rows(); ++i) s += d[i] * b_tilde.at(i, j);
        if (s != 0) return false;
    }
    return true;
}

namespace {

long long dot(const GradingVector& d, const ExponentVec& c) {
    long long s = 0;
    for (size_t i = 0; i < d.size(); ++i) s += d[i] * c[i];
    return s;
}

template <typename Terms>
long long common_degree(const Terms& terms, const GradingVector& d) {
    if (terms.empty()) throw ZeroElementError("degree of the zero element is undefined");
    std::set<long long> degrees;
    for (const auto& [e, c] : terms) degrees.insert(dot(d, e));
    if (degrees.size() > 1) {
        std::ostringstream os;
        os << "element is not homogeneous; degrees {";
        bool first = true;
        for (long long g : degrees) {
            os << (first ? "" : ",") << g;
            first = false;
        }
        os << "}";
        throw NotHomogeneousError(os.str(), {degrees.begin(), degrees.end()});
    }
    return *degrees.begin();
}

}  // namespace

long long degree_of(const TorusElement& x, const GradingVector& d) {
    if (static_cast<int>(d.size()) != x.rank())
        throw DimensionError("grading vector length does not match rank");
    return common_degree(x.terms(), d);
}

long long degree_of(const Laurent& x, const GradingVector& d) {
    if (static_cast<int>(d.size()) != x.nvars())
        throw DimensionError("grading vector length does not match rank");
    return common_degree(x.terms(), d);
}

HomogeneityReport check_homogeneous_mutation(const CompatiblePair& pair, const GradingVector& d,
                                             int max_depth) {
    if (!in_grading_lattice(pair.b_tilde, d))
        throw NotInLatticeError("grading vector is not in the grading lattice of b_tilde");

    HomogeneityReport report;
    const ExchangeGraph graph = enumerate_exchange_graph(pair, max_depth);

    for (const QuantumSeed& seed : graph.clusters) {
        std::ostringstream path;
        for (size_t i = 0; i < seed.path.size(); ++i) path << (i ? "," : "") << (seed.path[i] + 1);
        const std::string where = "path [" + path.str() + "]";

        // Recompute the classical seed independently along the same path.
        ClassicalSeed cseed = ClassicalSeed::initial(pair.b_tilde);
        for (int k : seed.path) cseed = mutate_classical_seed(cseed, k);

        std::vector<long long> degrees;
        bool seed_ok = true;
        for (int i = 0; i < pair.m; ++i) {
            try {
                const long long gq = degree_of(seed.vars[i], d);
                const long long gc = degree_of(cseed.vars[i], d);
                if (gq != gc) {
                    report.violations.push_back(where + ": quantum/classical degree mismatch at x" +
                                                std::to_string(i + 1));
                    seed_ok = false;
                }
                degrees.push_back(gq);
            } catch (const Error& e) {
                report.violations.push_back(where + ": x" + std::to_string(i + 1) + ": " + e.what());
                degrees.push_back(0);
                seed_ok = false;
            }
            ++report.cases_checked;
        }

        // Exchange relations balance in the current pair.
        for (int k = 0; k < pair.n_ex && seed_ok; ++k) {
            const ExchangeBinomial bin = exchange_binomial(seed.pair, k);
            const long long plus = dot(degrees, bin.b_plus);
            const long long minus = dot(degrees, bin.b_minus);
            const QuantumSeed next = mutate_quantum_seed(seed, k);
            long long gnew = 0;
            try {
                gnew = degree_of(next.vars[k], d);
            } catch (const Error& e) {
                report.violations.push_back(where + ": mutated x" + std::to_string(k + 1) + ": " +
                                            e.what());
                continue;
            }
            if (plus != minus || degrees[k] + gnew != plus)
                report.violations.push_back(where + ": exchange relation at k=" +
                                            std::to_string(k + 1) + " does not balance degrees");
            ++report.cases_checked;
        }

        // The induced degrees lie in the current seed's grading lattice.
        if (seed_ok && !in_grading_lattice(seed.pair.b_tilde, degrees))
            report.violations.push_back(where + ": induced degrees leave the grading lattice");

        report.cluster_degrees.push_back(std::move(degrees));
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace qclaw
