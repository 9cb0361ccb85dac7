#include "qclaw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qclaw/errors.hpp"

namespace qclaw {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    long long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
};

// Deterministic across platforms: raw engine output, no distribution classes.
struct Rng {
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::mt19937_64 engine;
};

QCoeff random_coeff(Rng& rng) {
    // Integer Laurent polynomial in q^{1/2} of exponent span <= 4.
    const long long base = rng.uniform(-2, 2);
    QCoeff c;
    const int nterms = static_cast<int>(rng.uniform(1, 2));
    for (int t = 0; t < nterms; ++t) {
        long long a = rng.uniform(-3, 3);
        if (a == 0) a = 1;
        c += QCoeff::term(Rational(a), base + rng.uniform(0, 4));
    }
    if (c.is_zero()) c = QCoeff::one();
    return c;
}

// Random torus element with k-th exponents in [k_lo, k_hi], others in [-3,3].
TorusElement random_element(Rng& rng, const FramePtr& frame, int k, long long k_lo, long long k_hi) {
    const int m = frame->rank();
    TorusElement x = TorusElement::zero(frame);
    const int nterms = static_cast<int>(rng.uniform(2, 4));
    for (int t = 0; t < nterms; ++t) {
        ExponentVec e(m);
        for (int i = 0; i < m; ++i)
            e[i] = (i == k) ? rng.uniform(k_lo, k_hi) : rng.uniform(-3, 3);
        x += TorusElement::monomial(frame, std::move(e), random_coeff(rng));
    }
    if (x.is_zero()) x = TorusElement::one(frame);
    return x;
}

// Exchange-binomial element Q^{jm/2} = q^{j m_+/2} M(b_+) + q^{j m_-/2} M(b_-)
// in the given frame.  m_± are taken with respect to the MUTATED commutation
// matrix, matching the frame-change identities.
struct BinomialPowers {
    ExponentVec b_plus, b_minus;
    long long m_plus = 0, m_minus = 0;

    TorusElement q_elem(const FramePtr& frame, long long j) const {
        return TorusElement::monomial(frame, b_plus, QCoeff::q_power(j * m_plus)) +
               TorusElement::monomial(frame, b_minus, QCoeff::q_power(j * m_minus));
    }

    // Q^{(2l-1)m/2} * ... * Q^{3m/2} * Q^{m/2}
    TorusElement q_product_desc(const FramePtr& frame, long long l) const {
        TorusElement out = TorusElement::one(frame);
        for (long long j = 2 * l - 1; j >= 1; j -= 2) out = out * q_elem(frame, j);
        return out;
    }

    // Q^{-m/2} * Q^{-3m/2} * ... * Q^{(1-2l)m/2}
    TorusElement q_product_asc_neg(const FramePtr& frame, long long l) const {
        TorusElement out = TorusElement::one(frame);
        for (long long j = -1; j >= 1 - 2 * l; j -= 2) out = out * q_elem(frame, j);
        return out;
    }
};

BinomialPowers binomial_powers(const CompatiblePair& pair, const CompatiblePair& mutated, int k) {
    const ExchangeBinomial bin = exchange_binomial(pair, k);
    BinomialPowers bp;
    bp.b_plus = bin.b_plus;
    bp.b_minus = bin.b_minus;
    ExponentVec ek(pair.m, 0);
    ek[k] = 1;
    const ToricFrame mutated_frame(mutated.lambda);
    bp.m_plus = mutated_frame.skew_form(ek, bin.b_plus);
    bp.m_minus = mutated_frame.skew_form(ek, bin.b_minus);
    return bp;
}

// Conjugation by M(e_k)^j on the subring of monomials with k-th entry zero:
// M(e_k)^j M(c) M(e_k)^{-j} = q^{j e_k^T Lambda c} M(c).
TorusElement twist(const TorusElement& x, int k, long long j) {
    ExponentVec ek(x.rank(), 0);
    ek[k] = 1;
    TorusElement out = TorusElement::zero(x.frame());
    for (const auto& [e, c] : x.terms()) {
        const long long s = x.frame()->skew_form(ek, e);
        out += TorusElement::monomial(x.frame(), e, c * QCoeff::q_power(2 * j * s));
    }
    return out;
}

std::string path_string(const std::vector<int>& path) {
    std::ostringstream os;
    for (size_t i = 0; i < path.size(); ++i) os << (i ? "," : "") << (path[i] + 1);
    return os.str();
}

}  // namespace

std::string VerificationReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["check_name"] = check_name;
    j["status"] = pass ? "pass" : "fail";
    j["cases_run"] = cases_run;
    j["witnesses"] = witnesses;
    j["notes"] = notes;
    if (include_timing) j["millis"] = millis;
    return j.dump();
}

TorusElement rewrite_in_adjacent_frame(const CompatiblePair& pair, const TorusElement& x, int k) {
    if (x.frame()->commutation() != pair.lambda)
        throw FrameMismatchError("element is not expressed in the pair's frame");
    if (k < 0 || k >= pair.n_ex) throw IndexError("rewrite direction out of range");
    const CompatiblePair mutated = mutate_pair(pair, k);
    const FramePtr adj = make_frame(mutated.lambda);
    const BinomialPowers bp = binomial_powers(pair, mutated, k);

    const Decomposition dec = x.decompose_along(k);
    TorusElement out = TorusElement::zero(adj);
    for (const auto& [j, part] : dec.parts) {
        if (j == 0) {
            out += TorusElement::reinterpret(adj, part);
        } else if (j > 0) {
            // X_k^l c = Q^{-m/2}...Q^{(1-2l)m/2} M'(-l e_k) c
            ExponentVec e(pair.m, 0);
            e[k] = -j;
            out += bp.q_product_asc_neg(adj, j) * TorusElement::monomial(adj, std::move(e)) *
                   TorusElement::reinterpret(adj, part);
        } else {
            // X_k^{-l} c = M'(l e_k) d with  tw_{-l}(c) = Q^{(2l-1)m/2}...Q^{m/2} tw_{-l}(d)
            const long long l = -j;
            const TorusElement target = twist(part, k, -l);
            auto h = target.try_left_divide(bp.q_product_desc(x.frame(), l));
            if (!h)
                throw NotInAdjacentTorusError(
                    "element is not in the adjacent torus: no exact quotient at power " +
                        std::to_string(j) + ", remainder part " + part.to_string(),
                    j);
            ExponentVec e(pair.m, 0);
            e[k] = l;
            out += TorusElement::monomial(adj, std::move(e)) *
                   TorusElement::reinterpret(adj, twist(*h, k, l));
        }
    }
    return out;
}

TorusElement rewrite_in_adjacent_frame(const QuantumSeed& seed, const TorusElement& x, int k) {
    return rewrite_in_adjacent_frame(seed.pair, x, k);
}

VerificationReport verify_power_identities(const CompatiblePair& pair, int k, int l_max) {
    Timer timer;
    VerificationReport report;
    report.check_name = "powerids";
    if (k < 0 || k >= pair.n_ex) throw IndexError("exchange index out of range");

    const CompatiblePair mutated = mutate_pair(pair, k);
    const FramePtr adj = make_frame(mutated.lambda);
    const BinomialPowers bp = binomial_powers(pair, mutated, k);

    ExponentVec minus_ek(pair.m, 0);
    minus_ek[k] = -1;
    const TorusElement xp_inv = TorusElement::monomial(adj, minus_ek);  // (X'_k)^{-1}

    // The old variable, written in the mutated frame via the exchange relation
    // of the mutated seed (mutation is involutive).
    ExponentVec a = bp.b_plus, b = bp.b_minus;
    a[k] -= 1;
    b[k] -= 1;
    const TorusElement x_old = TorusElement::monomial(adj, a) + TorusElement::monomial(adj, b);

    // Commutation: Q^{jm/2} (X'_k)^{-1} = (X'_k)^{-1} Q^{(j+2)m/2}
    for (long long j = -3; j <= 3; ++j) {
        ++report.cases_run;
        if (bp.q_elem(adj, j) * xp_inv != xp_inv * bp.q_elem(adj, j + 2)) {
            report.pass = false;
            report.witnesses.push_back("commutation identity fails at shift j=" + std::to_string(j));
        }
    }

    for (long long l = 0; l <= l_max; ++l) {
        const TorusElement lhs = x_old.pow(l);
        ExponentVec le(pair.m, 0), le_neg(pair.m, 0);
        le[k] = l;
        le_neg[k] = -l;
        const TorusElement mk_pos = TorusElement::monomial(adj, le);
        const TorusElement mk_neg = TorusElement::monomial(adj, le_neg);
        const TorusElement prod_desc = bp.q_product_desc(adj, l);
        const TorusElement prod_neg = bp.q_product_asc_neg(adj, l);

        struct Check {
            const char* label;
            bool ok;
        } checks[] = {
            {"X^l = Qprod- * (X')^{-l}", lhs == prod_neg * mk_neg},
            {"X^l = (X')^{-l} * Qprod+", lhs == mk_neg * prod_desc},
            {"X^l (X')^l = Qprod-", lhs * mk_pos == prod_neg},
            {"(X')^l X^l = Qprod+", mk_pos * lhs == prod_desc},
        };
        for (const auto& c : checks) {
            ++report.cases_run;
            if (!c.ok) {
                report.pass = false;
                report.witnesses.push_back(std::string(c.label) + " fails at l=" + std::to_string(l));
            }
        }
    }
    report.millis = timer.millis();
    return report;
}

VerificationReport verify_prop_key(const CompatiblePair& pair, int k, int n_samples,
                                   std::uint64_t rng_seed) {
    Timer timer;
    VerificationReport report;
    report.check_name = "propkey";
    Rng rng(rng_seed);

    const CompatiblePair pairs[2] = {pair, mutate_pair(pair, k)};
    for (int dir = 0; dir < 2; ++dir) {
        const CompatiblePair& base = pairs[dir];
        const CompatiblePair& other = pairs[1 - dir];
        const FramePtr frame = make_frame(base.lambda);
        const BinomialPowers bp = binomial_powers(base, other, k);
        for (int s = 0; s < n_samples; ++s) {
            ++report.cases_run;
            // Nonnegative k-powers guarantee membership in the adjacent torus.
            const TorusElement x = random_element(rng, frame, k, 0, 3);
            const auto fail = [&](const std::string& what) {
                report.pass = false;
                report.witnesses.push_back("dir=" + std::to_string(dir) + " sample=" +
                                           std::to_string(s) + ": " + what + "; x = " + x.to_string());
            };
            try {
                const TorusElement w = rewrite_in_adjacent_frame(base, x, k);

                // p-valuation is preserved by the rewriting (divisibility in
                // one torus iff in the other, for intersection elements).
                if (x.p_valuation() != w.p_valuation()) {
                    fail("p-valuation changed under rewriting");
                    continue;
                }
                // p-multiples stay p-multiples after rewriting.
                const TorusElement y = x.scalar_mul(QCoeff::p());
                const TorusElement wy = rewrite_in_adjacent_frame(base, y, k);
                if (wy != w.scalar_mul(QCoeff::p()) || !wy.is_p_divisible()) {
                    fail("p-multiple did not rewrite to a p-multiple");
                    continue;
                }
                // Inverse rewriting returns the original element.
                if (rewrite_in_adjacent_frame(other, w, k) != x) {
                    fail("inverse rewriting did not recover the element");
                    continue;
                }
                // Decomposition relation d_{-l} = Q^{(2l-1)m/2}...Q^{m/2} c_l.
                const Decomposition dc = x.decompose_along(k);
                const Decomposition dd = w.decompose_along(k);
                for (const auto& [l, c_l] : dc.parts) {
                    auto it = dd.parts.find(-l);
                    const TorusElement expect =
                        l == 0 ? c_l : bp.q_product_desc(frame, l) * c_l;
                    if (expect.is_zero()) {
                        if (it != dd.parts.end()) fail("spurious decomposition part");
                    } else if (it == dd.parts.end() ||
                               TorusElement::reinterpret(frame, it->second) != expect) {
                        fail("decomposition relation fails at l=" + std::to_string(l));
                        break;
                    }
                }
            } catch (const Error& e) {
                fail(std::string("error: ") + e.what());
            }
        }
    }
    report.millis = timer.millis();
    return report;
}

VerificationReport specialization_check(const CompatiblePair& pair, int max_depth) {
    Timer timer;
    VerificationReport report;
    report.check_name = "specialization";

    const ExchangeGraph graph = enumerate_exchange_graph(pair, max_depth);
    std::set<std::string> quantum_specialized, classical_set;
    for (const QuantumSeed& seed : graph.clusters) {
        ClassicalSeed cseed = ClassicalSeed::initial(pair.b_tilde);
        for (int k : seed.path) cseed = mutate_classical_seed(cseed, k);
        for (int i = 0; i < pair.m; ++i) {
            ++report.cases_run;
            if (seed.vars[i].specialize_q1() != cseed.vars[i]) {
                report.pass = false;
                report.witnesses.push_back("path [" + path_string(seed.path) + "], index " +
                                           std::to_string(i + 1) + ": specialization mismatch");
            }
            if (i < pair.n_ex) {
                quantum_specialized.insert(seed.vars[i].specialize_q1().to_string());
                classical_set.insert(cseed.vars[i].to_string());
            }
        }
    }
    if (quantum_specialized != classical_set) {
        report.pass = false;
        report.witnesses.push_back("specialized quantum variable set differs from classical set");
    }
    report.notes.push_back("clusters=" + std::to_string(graph.clusters.size()));
    report.notes.push_back("variables=" + std::to_string(classical_set.size()));
    report.millis = timer.millis();
    return report;
}

VerificationReport verify_laurent(const CompatiblePair& pair, int max_depth, int n_paths,
                                  int path_len, std::uint64_t rng_seed) {
    Timer timer;
    VerificationReport report;
    report.check_name = "laurent";
    Rng rng(rng_seed);
    try {
        const ExchangeGraph graph = enumerate_exchange_graph(pair, max_depth);
        report.cases_run += graph.mutations_performed;
        for (int p = 0; p < n_paths; ++p) {
            QuantumSeed seed = QuantumSeed::initial(pair);
            int last = -1;
            for (int s = 0; s < path_len; ++s) {
                int k = static_cast<int>(rng.uniform(0, pair.n_ex - 1));
                if (pair.n_ex > 1 && k == last) k = (k + 1) % pair.n_ex;  // avoid trivial backtracks
                seed = mutate_quantum_seed(seed, k);
                last = k;
                ++report.cases_run;
            }
        }
    } catch (const NonLaurentError& e) {
        report.pass = false;
        report.witnesses.push_back(e.what());
    }
    report.millis = timer.millis();
    return report;
}

namespace {

long long rational_rank(std::vector<std::vector<Rational>> rows) {
    long long rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Fraction-free Bareiss elimination over the domain R; every division is
// exact by the Sylvester identity, so this is the rank over Frac(R).
long long qcoeff_rank(std::vector<std::vector<QCoeff>> rows) {
    long long rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    QCoeff prev = QCoeff::one();
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                const QCoeff num = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
                auto div = num.divide_exact(prev);
                rows[i][j] = div ? *div : num;  // division is always exact here
            }
            rows[i][c] = QCoeff::zero();
        }
        prev = rows[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace

VerificationReport graded_dimension_report(const CompatiblePair& pair, const GradingVector& d,
                                           long long g_min, long long g_max, int max_depth,
                                           int max_factors) {
    Timer timer;
    VerificationReport report;
    report.check_name = "graded";
    if (!in_grading_lattice(pair.b_tilde, d))
        throw NotInLatticeError("grading vector is not in the grading lattice of b_tilde");

    // Distinct cluster variables, quantum paired with classical, in a
    // deterministic order.
    const ExchangeGraph graph = enumerate_exchange_graph(pair, max_depth);
    std::map<std::string, std::pair<TorusElement, Laurent>> distinct;
    for (const QuantumSeed& seed : graph.clusters) {
        ClassicalSeed cseed = ClassicalSeed::initial(pair.b_tilde);
        for (int k : seed.path) cseed = mutate_classical_seed(cseed, k);
        for (int i = 0; i < pair.m; ++i)
            distinct.emplace(seed.vars[i].to_string(), std::make_pair(seed.vars[i], cseed.vars[i]));
    }
    std::vector<TorusElement> qvars;
    std::vector<Laurent> cvars;
    std::vector<long long> degrees;
    for (auto& [key, pr] : distinct) {
        degrees.push_back(degree_of(pr.first, d));  // throws if inhomogeneous
        qvars.push_back(std::move(pr.first));
        cvars.push_back(std::move(pr.second));
    }

    // All products with at most max_factors factors, grouped by total degree.
    std::map<long long, std::vector<std::pair<TorusElement, Laurent>>> products;
    struct StackItem {
        size_t next;
        int used;
        long long deg;
        TorusElement q;
        Laurent c;
    };
    const FramePtr init = make_frame(pair.lambda);
    std::vector<StackItem> stack{{0, 0, 0, TorusElement::one(init), Laurent::one(pair.m)}};
    while (!stack.empty()) {
        StackItem item = std::move(stack.back());
        stack.pop_back();
        if (item.deg >= g_min && item.deg <= g_max)
            products[item.deg].emplace_back(item.q, item.c);
        if (item.used == max_factors) continue;
        for (size_t i = item.next; i < qvars.size(); ++i) {
            stack.push_back({i, item.used + 1, item.deg + degrees[i], item.q * qvars[i],
                             item.c * cvars[i]});
        }
    }

    for (long long g = g_min; g <= g_max; ++g) {
        ++report.cases_run;
        long long classical_dim = 0, quantum_rank = 0;
        auto it = products.find(g);
        if (it != products.end()) {
            // Column index: union of exponent vectors.
            std::map<ExponentVec, size_t> columns;
            for (const auto& [q, c] : it->second)
                for (const auto& [e, coeff] : q.terms()) columns.emplace(e, 0);
            for (const auto& [q, c] : it->second)
                for (const auto& [e, coeff] : c.terms()) columns.emplace(e, 0);
            size_t idx = 0;
            for (auto& [e, col] : columns) col = idx++;

            std::vector<std::vector<Rational>> cmat;
            std::vector<std::vector<QCoeff>> qmat;
            for (const auto& [q, c] : it->second) {
                std::vector<Rational> crow(columns.size(), Rational(0));
                for (const auto& [e, coeff] : c.terms()) crow[columns.at(e)] = coeff;
                cmat.push_back(std::move(crow));
                std::vector<QCoeff> qrow(columns.size());
                for (const auto& [e, coeff] : q.terms()) qrow[columns.at(e)] = coeff;
                qmat.push_back(std::move(qrow));
            }
            classical_dim = rational_rank(std::move(cmat));
            quantum_rank = qcoeff_rank(std::move(qmat));
        }
        report.notes.push_back("g=" + std::to_string(g) + ": classical_dim=" +
                               std::to_string(classical_dim) + ", quantum_rank=" +
                               std::to_string(quantum_rank));
        if (classical_dim != quantum_rank) {
            report.pass = false;
            report.witnesses.push_back("degree " + std::to_string(g) +
                                       ": classical dimension != quantum rank");
        }
    }
    report.millis = timer.millis();
    return report;
}

}  // namespace qclaw
