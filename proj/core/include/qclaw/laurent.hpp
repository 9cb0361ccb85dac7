#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qclaw/rational.hpp"

namespace qclaw {

using ExponentVec = std::vector<long long>;

/// Commutative Laurent polynomial in Q[x_1^{±1},...,x_m^{±1}], sparse and
/// canonical (no zero coefficients).  This is the target of the q=1
/// specialization and the arithmetic backing the classical seed mutation.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(int nvars) : nvars_(nvars) {}

    static Laurent zero(int nvars) { return Laurent(nvars); }
    static Laurent constant(int nvars, Rational c);
    static Laurent one(int nvars) { return constant(nvars, Rational(1)); }
    static Laurent monomial(ExponentVec exp, Rational c);
    static Laurent variable(int nvars, int index);  // x_{index}, 0-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    Laurent operator-() const;
    Laurent operator+(const Laurent& rhs) const;
    Laurent operator-(const Laurent& rhs) const;
    Laurent operator*(const Laurent& rhs) const;
    Laurent& operator+=(const Laurent& rhs);
    bool operator==(const Laurent& rhs) const = default;

    Laurent pow(long long e) const;  // e >= 0

    /// Exact quotient, or nullopt when rhs does not divide this.
    std::optional<Laurent> divide_exact(const Laurent& rhs) const;

    /// Terms in descending lex order, "c*x1^a*x2^b"; unit coefficients and
    /// unit exponents are suppressed.
    std::string to_string(const std::vector<std::string>& names = {}) const;

    const std::map<ExponentVec, Rational>& terms() const { return terms_; }

private:
    void add_term(const ExponentVec& exp, const Rational& c);

    int nvars_ = 0;
    std::map<ExponentVec, Rational> terms_;
};

}  // namespace qclaw
