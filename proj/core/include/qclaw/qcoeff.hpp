#pragma once

#include <map>
#include <optional>
#include <string>

#include "qclaw/rational.hpp"

namespace qclaw {

/// Element of the coefficient ring R = Q[q^{1/2}, q^{-1/2}].
///
/// Stored as a sparse map from the half-integer exponent (the key k stands
/// for q^{k/2}) to a nonzero rational coefficient.  The representation is
/// canonical: zero coefficients are never stored, so equality of elements
/// is equality of maps.
class QCoeff {
public:
    QCoeff() = default;
    explicit QCoeff(Rational constant);
    explicit QCoeff(long long constant) : QCoeff(Rational(constant)) {}

    /// c * q^{half_exp/2}
    static QCoeff term(Rational c, long long half_exp);
    /// q^{half_exp/2}
    static QCoeff q_power(long long half_exp) { return term(Rational(1), half_exp); }
    static QCoeff zero() { return QCoeff(); }
    static QCoeff one() { return QCoeff(Rational(1)); }
    /// p = q^{1/2} - 1, the prime at which specialization happens.
    static QCoeff p();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    QCoeff operator-() const;
    QCoeff& operator+=(const QCoeff& rhs);
    QCoeff& operator-=(const QCoeff& rhs);
    QCoeff operator+(const QCoeff& rhs) const;
    QCoeff operator-(const QCoeff& rhs) const;
    QCoeff operator*(const QCoeff& rhs) const;
    QCoeff& operator*=(const QCoeff& rhs);
    bool operator==(const QCoeff& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const QCoeff& rhs) const { return !(*this == rhs); }

    /// Substitutes q^{1/2} -> 1; the ring homomorphism R -> Q.
    Rational eval_at_one() const;

    /// Largest v with p^v | this; nullopt encodes infinity (the zero element).
    std::optional<long long> p_valuation() const;

    /// Exact quotient this / p.  Throws NotDivisibleError if eval_at_one != 0.
    QCoeff divide_by_p_exact() const;

    /// Exact quotient this / rhs in R, or nullopt if rhs does not divide this.
    std::optional<QCoeff> divide_exact(const QCoeff& rhs) const;

    /// Canonical text form: terms by ascending exponent, "c*q^(k/2)",
    /// exponent zero printed as the bare rational.  Zero prints as "0".
    std::string to_string() const;
    static QCoeff parse(const std::string& s);

    const std::map<long long, Rational>& terms() const { return terms_; }

private:
    std::map<long long, Rational> terms_;
};

inline QCoeff operator*(const Rational& c, const QCoeff& a) { return QCoeff(c) * a; }

}  // namespace qclaw
