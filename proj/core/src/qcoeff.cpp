#include "qclaw/qcoeff.hpp"

#include <sstream>
#include <vector>

#include "qclaw/errors.hpp"

namespace qclaw {

std::string rational_to_string(const Rational& r) {
    return r.str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("malformed rational: '" + s + "'");
    }
}

QCoeff::QCoeff(Rational constant) {
    if (constant != 0) terms_[0] = std::move(constant);
}

QCoeff QCoeff::term(Rational c, long long half_exp) {
    QCoeff out;
    if (c != 0) out.terms_[half_exp] = std::move(c);
    return out;
}

QCoeff QCoeff::p() {
    QCoeff out;
    out.terms_[0] = -1;
    out.terms_[1] = 1;
    return out;
}

bool QCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

QCoeff QCoeff::operator-() const {
    QCoeff out(*this);
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

QCoeff& QCoeff::operator+=(const QCoeff& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QCoeff QCoeff::operator+(const QCoeff& rhs) const {
    QCoeff out(*this);
    out += rhs;
    return out;
}

QCoeff QCoeff::operator-(const QCoeff& rhs) const {
    QCoeff out(*this);
    out -= rhs;
    return out;
}

QCoeff QCoeff::operator*(const QCoeff& rhs) const {
    QCoeff out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            Rational prod = ca * cb;
            auto it = out.terms_.find(ka + kb);
            if (it == out.terms_.end()) {
                out.terms_.emplace(ka + kb, std::move(prod));
            } else {
                it->second += prod;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

QCoeff& QCoeff::operator*=(const QCoeff& rhs) {
    *this = *this * rhs;
    return *this;
}

Rational QCoeff::eval_at_one() const {
    Rational sum = 0;
    for (const auto& [k, c] : terms_) sum += c;
    return sum;
}

QCoeff QCoeff::divide_by_p_exact() const {
    if (is_zero()) return QCoeff();
    if (eval_at_one() != 0)
        throw NotDivisibleError("coefficient is not divisible by p = q^(1/2)-1: " + to_string());
    // Write this = t^s * A(t) with t = q^{1/2}; synthetic division of A by (t-1).
    const long long s = terms_.begin()->first;
    const long long top = terms_.rbegin()->first;
    std::vector<Rational> a(static_cast<size_t>(top - s + 1));
    for (const auto& [k, c] : terms_) a[static_cast<size_t>(k - s)] = c;
    const size_t n = a.size();
    std::vector<Rational> quot(n - 1);
    Rational carry = a[n - 1];
    for (size_t i = n - 1; i > 0; --i) {
        quot[i - 1] = carry;
        carry += a[i - 1];
    }
    // carry is A(1), already checked to vanish
    QCoeff out;
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] != 0) out.terms_[s + static_cast<long long>(i)] = quot[i];
    }
    return out;
}

std::optional<long long> QCoeff::p_valuation() const {
    if (is_zero()) return std::nullopt;
    long long v = 0;
    QCoeff cur(*this);
    while (cur.eval_at_one() == 0) {
        cur = cur.divide_by_p_exact();
        ++v;
    }
    return v;
}

std::optional<QCoeff> QCoeff::divide_exact(const QCoeff& rhs) const {
    if (rhs.is_zero()) return std::nullopt;
    if (is_zero()) return QCoeff();
    // Shift both operands to plain polynomials in t = q^{1/2} and long-divide.
    const long long sa = terms_.begin()->first;
    const long long sb = rhs.terms_.begin()->first;
    std::vector<Rational> a(static_cast<size_t>(terms_.rbegin()->first - sa + 1));
    std::vector<Rational> b(static_cast<size_t>(rhs.terms_.rbegin()->first - sb + 1));
    for (const auto& [k, c] : terms_) a[static_cast<size_t>(k - sa)] = c;
    for (const auto& [k, c] : rhs.terms_) b[static_cast<size_t>(k - sb)] = c;
    if (a.size() < b.size()) return std::nullopt;
    std::vector<Rational> quot(a.size() - b.size() + 1);
    for (size_t i = quot.size(); i-- > 0;) {
        Rational q = a[i + b.size() - 1] / b.back();
        quot[i] = q;
        if (q != 0) {
            for (size_t j = 0; j < b.size(); ++j) a[i + j] -= q * b[j];
        }
    }
    for (const auto& r : a) {
        if (r != 0) return std::nullopt;
    }
    QCoeff out;
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] != 0) out.terms_[sa - sb + static_cast<long long>(i)] = quot[i];
    }
    return out;
}

std::string QCoeff::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << rational_to_string(c);
        } else {
            os << rational_to_string(c) << "*q^(" << k << "/2)";
        }
    }
    return os.str();
}

QCoeff QCoeff::parse(const std::string& s) {
    QCoeff out;
    if (s == "0") return out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = (next == std::string::npos) ? s.substr(pos) : s.substr(pos, next - pos);
        pos = (next == std::string::npos) ? s.size() : next + 3;

        long long k = 0;
        std::string coeff = term;
        size_t star = term.find("*q^(");
        if (star != std::string::npos) {
            coeff = term.substr(0, star);
            size_t close = term.find("/2)", star);
            if (close == std::string::npos || close + 3 != term.size())
                throw ParseError("malformed coefficient term: '" + term + "'");
            try {
                k = std::stoll(term.substr(star + 4, close - star - 4));
            } catch (const std::exception&) {
                throw ParseError("malformed q-exponent in term: '" + term + "'");
            }
        }
        out += QCoeff::term(parse_rational(coeff), k);
    }
    return out;
}

}  // namespace qclaw
