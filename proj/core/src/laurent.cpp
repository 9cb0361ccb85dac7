#include "qclaw/laurent.hpp"

#include <sstream>

#include "qclaw/errors.hpp"

namespace qclaw {

Laurent Laurent::constant(int nvars, Rational c) {
    Laurent out(nvars);
    if (c != 0) out.terms_.emplace(ExponentVec(nvars, 0), std::move(c));
    return out;
}

Laurent Laurent::monomial(ExponentVec exp, Rational c) {
    Laurent out(static_cast<int>(exp.size()));
    if (c != 0) out.terms_.emplace(std::move(exp), std::move(c));
    return out;
}

Laurent Laurent::variable(int nvars, int index) {
    ExponentVec e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e), Rational(1));
}

void Laurent::add_term(const ExponentVec& exp, const Rational& c) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Laurent Laurent::operator+(const Laurent& rhs) const {
    if (nvars_ != rhs.nvars_) throw DimensionError("Laurent variable count mismatch");
    Laurent out(*this);
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
    *this = *this + rhs;
    return *this;
}

Laurent Laurent::operator-(const Laurent& rhs) const { return *this + (-rhs); }

Laurent Laurent::operator*(const Laurent& rhs) const {
    if (nvars_ != rhs.nvars_) throw DimensionError("Laurent variable count mismatch");
    Laurent out(nvars_);
    ExponentVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Laurent Laurent::pow(long long e) const {
    Laurent out = one(nvars_);
    for (long long i = 0; i < e; ++i) out = out * *this;
    return out;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& rhs) const {
    if (rhs.is_zero()) return std::nullopt;
    if (is_zero()) return zero(nvars_);
    // Quotient support is confined to the componentwise box
    // [min(y)-min(g), max(y)-max(g)]: per-coordinate top and bottom graded
    // parts multiply without cancellation in a domain.
    ExponentVec lo(nvars_), hi(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        long long ymin = 0, ymax = 0, gmin = 0, gmax = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[i] < ymin) ymin = e[i];
            if (first || e[i] > ymax) ymax = e[i];
            first = false;
        }
        first = true;
        for (const auto& [e, c] : rhs.terms_) {
            if (first || e[i] < gmin) gmin = e[i];
            if (first || e[i] > gmax) gmax = e[i];
            first = false;
        }
        lo[i] = ymin - gmin;
        hi[i] = ymax - gmax;
        if (lo[i] > hi[i]) return std::nullopt;
    }
    Laurent r(*this);
    Laurent h(nvars_);
    const auto& glead = *rhs.terms_.rbegin();
    ExponentVec e(nvars_);
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        for (int i = 0; i < nvars_; ++i) {
            e[i] = rlead.first[i] - glead.first[i];
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        }
        Laurent t = monomial(e, rlead.second / glead.second);
        h += t;
        r = r - rhs * t;
    }
    return h;
}

std::string Laurent::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first_term) os << " + ";
        first_term = false;
        bool has_var = false;
        std::ostringstream mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (has_var) mono << "*";
            has_var = true;
            if (static_cast<size_t>(i) < names.size()) {
                mono << names[i];
            } else {
                mono << "x" << (i + 1);
            }
            if (e[i] != 1) mono << "^" << e[i];
        }
        if (!has_var) {
            os << rational_to_string(c);
        } else if (c == 1) {
            os << mono.str();
        } else {
            os << rational_to_string(c) << "*" << mono.str();
        }
    }
    return os.str();
}

}  // namespace qclaw
