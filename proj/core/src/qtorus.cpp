#include "qclaw/qtorus.hpp"

#include <sstream>

#include "qclaw/errors.hpp"

namespace qclaw {

ToricFrame::ToricFrame(IntMat commutation, std::string frame_id)
    : commutation_(std::move(commutation)), frame_id_(std::move(frame_id)) {
    if (!commutation_.is_skew_symmetric()) {
        for (int i = 0; i < commutation_.rows(); ++i)
            for (int j = 0; j < commutation_.cols(); ++j)
                if (commutation_.at(i, j) != -commutation_.at(j, i))
                    throw NotSkewSymmetricError("commutation matrix is not skew-symmetric", i, j);
        throw NotSkewSymmetricError("commutation matrix is not square", 0, 0);
    }
}

long long ToricFrame::skew_form(const ExponentVec& a, const ExponentVec& b) const {
    const int m = rank();
    if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m)
        throw DimensionError("exponent vector length does not match frame rank");
    long long s = 0;
    for (int i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < m; ++j) {
            if (b[j] != 0) s += a[i] * commutation_.at(i, j) * b[j];
        }
    }
    return s;
}

FramePtr make_frame(IntMat commutation, std::string frame_id) {
    return std::make_shared<const ToricFrame>(std::move(commutation), std::move(frame_id));
}

std::pair<QCoeff, ExponentVec> monomial_mul(const ToricFrame& frame, const ExponentVec& a,
                                            const ExponentVec& b) {
    const long long s = frame.skew_form(a, b);
    ExponentVec sum(a.size());
    for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    return {QCoeff::q_power(s), std::move(sum)};
}

QCoeff ordered_basis_unit(const ToricFrame& frame, const ExponentVec& a) {
    const int m = frame.rank();
    if (static_cast<int>(a.size()) != m)
        throw DimensionError("exponent vector length does not match frame rank");
    long long s = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) s += a[i] * a[j] * frame.commutation().at(i, j);
    return QCoeff::q_power(s);
}

TorusElement TorusElement::one(FramePtr frame) {
    const int m = frame->rank();
    return monomial(std::move(frame), ExponentVec(m, 0));
}

TorusElement TorusElement::monomial(FramePtr frame, ExponentVec exp, QCoeff coeff) {
    TorusElement out(std::move(frame));
    if (static_cast<int>(exp.size()) != out.frame_->rank())
        throw DimensionError("exponent vector length does not match frame rank");
    if (!coeff.is_zero()) out.terms_.emplace(std::move(exp), std::move(coeff));
    return out;
}

TorusElement TorusElement::generator(FramePtr frame, int index) {
    ExponentVec e(frame->rank(), 0);
    if (index < 0 || index >= frame->rank()) throw IndexError("generator index out of range");
    e[index] = 1;
    return monomial(std::move(frame), std::move(e));
}

TorusElement TorusElement::reinterpret(FramePtr frame, const TorusElement& x) {
    if (frame->rank() != x.rank()) throw DimensionError("frame rank mismatch in reinterpret");
    TorusElement out(std::move(frame));
    out.terms_ = x.terms_;
    return out;
}

void TorusElement::check_same_frame(const TorusElement& rhs) const {
    if (!frame_ || !rhs.frame_) throw FrameMismatchError("torus element without frame");
    if (frame_ != rhs.frame_ && frame_->commutation() != rhs.frame_->commutation())
        throw FrameMismatchError("torus elements attached to different frames");
}

void TorusElement::add_term(const ExponentVec& exp, const QCoeff& c) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElement TorusElement::operator-() const {
    TorusElement out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

TorusElement TorusElement::operator+(const TorusElement& rhs) const {
    check_same_frame(rhs);
    TorusElement out(*this);
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
    *this = *this + rhs;
    return *this;
}

TorusElement TorusElement::operator-(const TorusElement& rhs) const { return *this + (-rhs); }

TorusElement TorusElement::operator*(const TorusElement& rhs) const {
    check_same_frame(rhs);
    TorusElement out(frame_);
    ExponentVec e(frame_->rank());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            const long long s = frame_->skew_form(ea, eb);
            for (int i = 0; i < frame_->rank(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb * QCoeff::q_power(s));
        }
    }
    return out;
}

TorusElement TorusElement::scalar_mul(const QCoeff& c) const {
    TorusElement out(frame_);
    if (c.is_zero()) return out;
    for (const auto& [e, t] : terms_) out.terms_.emplace(e, t * c);
    return out;
}

TorusElement TorusElement::pow(long long e) const {
    TorusElement out = one(frame_);
    for (long long i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool TorusElement::operator==(const TorusElement& rhs) const {
    if (frame_ != rhs.frame_) {
        if (!frame_ || !rhs.frame_) return false;
        if (frame_->commutation() != rhs.frame_->commutation()) return false;
    }
    return terms_ == rhs.terms_;
}

namespace {

// Componentwise support box of a candidate quotient; empty -> not divisible.
// Per-coordinate extreme graded parts multiply without collapse (the torus is
// a domain), so any exact quotient h of y = g*h satisfies, coordinatewise,
// min(y) = min(g)+min(h) and max(y) = max(g)+max(h).
bool quotient_box(const TorusElement& y, const TorusElement& g, ExponentVec& lo, ExponentVec& hi) {
    const int m = y.rank();
    lo.assign(m, 0);
    hi.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        long long ymin = 0, ymax = 0, gmin = 0, gmax = 0;
        bool first = true;
        for (const auto& [e, c] : y.terms()) {
            if (first || e[i] < ymin) ymin = e[i];
            if (first || e[i] > ymax) ymax = e[i];
            first = false;
        }
        first = true;
        for (const auto& [e, c] : g.terms()) {
            if (first || e[i] < gmin) gmin = e[i];
            if (first || e[i] > gmax) gmax = e[i];
            first = false;
        }
        lo[i] = ymin - gmin;
        hi[i] = ymax - gmax;
        if (lo[i] > hi[i]) return false;
    }
    return true;
}

}  // namespace

std::optional<TorusElement> TorusElement::try_left_divide(const TorusElement& g) const {
    check_same_frame(g);
    if (g.is_zero()) throw NotDivisibleError("division by zero torus element");
    if (is_zero()) return zero(frame_);
    ExponentVec lo, hi;
    if (!quotient_box(*this, g, lo, hi)) return std::nullopt;
    const int m = frame_->rank();
    const auto& glead = *g.terms_.rbegin();
    TorusElement r(*this);
    TorusElement h(frame_);
    ExponentVec e(m);
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        for (int i = 0; i < m; ++i) {
            e[i] = rlead.first[i] - glead.first[i];
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        }
        // g * (c M(e)) has leading term lc(g) * c * q^{L(lg,e)/2} M(lg+e)
        const QCoeff denom = glead.second * QCoeff::q_power(frame_->skew_form(glead.first, e));
        auto c = rlead.second.divide_exact(denom);
        if (!c) return std::nullopt;
        TorusElement t = monomial(frame_, e, *c);
        h += t;
        r = r - g * t;
    }
    return h;
}

std::optional<TorusElement> TorusElement::try_right_divide(const TorusElement& g) const {
    check_same_frame(g);
    if (g.is_zero()) throw NotDivisibleError("division by zero torus element");
    if (is_zero()) return zero(frame_);
    ExponentVec lo, hi;
    if (!quotient_box(*this, g, lo, hi)) return std::nullopt;
    const int m = frame_->rank();
    const auto& glead = *g.terms_.rbegin();
    TorusElement r(*this);
    TorusElement h(frame_);
    ExponentVec e(m);
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        for (int i = 0; i < m; ++i) {
            e[i] = rlead.first[i] - glead.first[i];
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        }
        const QCoeff denom = glead.second * QCoeff::q_power(frame_->skew_form(e, glead.first));
        auto c = rlead.second.divide_exact(denom);
        if (!c) return std::nullopt;
        TorusElement t = monomial(frame_, e, *c);
        h += t;
        r = r - t * g;
    }
    return h;
}

TorusElement TorusElement::left_divide_exact(const TorusElement& g) const {
    auto h = try_left_divide(g);
    if (!h) throw NotDivisibleError("no exact left quotient in the quantum torus");
    return *h;
}

TorusElement TorusElement::right_divide_exact(const TorusElement& g) const {
    auto h = try_right_divide(g);
    if (!h) throw NotDivisibleError("no exact right quotient in the quantum torus");
    return *h;
}

Decomposition TorusElement::decompose_along(int k) const {
    const int m = frame_->rank();
    if (k < 0 || k >= m) throw IndexError("decomposition direction out of range");
    Decomposition dec;
    dec.direction = k;
    dec.frame = frame_;
    ExponentVec ek(m, 0);
    ek[k] = 1;
    for (const auto& [v, c] : terms_) {
        const long long j = v[k];
        ExponentVec rest(v);
        rest[k] = 0;
        // c M(v) = c q^{-j L(e_k, rest)/2} M(j e_k) M(rest)
        const long long s = frame_->skew_form(ek, rest);
        auto it = dec.parts.find(j);
        if (it == dec.parts.end())
            it = dec.parts.emplace(j, TorusElement::zero(frame_)).first;
        it->second.add_term(rest, c * QCoeff::q_power(-j * s));
        if (it->second.is_zero()) dec.parts.erase(it);
    }
    return dec;
}

TorusElement Decomposition::reassemble() const {
    TorusElement out = TorusElement::zero(frame);
    for (const auto& [j, part] : parts) {
        ExponentVec e(frame->rank(), 0);
        e[direction] = j;
        out += TorusElement::monomial(frame, std::move(e)) * part;
    }
    return out;
}

Laurent TorusElement::specialize_q1() const {
    Laurent out(frame_ ? frame_->rank() : 0);
    for (const auto& [e, c] : terms_) {
        Rational v = c.eval_at_one();
        if (v != 0) out += Laurent::monomial(e, v);
    }
    return out;
}

std::optional<long long> TorusElement::p_valuation() const {
    std::optional<long long> best;
    for (const auto& [e, c] : terms_) {
        auto v = c.p_valuation();  // finite: stored coefficients are nonzero
        if (!best || *v < *best) best = *v;
        if (*best == 0) break;
    }
    return best;
}

bool TorusElement::is_p_divisible() const {
    auto v = p_valuation();
    return !v || *v >= 1;
}

std::string TorusElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ") * M[";
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << "]";
    }
    return os.str();
}

}  // namespace qclaw
