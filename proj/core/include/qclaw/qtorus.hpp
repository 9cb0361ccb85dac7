#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclaw/intmat.hpp"
#include "qclaw/laurent.hpp"
#include "qclaw/qcoeff.hpp"

namespace qclaw {

/// One based quantum torus: a rank together with the skew-symmetric
/// commutation matrix of its normalized monomial basis M(c), c in Z^m.
/// Monomials multiply as M(a)M(b) = q^{L(a,b)/2} M(a+b) with
/// L(a,b) = a^T Lambda b.
class ToricFrame {
public:
    ToricFrame(IntMat commutation, std::string frame_id = "");

    int rank() const { return commutation_.rows(); }
    const IntMat& commutation() const { return commutation_; }
    const std::string& frame_id() const { return frame_id_; }

    /// a^T Lambda b
    long long skew_form(const ExponentVec& a, const ExponentVec& b) const;

private:
    IntMat commutation_;
    std::string frame_id_;
};

using FramePtr = std::shared_ptr<const ToricFrame>;

FramePtr make_frame(IntMat commutation, std::string frame_id = "");

/// M(a)M(b) in the given frame: the q-power prefactor and the exponent sum.
std::pair<QCoeff, ExponentVec> monomial_mul(const ToricFrame& frame, const ExponentVec& a,
                                            const ExponentVec& b);

/// The unit u with X_1^{a_1} ... X_m^{a_m} = u * M(a): the conversion
/// between the ordered-product basis and the normalized basis.
QCoeff ordered_basis_unit(const ToricFrame& frame, const ExponentVec& a);

struct Decomposition;

/// Finite R-linear combination of basis monomials of one frame.
class TorusElement {
public:
    TorusElement() = default;
    explicit TorusElement(FramePtr frame) : frame_(std::move(frame)) {}

    static TorusElement zero(FramePtr frame) { return TorusElement(std::move(frame)); }
    static TorusElement one(FramePtr frame);
    static TorusElement monomial(FramePtr frame, ExponentVec exp, QCoeff coeff = QCoeff::one());
    /// M(e_i)
    static TorusElement generator(FramePtr frame, int index);
    /// Same term map re-attached to a different frame of equal rank.
    static TorusElement reinterpret(FramePtr frame, const TorusElement& x);

    const FramePtr& frame() const { return frame_; }
    int rank() const { return frame_ ? frame_->rank() : 0; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    TorusElement operator-() const;
    TorusElement operator+(const TorusElement& rhs) const;
    TorusElement operator-(const TorusElement& rhs) const;
    TorusElement operator*(const TorusElement& rhs) const;
    TorusElement& operator+=(const TorusElement& rhs);
    TorusElement scalar_mul(const QCoeff& c) const;
    TorusElement pow(long long e) const;  // e >= 0

    /// Equality is equality of commutation data and term maps.
    bool operator==(const TorusElement& rhs) const;
    bool operator!=(const TorusElement& rhs) const { return !(*this == rhs); }

    /// Quotient h with g*h = *this, if it exists in the torus.
    std::optional<TorusElement> try_left_divide(const TorusElement& g) const;
    /// Quotient h with h*g = *this, if it exists in the torus.
    std::optional<TorusElement> try_right_divide(const TorusElement& g) const;
    TorusElement left_divide_exact(const TorusElement& g) const;   // throws NotDivisibleError
    TorusElement right_divide_exact(const TorusElement& g) const;  // throws NotDivisibleError

    /// Unique expansion *this = sum_j M(e_k)^j c_j with the c_j supported on
    /// exponent vectors whose k-th entry is zero.
    Decomposition decompose_along(int k) const;

    /// Coefficient-wise q^{1/2} -> 1; lands in the commutative Laurent ring.
    Laurent specialize_q1() const;

    /// Minimum p-valuation over coefficients; nullopt encodes infinity (zero).
    std::optional<long long> p_valuation() const;
    bool is_p_divisible() const;

    /// Terms in ascending lex order, "(<coeff>) * M[c_1,...,c_m]".
    std::string to_string() const;

    const std::map<ExponentVec, QCoeff>& terms() const { return terms_; }

private:
    void add_term(const ExponentVec& exp, const QCoeff& c);
    void check_same_frame(const TorusElement& rhs) const;

    FramePtr frame_;
    std::map<ExponentVec, QCoeff> terms_;
};

inline TorusElement operator*(const QCoeff& c, const TorusElement& x) { return x.scalar_mul(c); }

struct Decomposition {
    int direction = 0;                        // index k
    FramePtr frame;
    std::map<long long, TorusElement> parts;  // j -> c_j, all with k-th entry 0

    /// sum_j M(e_k)^j c_j; exact inverse of decompose_along.
    TorusElement reassemble() const;
};

}  // namespace qclaw
