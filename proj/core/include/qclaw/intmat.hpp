#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace qclaw {

/// Dense integer matrix, row-major.  Entries stay desk-scale, so plain
/// long long arithmetic is exact here.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    IntMat(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat transpose() const;
    IntMat operator*(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const = default;

    bool is_skew_symmetric() const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> a_;
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot).  Zero rows are dropped.  The result is the
/// canonical basis of the row lattice.
IntMat row_hnf(IntMat m);

/// Canonical basis (as rows) of the integer kernel {x in Z^cols : A x = 0}.
IntMat integer_kernel(const IntMat& a);

}  // namespace qclaw
