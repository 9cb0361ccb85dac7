#include "qclaw/intmat.hpp"

#include <cstdlib>
#include <sstream>

#include "qclaw/errors.hpp"

namespace qclaw {

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionError("ragged initializer for IntMat");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("IntMat product dimension mismatch");
    IntMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const long long v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

bool IntMat::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

namespace {

void swap_rows(IntMat& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// row a -= f * row b
void add_row(IntMat& m, int a, int b, long long f) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= f * m.at(b, j);
}

}  // namespace

IntMat row_hnf(IntMat m) {
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        // Euclidean elimination in this column below pivot_row.
        while (true) {
            int best = -1;
            for (int i = pivot_row; i < m.rows(); ++i) {
                if (m.at(i, col) != 0 &&
                    (best < 0 || std::llabs(m.at(i, col)) < std::llabs(m.at(best, col))))
                    best = i;
            }
            if (best < 0) break;
            swap_rows(m, pivot_row, best);
            bool done = true;
            for (int i = pivot_row + 1; i < m.rows(); ++i) {
                if (m.at(i, col) != 0) {
                    add_row(m, i, pivot_row, m.at(i, col) / m.at(pivot_row, col));
                    if (m.at(i, col) != 0) done = false;
                }
            }
            if (done) break;
        }
        if (m.at(pivot_row, col) == 0) continue;
        if (m.at(pivot_row, col) < 0) add_row(m, pivot_row, pivot_row, 2);  // negate
        // Reduce entries above the pivot into [0, pivot).
        const long long p = m.at(pivot_row, col);
        for (int i = 0; i < pivot_row; ++i) {
            long long f = m.at(i, col) / p;
            if (m.at(i, col) % p < 0) f -= 1;
            if (f != 0) add_row(m, i, pivot_row, f);
        }
        ++pivot_row;
    }
    IntMat out(pivot_row, m.cols());
    for (int i = 0; i < pivot_row; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

IntMat integer_kernel(const IntMat& a) {
    // Row-reduce [A^T | I]; rows whose A^T-part vanished carry a kernel basis.
    const int n = a.cols();  // kernel lives in Z^n
    const int k = a.rows();
    IntMat work(n, k + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) work.at(i, j) = a.at(j, i);
        work.at(i, k + i) = 1;
    }
    // HNF-style elimination restricted to the first k columns.
    int pivot_row = 0;
    for (int col = 0; col < k && pivot_row < n; ++col) {
        while (true) {
            int best = -1;
            for (int i = pivot_row; i < n; ++i) {
                if (work.at(i, col) != 0 &&
                    (best < 0 || std::llabs(work.at(i, col)) < std::llabs(work.at(best, col))))
                    best = i;
            }
            if (best < 0) break;
            swap_rows(work, pivot_row, best);
            bool done = true;
            for (int i = pivot_row + 1; i < n; ++i) {
                if (work.at(i, col) != 0) {
                    add_row(work, i, pivot_row, work.at(i, col) / work.at(pivot_row, col));
                    if (work.at(i, col) != 0) done = false;
                }
            }
            if (done) break;
        }
        if (work.at(pivot_row, col) != 0) ++pivot_row;
    }
    IntMat basis(n - pivot_row, n);
    for (int i = pivot_row; i < n; ++i)
        for (int j = 0; j < n; ++j) basis.at(i - pivot_row, j) = work.at(i, k + j);
    return row_hnf(basis);
}

}  // namespace qclaw
