#ifndef LILRS_MATRIX_HPP
#define LILRS_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace lilrs {

/// Dense row-major matrix over an exact field scalar. The scalar type must
/// provide +, -, *, ==, is_zero() and inverse(); a default-constructed
/// scalar must act as an absorbing zero (FieldElement does).
template <class T>
class Matrix {
   public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t r, size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(size_t r, size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::vector<T> row(size_t r) const {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    void set_row(size_t r, const std::vector<T>& v) {
        assert(v.size() == cols_);
        std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

   private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Matrix<T> r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Matrix<T> r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.cols() == b.rows());
    Matrix<T> r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0);
    const size_t cols = a.rows() > 0 ? a.cols() : b.cols();
    Matrix<T> r(a.rows() + b.rows(), cols);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < cols; ++j) r(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < cols; ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

/// In-place reduced row echelon form. Pivoting is deterministic: leftmost
/// column, first nonzero row. Returns the rank; pivot column indices are
/// appended to *pivots when given.
template <class T>
size_t rref(Matrix<T>& M, std::vector<size_t>* pivots = nullptr) {
    size_t r = 0;
    for (size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        size_t p = r;
        while (p < M.rows() && M(p, c).is_zero()) ++p;
        if (p == M.rows()) continue;
        M.swap_rows(p, r);
        const T inv = M(r, c).inverse();
        for (size_t j = c; j < M.cols(); ++j) M(r, j) = M(r, j) * inv;
        for (size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c).is_zero()) continue;
            const T f = M(i, c);
            for (size_t j = c; j < M.cols(); ++j) M(i, j) = M(i, j) - f * M(r, j);
        }
        if (pivots != nullptr) pivots->push_back(c);
        ++r;
    }
    return r;
}

template <class T>
size_t rank(Matrix<T> M) {
    return rref(M);
}

/// Exact solution of A x = b: consistency flag, one particular solution and
/// a basis of the nullspace (free-column vectors from the RREF).
template <class T>
struct LinearSolution {
    bool consistent = false;
    std::vector<T> particular;
    std::vector<std::vector<T>> nullspace;
};

template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& A, const std::vector<T>& b, const T& zero, const T& one) {
    assert(b.size() == A.rows());
    Matrix<T> aug(A.rows(), A.cols() + 1, zero);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    std::vector<size_t> pivots;
    rref(aug, &pivots);

    LinearSolution<T> sol;
    sol.consistent = pivots.empty() || pivots.back() != A.cols();
    if (!sol.consistent) return sol;

    std::vector<size_t> pivot_of_col(A.cols(), static_cast<size_t>(-1));
    for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = r;

    sol.particular.assign(A.cols(), zero);
    for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, A.cols());

    for (size_t c = 0; c < A.cols(); ++c) {
        if (pivot_of_col[c] != static_cast<size_t>(-1)) continue;
        std::vector<T> v(A.cols(), zero);
        v[c] = one;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - aug(r, c);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

/// Nullspace basis of A (homogeneous system).
template <class T>
std::vector<std::vector<T>> nullspace_basis(const Matrix<T>& A, const T& zero, const T& one) {
    return solve_linear(A, std::vector<T>(A.rows(), zero), zero, one).nullspace;
}

}  // namespace lilrs

#endif
