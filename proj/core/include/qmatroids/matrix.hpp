#pragma once

// Dense matrices over a Field or ExtField.  Vectors are rows throughout the
// library: a subspace is the row space of its basis matrix, and maps act on
// the right (v -> v * A).

#include <cstddef>
#include <memory>
#include <vector>

#include "qmatroids/gf.hpp"

namespace qmatroids {

template <class F>
concept FieldArithmetic = requires(const F& f, Elem a, Elem b) {
    { f.add(a, b) } -> std::convertible_to<Elem>;
    { f.sub(a, b) } -> std::convertible_to<Elem>;
    { f.neg(a) } -> std::convertible_to<Elem>;
    { f.mul(a, b) } -> std::convertible_to<Elem>;
    { f.inv(a) } -> std::convertible_to<Elem>;
};

template <FieldArithmetic F>
class Matrix {
public:
    Matrix(std::shared_ptr<const F> field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    Matrix(std::shared_ptr<const F> field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw InvalidArgument("matrix entry count does not match its shape");
    }

    static Matrix identity(std::shared_ptr<const F> field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const std::shared_ptr<const F>& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Elem>& entries() const { return a_; }

    std::vector<Elem> row(std::size_t r) const {
        return std::vector<Elem>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    }
    void set_row(std::size_t r, const std::vector<Elem>& v) {
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw InvalidArgument("DimensionMismatch: cannot multiply " + shape_str() + " by " + rhs.shape_str());
        Matrix out(field_, rows_, rhs.cols_);
        const F& f = *field_;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                Elem aik = at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out.at(i, j) = f.add(out.at(i, j), f.mul(aik, rhs.at(k, j)));
            }
        return out;
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    std::shared_ptr<const F> field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <FieldArithmetic F>
struct RrefResult {
    Matrix<F> matrix;            // same shape, zero rows at the bottom
    std::size_t rank;
    std::vector<std::size_t> pivots; // pivot column per pivot row
};

// Reduced row echelon form by Gauss-Jordan elimination with first-nonzero
// pivoting, which keeps the result deterministic.
template <FieldArithmetic F>
RrefResult<F> rref(Matrix<F> m) {
    const F& f = *m.field();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Elem s = f.inv(m.at(r, c));
        if (s != 1)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Elem t = m.at(i, c);
            if (t == 0) continue;
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

template <FieldArithmetic F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

// Rows spanning the right kernel {x : M x^T = 0}.
template <FieldArithmetic F>
Matrix<F> nullspace(const Matrix<F>& m) {
    auto rr = rref(m);
    const F& f = *m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix<F> ker(m.field(), free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        ker.at(i, fc) = 1;
        for (std::size_t pr = 0; pr < rr.rank; ++pr)
            ker.at(i, rr.pivots[pr]) = f.neg(rr.matrix.at(pr, fc));
    }
    return ker;
}

// Reinterpret a base field matrix over an extension of that field; entry
// indices carry over unchanged because base elements embed as constants.
inline Matrix<ExtField> lift(const Matrix<Field>& m, ExtFieldPtr ext) {
    if (!ext || !(*m.field() == *ext->base()))
        throw InvalidArgument("FieldMismatch: matrix is not over the base of the extension");
    std::vector<Elem> entries = m.entries();
    return Matrix<ExtField>(std::move(ext), m.rows(), m.cols(), std::move(entries));
}

// Expansion of a vector over GF(q^m) into an n x m matrix over GF(q): row i
// holds the coordinates of v_i with respect to `basis` (power basis by
// default).
Matrix<Field> gamma_expand(const ExtFieldPtr& ext, const std::vector<Elem>& v,
                           const std::vector<Elem>* basis = nullptr);

} // namespace qmatroids
