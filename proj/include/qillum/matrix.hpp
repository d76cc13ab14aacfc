// Dense complex matrix algebra for small operators (target dims <= ~100).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qillum {

using complexd = std::complex<double>;

// Row-major dense complex matrix with value semantics. Carrier for every
// operator in the library; no sparsity, no expression templates.
class complex_matrix {
public:
    complex_matrix() = default;

    complex_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    complex_matrix(std::initializer_list<std::initializer_list<complexd>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("complex_matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static complex_matrix zero(std::size_t rows, std::size_t cols) {
        return complex_matrix(rows, cols);
    }

    static complex_matrix identity(std::size_t n) {
        complex_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    complexd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const complexd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    complexd trace() const {
        require_square("trace");
        complexd t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    complex_matrix adjoint() const {
        complex_matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    // entrywise complex conjugate (no transpose)
    complex_matrix conjugate() const {
        complex_matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = std::conj(data_[k]);
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    // max |m(i,j) - conj(m(j,i))|; zero for exactly Hermitian input
    double hermiticity_error() const {
        require_square("hermiticity_error");
        double err = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return err;
    }

    complex_matrix& operator+=(const complex_matrix& rhs) {
        require_same_shape(rhs, "operator+=");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }

    complex_matrix& operator-=(const complex_matrix& rhs) {
        require_same_shape(rhs, "operator-=");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }

    complex_matrix& operator*=(complexd s) {
        for (auto& z : data_) z *= s;
        return *this;
    }

    friend complex_matrix operator+(complex_matrix a, const complex_matrix& b) { return a += b; }
    friend complex_matrix operator-(complex_matrix a, const complex_matrix& b) { return a -= b; }
    friend complex_matrix operator*(complex_matrix m, complexd s) { return m *= s; }
    friend complex_matrix operator*(complexd s, complex_matrix m) { return m *= s; }
    friend complex_matrix operator*(complex_matrix m, double s) { return m *= complexd(s); }
    friend complex_matrix operator*(double s, complex_matrix m) { return m *= complexd(s); }

    friend complex_matrix operator*(const complex_matrix& a, const complex_matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("complex_matrix: product dimension mismatch");
        complex_matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const complexd aik = a(i, k);
                if (aik == complexd{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

private:
    void require_square(const char* what) const {
        if (!is_square())
            throw std::invalid_argument(std::string("complex_matrix: ") + what + " requires a square matrix");
    }
    void require_same_shape(const complex_matrix& rhs, const char* what) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument(std::string("complex_matrix: ") + what + " shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complexd> data_;
};

// Kronecker product; dimensions multiply.
inline complex_matrix tensor(const complex_matrix& a, const complex_matrix& b) {
    complex_matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const complexd aij = a(i, j);
            if (aij == complexd{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

// max-entry magnitude of ab - ba
inline double commutator_norm(const complex_matrix& a, const complex_matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("commutator_norm: operands must be square with equal dimensions");
    return (a * b - b * a).max_abs();
}

// S|i>|j> = |j>|i> on two d-dimensional factors; S^2 = I
inline complex_matrix swap_operator(std::size_t d) {
    if (d < 2) throw std::invalid_argument("swap_operator: d must be >= 2");
    complex_matrix s(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            s(j * d + i, i * d + j) = 1.0;
    return s;
}

// |k><k| in dimension dim
inline complex_matrix basis_projector(std::size_t dim, std::size_t k) {
    if (k >= dim) throw std::invalid_argument("basis_projector: index out of range");
    complex_matrix p(dim, dim);
    p(k, k) = 1.0;
    return p;
}

// |v><v| from an amplitude vector (not normalized here)
inline complex_matrix outer(const std::vector<complexd>& v) {
    complex_matrix p(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            p(i, j) = v[i] * std::conj(v[j]);
    return p;
}

inline std::vector<complexd> column(const complex_matrix& m, std::size_t j) {
    std::vector<complexd> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

}  // namespace qillum
