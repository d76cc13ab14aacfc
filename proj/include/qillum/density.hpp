// Validated density operators, partial traces and von Neumann entropy.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "qillum/eig.hpp"
#include "qillum/entropy.hpp"
#include "qillum/matrix.hpp"

namespace qillum {

inline constexpr double density_tol = 1e-10;

enum class subsystem { a, b };

// Trace-one positive Hermitian operator. Validation happens once at
// construction (Hermiticity, unit trace, positive semidefiniteness via the
// full spectrum); the spectrum is kept so entropy costs no second
// diagonalization. Immutable after construction.
class density_operator {
public:
    explicit density_operator(complex_matrix m) : matrix_(std::move(m)) {
        if (!matrix_.is_square() || matrix_.rows() == 0)
            throw std::invalid_argument("density_operator: matrix must be square and non-empty");
        if (matrix_.hermiticity_error() > density_tol)
            throw std::invalid_argument("density_operator: matrix is not Hermitian within tolerance");
        if (std::abs(matrix_.trace() - complexd{1.0}) > density_tol)
            throw std::invalid_argument("density_operator: trace differs from one");
        eigs_ = hermitian_eig(matrix_).values;
        if (eigs_.values.back() < -density_tol)
            throw std::invalid_argument("density_operator: negative eigenvalue beyond tolerance");
    }

    std::size_t dim() const { return matrix_.rows(); }
    const complex_matrix& matrix() const { return matrix_; }
    const spectrum& eigenvalues() const { return eigs_; }

private:
    complex_matrix matrix_;
    spectrum eigs_;
};

// Partial trace of an operator on A (x) B; keeps the requested factor.
inline complex_matrix partial_trace(const complex_matrix& m, std::size_t dim_a, std::size_t dim_b,
                                    subsystem keep) {
    if (!m.is_square() || m.rows() != dim_a * dim_b)
        throw std::invalid_argument("partial_trace: dimension mismatch");
    if (keep == subsystem::a) {
        complex_matrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j)
                for (std::size_t k = 0; k < dim_b; ++k)
                    out(i, j) += m(i * dim_b + k, j * dim_b + k);
        return out;
    }
    complex_matrix out(dim_b, dim_b);
    for (std::size_t i = 0; i < dim_b; ++i)
        for (std::size_t j = 0; j < dim_b; ++j)
            for (std::size_t k = 0; k < dim_a; ++k)
                out(i, j) += m(k * dim_b + i, k * dim_b + j);
    return out;
}

inline density_operator partial_trace(const density_operator& rho, std::size_t dim_a,
                                      std::size_t dim_b, subsystem keep) {
    return density_operator(partial_trace(rho.matrix(), dim_a, dim_b, keep));
}

// tr_B(rho (I (x) op)); for op = POVM element this is the unnormalized
// conditional state of A, with the outcome probability on its trace.
inline complex_matrix partial_expectation(const complex_matrix& rho_ab, std::size_t dim_a,
                                          std::size_t dim_b, const complex_matrix& op_b) {
    if (!rho_ab.is_square() || rho_ab.rows() != dim_a * dim_b)
        throw std::invalid_argument("partial_expectation: joint dimension mismatch");
    if (!op_b.is_square() || op_b.rows() != dim_b)
        throw std::invalid_argument("partial_expectation: operator dimension mismatch");
    complex_matrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_a; ++j) {
            complexd acc = 0.0;
            for (std::size_t k = 0; k < dim_b; ++k)
                for (std::size_t l = 0; l < dim_b; ++l)
                    acc += rho_ab(i * dim_b + k, j * dim_b + l) * op_b(l, k);
            out(i, j) = acc;
        }
    return out;
}

// S(rho) = -sum lambda log2 lambda, in bits
inline double von_neumann_entropy(const density_operator& rho) {
    return shannon_entropy(rho.eigenvalues());
}

// tr(rho^2); equals 1 exactly on pure states
inline double purity(const density_operator& rho) {
    const complex_matrix& m = rho.matrix();
    double p = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            p += std::norm(m(i, j));
    return p;
}

}  // namespace qillum
