// Complex Hermitian eigensolver: cyclic Jacobi with unitary plane rotations.
//
// Each rotation zeroes one off-diagonal entry a_pq. A diagonal phase factor
// first turns the complex 2x2 pivot block into a real symmetric one, which is
// then annihilated with the classic symmetric Schur pair (c, s). Sweeps run
// over all p < q until the off-diagonal Frobenius norm falls below 1e-13, or
// 100 sweeps, whichever comes first. Convergence is quadratic, so the final
// off-diagonal mass is usually far below the threshold.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qillum/entropy.hpp"
#include "qillum/matrix.hpp"

namespace qillum {

inline constexpr double hermitian_tol = 1e-10;
inline constexpr double eig_off_diagonal_tol = 1e-13;
inline constexpr int eig_max_sweeps = 100;

struct eig_result {
    spectrum values;         // real eigenvalues, descending
    complex_matrix vectors;  // orthonormal columns; values.values[k] <-> column k
};

namespace detail {

inline double off_diagonal_norm(const complex_matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

}  // namespace detail

inline eig_result hermitian_eig(const complex_matrix& h) {
    if (!h.is_square()) throw std::invalid_argument("hermitian_eig: matrix must be square");
    if (h.hermiticity_error() > hermitian_tol)
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within tolerance");

    const std::size_t n = h.rows();

    // exact symmetrization kills the rounding-level asymmetry allowed above
    complex_matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    complex_matrix v = complex_matrix::identity(n);

    for (int sweep = 0; sweep < eig_max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= eig_off_diagonal_tol) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const complexd beta = a(p, q);
                const double abs_beta = std::abs(beta);
                if (abs_beta == 0.0) continue;

                const complexd phase = beta / abs_beta;  // e^{i arg beta}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_beta);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // unitary R: r_pp = c*phase, r_pq = s*phase, r_qp = -s, r_qq = c
                // columns: a <- a R, v <- v R
                for (std::size_t i = 0; i < n; ++i) {
                    const complexd ap = a(i, p), aq = a(i, q);
                    a(i, p) = c * phase * ap - s * aq;
                    a(i, q) = s * phase * ap + c * aq;
                    const complexd vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * phase * vp - s * vq;
                    v(i, q) = s * phase * vp + c * vq;
                }
                // rows: a <- R^dagger a
                const complexd phase_c = std::conj(phase);
                for (std::size_t j = 0; j < n; ++j) {
                    const complexd ap = a(p, j), aq = a(q, j);
                    a(p, j) = c * phase_c * ap - s * aq;
                    a(q, j) = s * phase_c * ap + c * aq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    eig_result out;
    out.values.values.resize(n);
    out.vectors = complex_matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace qillum
