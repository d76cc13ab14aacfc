// Two-qubit entanglement measures: Wootters concurrence and entanglement of
// formation, used to locate the separability threshold of the probe state.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qillum/density.hpp"
#include "qillum/eig.hpp"
#include "qillum/entropy.hpp"
#include "qillum/matrix.hpp"

namespace qillum {

namespace detail {

// V f(Λ) V† from the eigendecomposition of a Hermitian matrix
template <typename F>
complex_matrix hermitian_function(const eig_result& e, F&& f) {
    const std::size_t n = e.vectors.rows();
    complex_matrix diag(n, n);
    for (std::size_t k = 0; k < n; ++k) diag(k, k) = f(e.values.values[k]);
    return e.vectors * diag * e.vectors.adjoint();
}

// clip eigenvalue rounding residue; anything genuinely negative is a bug
inline double clipped_sqrt(double x) {
    if (x < -1e-12) throw std::logic_error("clipped_sqrt: negative eigenvalue");
    return x > 0.0 ? std::sqrt(x) : 0.0;
}

}  // namespace detail

// Wootters concurrence C = max(0, s₁ − s₂ − s₃ − s₄), with s_i the
// descending square roots of the eigenvalues of ρ·ρ̃ and the spin-flipped
// state ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y), conjugation in the computational
// basis. ρ·ρ̃ is not Hermitian, but its eigenvalues equal those of the
// Hermitian matrix √ρ·ρ̃·√ρ, so everything stays in the Hermitian solver.
inline double concurrence(const density_operator& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("concurrence: need a two-qubit state");
    complex_matrix yy(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const complex_matrix flipped = yy * rho.matrix().conjugate() * yy;
    const complex_matrix sqrt_rho =
        detail::hermitian_function(hermitian_eig(rho.matrix()), detail::clipped_sqrt);
    const spectrum sq = hermitian_eig(sqrt_rho * flipped * sqrt_rho).values;
    double c = detail::clipped_sqrt(sq.values[0]);
    for (std::size_t k = 1; k < sq.size(); ++k) c -= detail::clipped_sqrt(sq.values[k]);
    return std::max(0.0, c);
}

// EoF = h((1 + √(1−C²))/2) in bits; zero exactly when C = 0
inline double entanglement_of_formation(const density_operator& rho) {
    const double c = concurrence(rho);
    if (c == 0.0) return 0.0;
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

struct entanglement_report {
    double concurrence;
    double eof;
};

inline entanglement_report make_entanglement_report(const density_operator& rho) {
    entanglement_report r{};
    r.concurrence = concurrence(rho);
    r.eof = r.concurrence == 0.0
                ? 0.0
                : binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - r.concurrence * r.concurrence))));
    return r;
}

}  // namespace qillum
