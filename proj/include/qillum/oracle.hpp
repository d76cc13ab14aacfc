// Search-based ground truth: multi-start derivative-free optimization of
// measurements on the unitary manifold, for accessible information (max)
// and post-measurement conditional entropy (min). Lower-bound certifiers:
// they report the best measurement found, never a proof of optimality.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qillum/density.hpp"
#include "qillum/eig.hpp"
#include "qillum/entropy.hpp"
#include "qillum/illumination.hpp"
#include "qillum/info_measures.hpp"
#include "qillum/matrix.hpp"
#include "qillum/povm.hpp"
#include "qillum/rng.hpp"

namespace qillum {

// Knobs for the multi-start search. Every random draw descends from `seed`,
// so identical settings reproduce identical results bit for bit.
struct search_settings {
    std::uint64_t seed = 1;
    int restarts = 16;          // independent searches, seeded per restart
    int grid_resolution = 8;    // random initial candidates per restart
    int refine_iterations = 200;
    double convergence_tol = 1e-12;

    void validate() const {
        if (restarts < 1) throw std::invalid_argument("search_settings: restarts must be >= 1");
        if (grid_resolution < 1)
            throw std::invalid_argument("search_settings: grid_resolution must be >= 1");
        if (refine_iterations < 0)
            throw std::invalid_argument("search_settings: refine_iterations must be >= 0");
        if (!(convergence_tol > 0.0))
            throw std::invalid_argument("search_settings: convergence_tol must be > 0");
    }
};

namespace detail {

// exp(i·t·h) for Hermitian h, via its eigendecomposition
inline complex_matrix unitary_exp(const complex_matrix& h, double t) {
    const eig_result e = hermitian_eig(h);
    const std::size_t n = h.rows();
    complex_matrix phases(n, n);
    for (std::size_t k = 0; k < n; ++k)
        phases(k, k) = std::polar(1.0, t * e.values.values[k]);
    return e.vectors * phases * e.vectors.adjoint();
}

// ⟨v|m|v⟩ for a matrix column
inline double expectation(const complex_matrix& m, const complex_matrix& u, std::size_t col) {
    complexd acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += std::conj(u(i, col)) * m(i, j) * u(j, col);
    return acc.real();
}

struct search_point {
    complex_matrix u;
    double value;
};

// One local search: perturb by exp(i·ε·H) with random Hermitian generators
// H and a geometric ε schedule from 0.5 down to 1e−4; keep improvements.
template <typename F>
search_point hill_climb(const F& objective, search_point start, bool maximize,
                        const search_settings& s, rng_stream& rng) {
    search_point best = std::move(start);
    if (s.refine_iterations == 0) return best;
    const std::size_t dim = best.u.rows();
    const double step_hi = 0.5, step_lo = 1e-4;
    const double decay = std::pow(step_lo / step_hi, 1.0 / s.refine_iterations);
    double step = step_hi;
    for (int it = 0; it < s.refine_iterations; ++it) {
        if (step < s.convergence_tol) break;
        complex_matrix cand = best.u * unitary_exp(random_hermitian(dim, rng), step);
        const double v = objective(cand);
        if (maximize ? v > best.value : v < best.value) {
            best.u = std::move(cand);
            best.value = v;
        }
        step *= decay;
    }
    return best;
}

// Multi-start driver. Also reports the spread (max − min) of the objective
// over the unrefined initial candidates — the flatness diagnostic.
template <typename F>
std::pair<search_point, double> multi_start(std::size_t dim, const F& objective, bool maximize,
                                            const search_settings& s,
                                            const std::vector<complex_matrix>& informed_starts) {
    s.validate();
    constexpr double inf = std::numeric_limits<double>::infinity();
    double initial_lo = inf, initial_hi = -inf;
    search_point global{complex_matrix::identity(dim), maximize ? -inf : inf};
    for (int r = 0; r < s.restarts; ++r) {
        rng_stream rng(derive_seed(s.seed, static_cast<std::uint64_t>(r)));
        search_point start{complex_matrix::identity(dim), maximize ? -inf : inf};
        auto consider = [&](complex_matrix u) {
            const double v = objective(u);
            initial_lo = std::min(initial_lo, v);
            initial_hi = std::max(initial_hi, v);
            if (maximize ? v > start.value : v < start.value) start = {std::move(u), v};
        };
        if (r == 0)
            for (const auto& u : informed_starts) consider(u);
        for (int g = 0; g < s.grid_resolution; ++g) consider(random_unitary(dim, rng));
        search_point refined = hill_climb(objective, std::move(start), maximize, s, rng);
        if (maximize ? refined.value > global.value : refined.value < global.value)
            global = std::move(refined);
    }
    return {std::move(global), initial_hi - initial_lo};
}

}  // namespace detail

struct accessible_info_result {
    double bits;
    rank_one_measurement measurement;
};

// max_M I(X:B) over rank-1 projective measurements of the codeword. The
// eigenbasis of the average state joins the candidate pool, which is exact
// for commuting ensembles; random restarts cover the rest.
inline accessible_info_result optimize_accessible_info(const codeword_ensemble& e,
                                                       const search_settings& s) {
    const std::size_t d = e.dim();
    const complex_matrix rho0 = e.codeword0.matrix();
    const complex_matrix rho1 = e.codeword1.matrix();
    const auto objective = [&](const complex_matrix& u) {
        spectrum joint, marginal_b;
        marginal_b.values.assign(d, 0.0);
        for (std::size_t b = 0; b < d; ++b) {
            const double p0b = e.p0 * detail::expectation(rho0, u, b);
            const double p1b = e.p1 * detail::expectation(rho1, u, b);
            joint.values.push_back(p0b);
            joint.values.push_back(p1b);
            marginal_b.values[b] = p0b + p1b;
        }
        spectrum marginal_x;
        marginal_x.values = {e.p0, e.p1};
        return shannon_entropy(marginal_x) + shannon_entropy(marginal_b) - shannon_entropy(joint);
    };
    const std::vector<complex_matrix> informed = {hermitian_eig(e.average().matrix()).vectors};
    auto [best, flatness] = detail::multi_start(d, objective, true, s, informed);
    (void)flatness;
    return {best.value, rank_one_measurement::from_unitary_columns(best.u)};
}

struct conditional_entropy_result {
    double bits;
    rank_one_measurement measurement;
    double flatness;  // objective spread over the sampled starting points
};

// min_M Σ_b q_b S(ρ_A|b) over rank-1 projective measurements on B
inline conditional_entropy_result optimize_conditional_entropy(const density_operator& rho,
                                                               std::size_t dim_a,
                                                               std::size_t dim_b,
                                                               const search_settings& s) {
    if (rho.dim() != dim_a * dim_b)
        throw std::invalid_argument("optimize_conditional_entropy: dimension mismatch");
    const complex_matrix& joint = rho.matrix();
    const auto objective = [&](const complex_matrix& u) {
        double total = 0.0;
        for (std::size_t b = 0; b < dim_b; ++b) {
            // unnormalized conditional state from the projector onto column b
            complex_matrix cond(dim_a, dim_a);
            for (std::size_t i = 0; i < dim_a; ++i)
                for (std::size_t j = 0; j < dim_a; ++j) {
                    complexd acc = 0.0;
                    for (std::size_t k = 0; k < dim_b; ++k)
                        for (std::size_t l = 0; l < dim_b; ++l)
                            acc += joint(i * dim_b + k, j * dim_b + l) * u(l, b) *
                                   std::conj(u(k, b));
                    cond(i, j) = acc;
                }
            const double q = cond.trace().real();
            if (q <= 1e-14) continue;
            total += q * shannon_entropy(hermitian_eig((1.0 / q) * cond).values);
        }
        return total;
    };
    const std::vector<complex_matrix> informed = {
        hermitian_eig(partial_trace(joint, dim_a, dim_b, subsystem::b)).vectors};
    auto [best, flatness] = detail::multi_start(dim_b, objective, false, s, informed);
    return {best.value, rank_one_measurement::from_unitary_columns(best.u), flatness};
}

// δ(A|B) = S(B) − S(AB) + min_M S(A|M): fully search-based discord
inline double brute_force_discord(const density_operator& rho, std::size_t dim_a,
                                  std::size_t dim_b, const search_settings& s) {
    const double s_b = von_neumann_entropy(partial_trace(rho, dim_a, dim_b, subsystem::b));
    const double s_ab = von_neumann_entropy(rho);
    return s_b - s_ab + optimize_conditional_entropy(rho, dim_a, dim_b, s).bits;
}

}  // namespace qillum
