// Information rates of the two strategies: Holevo information, Shannon
// distinguishability of commuting ensembles, the per-channel mutual
// information of a concrete measurement, and the idler-first restricted
// protocol.

#pragma once

#include <cmath>
#include <stdexcept>

#include "qillum/density.hpp"
#include "qillum/entropy.hpp"
#include "qillum/illumination.hpp"
#include "qillum/matrix.hpp"
#include "qillum/povm.hpp"

namespace qillum {

inline constexpr double commuting_tol = 1e-10;

// χ = S(ρ̄) − Σ_x p_x S(ρ^(x)); upper bound on any measurement's mutual
// information, attained when the codewords commute.
inline double holevo_chi(const codeword_ensemble& e) {
    return von_neumann_entropy(e.average()) - e.p0 * von_neumann_entropy(e.codeword0) -
           e.p1 * von_neumann_entropy(e.codeword1);
}

// Accessible information of the two-codeword ensemble. Exact only for
// commuting codewords (measure in the common eigenbasis); anything else has
// no closed form here, so refuse rather than silently return the χ bound.
inline double shannon_distinguishability(const codeword_ensemble& e) {
    if (commutator_norm(e.codeword0.matrix(), e.codeword1.matrix()) > commuting_tol)
        throw std::domain_error(
            "shannon_distinguishability: codewords do not commute; no closed form — "
            "use optimize_accessible_info for a search-based lower bound");
    return holevo_chi(e);
}

// Mutual information between the encoded bit and the outcome of measuring
// the transmitted codeword with m: I(X:B) = H(X) + H(B) − H(X,B).
inline double classical_channel_mi(const codeword_ensemble& e, const povm& m) {
    if (m.dim() != e.dim())
        throw std::invalid_argument("classical_channel_mi: measurement dimension mismatch");
    const std::size_t n = m.outcomes();
    spectrum joint, marginal_b;
    joint.values.reserve(2 * n);
    marginal_b.values.assign(n, 0.0);
    const double prior[2] = {e.p0, e.p1};
    const density_operator* cw[2] = {&e.codeword0, &e.codeword1};
    for (int x = 0; x < 2; ++x)
        for (std::size_t b = 0; b < n; ++b) {
            const double pxb = prior[x] * (cw[x]->matrix() * m.element(b)).trace().real();
            joint.values.push_back(pxb);
            marginal_b.values[b] += pxb;
        }
    spectrum marginal_x;
    marginal_x.values = {e.p0, e.p1};
    return shannon_entropy(marginal_x) + shannon_entropy(marginal_b) - shannon_entropy(joint);
}

// Performance of the single-system strategy with a given probe. Codeword 1
// is proportional to the identity, so the ensemble always commutes and the
// distinguishability equals χ.
inline double conventional_performance(const illumination_config& cfg,
                                       const density_operator& probe) {
    return shannon_distinguishability(conventional_codewords(cfg, probe));
}

// I_c^max: any pure probe attains the optimum, so a basis state suffices.
inline double conventional_performance(const illumination_config& cfg) {
    return conventional_performance(cfg, density_operator(basis_projector(cfg.d, 0)));
}

// I_q: Holevo information of the entangled strategy, evaluated from the
// closed-form isotropic spectra (codeword 1 and the average are isotropic
// with weights 0 and p₀η; its own entropy is 2log₂d).
inline double quantum_performance(const illumination_config& cfg) {
    const double log2d = std::log2(static_cast<double>(cfg.d));
    const spectrum joint_avg = isotropic_spectra(cfg.d, cfg.p0 * cfg.eta).joint;
    const spectrum joint_present = isotropic_spectra(cfg.d, cfg.eta).joint;
    return shannon_entropy(joint_avg) - cfg.p0 * shannon_entropy(joint_present) -
           cfg.p1() * 2.0 * log2d;
}

// Idler-first protocol: measure the idler of Ψ_AB before transmission,
// collapse the signal to the pure state Ψ_A|b with probability q_b, then run
// the single-system strategy with that probe; I′_c = Σ_b q_b I_c(Ψ_A|b).
inline double restricted_performance(const illumination_config& cfg,
                                     const rank_one_measurement& m) {
    if (m.dim() != cfg.d)
        throw std::invalid_argument("restricted_performance: measurement dimension mismatch");
    const density_operator psi = maximally_entangled(cfg.d);
    double total = 0.0;
    for (std::size_t b = 0; b < m.outcomes(); ++b) {
        const complex_matrix cond = partial_expectation(psi.matrix(), cfg.d, cfg.d, m.element(b));
        const double q = cond.trace().real();
        if (q <= 1e-12) continue;
        const density_operator probe((1.0 / q) * cond);
        if (purity(probe) < 1.0 - 1e-10)
            throw std::logic_error("restricted_performance: conditional state is not pure");
        total += q * conventional_performance(cfg, probe);
    }
    return total;
}

// All three rates at one configuration, with the spectra behind them.
struct performance_report {
    double i_q;
    double i_c_max;
    double i_c_restricted;
    double delta_i;
    isotropic_spectra_result spectra_present;  // weight η
    isotropic_spectra_result spectra_average;  // weight p₀η
};

inline performance_report make_performance_report(const illumination_config& cfg,
                                                  const rank_one_measurement& m) {
    performance_report r{};
    r.i_q = quantum_performance(cfg);
    r.i_c_max = conventional_performance(cfg);
    r.i_c_restricted = restricted_performance(cfg, m);
    r.delta_i = r.i_q - r.i_c_max;
    r.spectra_present = isotropic_spectra(cfg.d, cfg.eta);
    r.spectra_average = isotropic_spectra(cfg.d, cfg.p0 * cfg.eta);
    for (double v : {r.i_q, r.i_c_max, r.i_c_restricted, r.delta_i})
        if (v < -1e-12)
            throw std::logic_error("performance_report: negative information rate");
    return r;
}

}  // namespace qillum
