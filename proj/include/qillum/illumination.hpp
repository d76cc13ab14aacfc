// State family of the illumination protocol: entangled probe, codeword
// ensembles for both strategies, the swap-circuit encoding, and the
// closed-form spectra of the isotropic mixtures involved.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qillum/density.hpp"
#include "qillum/entropy.hpp"
#include "qillum/matrix.hpp"

namespace qillum {

// Protocol parameters: qudit dimension d, reflectivity η of the probed
// region, and the prior p0 that the target is present.
struct illumination_config {
    std::size_t d;
    double eta;
    double p0;

    illumination_config(std::size_t d_, double eta_, double p0_) : d(d_), eta(eta_), p0(p0_) {
        if (d < 2) throw std::invalid_argument("illumination_config: d must be at least 2");
        if (!(eta >= 0.0 && eta <= 1.0))
            throw std::invalid_argument("illumination_config: eta must lie in [0, 1]");
        if (!(p0 > 0.0 && p0 < 1.0))
            throw std::invalid_argument("illumination_config: p0 must lie in (0, 1)");
    }

    double p1() const { return 1.0 - p0; }
};

// Pair of codeword states carrying one classical bit with priors (p0, p1).
struct codeword_ensemble {
    density_operator codeword0;
    density_operator codeword1;
    double p0;
    double p1;

    codeword_ensemble(density_operator c0, density_operator c1, double p0_, double p1_)
        : codeword0(std::move(c0)), codeword1(std::move(c1)), p0(p0_), p1(p1_) {
        if (codeword0.dim() != codeword1.dim())
            throw std::invalid_argument("codeword_ensemble: codeword dimensions differ");
        if (std::abs(p0 + p1 - 1.0) > 1e-12 || p0 < 0.0 || p1 < 0.0)
            throw std::invalid_argument("codeword_ensemble: priors must be a probability pair");
    }

    std::size_t dim() const { return codeword0.dim(); }

    density_operator average() const {
        return density_operator(p0 * codeword0.matrix() + p1 * codeword1.matrix());
    }
};

// |ψ⟩ = d^(−1/2) Σ_k |k⟩|k⟩ as a projector; both marginals are I/d
inline density_operator maximally_entangled(std::size_t d) {
    if (d < 2) throw std::invalid_argument("maximally_entangled: need d >= 2");
    std::vector<complexd> psi(d * d, 0.0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) psi[k * d + k] = amp;
    return density_operator(outer(psi));
}

inline density_operator maximally_mixed(std::size_t d) {
    if (d < 2) throw std::invalid_argument("maximally_mixed: need d >= 2");
    return density_operator((1.0 / static_cast<double>(d)) * complex_matrix::identity(d));
}

// Single-system strategy: reflected probe vs. bare environment,
// ρ^(0) = ηΦ + (1−η)I/d and ρ^(1) = I/d.
inline codeword_ensemble conventional_codewords(const illumination_config& cfg,
                                                const density_operator& probe) {
    if (probe.dim() != cfg.d)
        throw std::invalid_argument("conventional_codewords: probe dimension mismatch");
    const complex_matrix mixed = (1.0 / static_cast<double>(cfg.d)) * complex_matrix::identity(cfg.d);
    return codeword_ensemble(density_operator(cfg.eta * probe.matrix() + (1.0 - cfg.eta) * mixed),
                             density_operator(mixed), cfg.p0, cfg.p1());
}

// Entangled strategy: signal-idler pair with the signal arm exposed,
// ρ_AB^(0) = ηΨ_AB + (1−η)I/d² and ρ_AB^(1) = I/d².
inline codeword_ensemble quantum_codewords(const illumination_config& cfg) {
    const std::size_t d2 = cfg.d * cfg.d;
    const complex_matrix mixed = (1.0 / static_cast<double>(d2)) * complex_matrix::identity(d2);
    const density_operator psi = maximally_entangled(cfg.d);
    return codeword_ensemble(density_operator(cfg.eta * psi.matrix() + (1.0 - cfg.eta) * mixed),
                             density_operator(mixed), cfg.p0, cfg.p1());
}

// Circuit realization of the encoding: append a maximally mixed ancilla E,
// swap signal and ancilla iff the bit is 1, discard E. Output must agree
// with quantum_codewords; the swap with a fully mixed E erases the signal
// arm, leaving I/d ⊗ I/d.
inline density_operator circuit_codeword(const illumination_config& cfg, int x) {
    if (x != 0 && x != 1) throw std::invalid_argument("circuit_codeword: bit must be 0 or 1");
    const std::size_t d = cfg.d, d2 = d * d, d3 = d2 * d;
    const density_operator rho_ab = quantum_codewords(cfg).codeword0;
    // σ_ABE = ρ_AB ⊗ I/d, basis index a·d² + b·d + e
    complex_matrix sigma = tensor(rho_ab.matrix(),
                                  (1.0 / static_cast<double>(d)) * complex_matrix::identity(d));
    if (x == 1) {
        // permutation P|a,b,e⟩ = |e,b,a⟩; P = P† = P⁻¹
        complex_matrix p(d3, d3);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t e = 0; e < d; ++e)
                    p(e * d2 + b * d + a, a * d2 + b * d + e) = 1.0;
        sigma = p * sigma * p;
    }
    return density_operator(partial_trace(sigma, d2, d, subsystem::a));
}

// Eigenvalue lists of fΨ + (1−f)I/d² and of the d-dimensional state
// fΦ + (1−f)I/d (Φ pure): one non-degenerate eigenvalue plus a flat tail.
struct isotropic_spectra_result {
    spectrum joint;
    spectrum conditional;
};

inline isotropic_spectra_result isotropic_spectra(std::size_t d, double f) {
    if (d < 2) throw std::invalid_argument("isotropic_spectra: need d >= 2");
    if (!(f >= 0.0 && f <= 1.0))
        throw std::invalid_argument("isotropic_spectra: mixing weight outside [0, 1]");
    const double dd = static_cast<double>(d);
    isotropic_spectra_result out;
    out.joint.values.assign(d * d, (1.0 - f) / (dd * dd));
    out.joint.values[0] = f + (1.0 - f) / (dd * dd);
    out.conditional.values.assign(d, (1.0 - f) / dd);
    out.conditional.values[0] = f + (1.0 - f) / dd;
    return out;
}

}  // namespace qillum
