#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qillum/eig.hpp"
#include "qillum/illumination.hpp"

using namespace qillum;
using Catch::Matchers::WithinAbs;

TEST_CASE("configuration validation") {
    REQUIRE_NOTHROW(illumination_config(2, 0.0, 0.5));
    REQUIRE_NOTHROW(illumination_config(5, 1.0, 0.999));
    REQUIRE_THROWS_AS(illumination_config(1, 0.5, 0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(illumination_config(2, -0.1, 0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(illumination_config(2, 1.1, 0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(illumination_config(2, 0.5, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(illumination_config(2, 0.5, 1.0), std::invalid_argument);
    REQUIRE_THAT(illumination_config(2, 0.5, 0.3).p1(), WithinAbs(0.7, 1e-15));
}

TEST_CASE("maximally entangled state") {
    for (std::size_t d : {2u, 3u, 5u}) {
        const density_operator psi = maximally_entangled(d);
        REQUIRE(psi.dim() == d * d);
        REQUIRE_THAT(purity(psi), WithinAbs(1.0, 1e-12));
        const double inv_d = 1.0 / static_cast<double>(d);
        const complex_matrix marginal = partial_trace(psi.matrix(), d, d, subsystem::b);
        REQUIRE((marginal - inv_d * complex_matrix::identity(d)).max_abs() <= 1e-12);
    }
    // d=2: projector onto (|00⟩ + |11⟩)/√2
    const complex_matrix bell = maximally_entangled(2).matrix();
    REQUIRE_THAT(bell(0, 0).real(), WithinAbs(0.5, 1e-15));
    REQUIRE_THAT(bell(0, 3).real(), WithinAbs(0.5, 1e-15));
    REQUIRE_THAT(bell(1, 1).real(), WithinAbs(0.0, 1e-15));
}

TEST_CASE("maximally mixed state") {
    REQUIRE_THAT(von_neumann_entropy(maximally_mixed(2)), WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(von_neumann_entropy(maximally_mixed(3)),
                 WithinAbs(std::log2(3.0), 1e-12));
    REQUIRE_THAT(maximally_mixed(3).matrix()(1, 1).real(), WithinAbs(1.0 / 3.0, 1e-15));
}

TEST_CASE("conventional codewords") {
    const density_operator probe(basis_projector(2, 0));

    const codeword_ensemble off = conventional_codewords(illumination_config(2, 0.0, 0.5), probe);
    REQUIRE((off.codeword0.matrix() - 0.5 * complex_matrix::identity(2)).max_abs() <= 1e-15);

    const codeword_ensemble full = conventional_codewords(illumination_config(2, 1.0, 0.5), probe);
    REQUIRE((full.codeword0.matrix() - basis_projector(2, 0)).max_abs() <= 1e-15);
    REQUIRE((full.codeword1.matrix() - 0.5 * complex_matrix::identity(2)).max_abs() <= 1e-15);

    const codeword_ensemble half = conventional_codewords(illumination_config(2, 0.5, 0.5), probe);
    REQUIRE_THAT(half.codeword0.matrix()(0, 0).real(), WithinAbs(0.75, 1e-15));
    REQUIRE_THAT(half.codeword0.matrix()(1, 1).real(), WithinAbs(0.25, 1e-15));

    const density_operator probe3(basis_projector(3, 0));
    REQUIRE_THROWS_AS(conventional_codewords(illumination_config(2, 0.5, 0.5), probe3),
                      std::invalid_argument);
}

TEST_CASE("quantum codewords and their spectra") {
    const illumination_config cfg(2, 0.5, 0.5);
    const codeword_ensemble e = quantum_codewords(cfg);
    REQUIRE((e.codeword1.matrix() - 0.25 * complex_matrix::identity(4)).max_abs() <= 1e-15);
    REQUIRE(commutator_norm(e.codeword0.matrix(), e.codeword1.matrix()) <= 1e-15);

    // spectrum {0.625, 0.125, 0.125, 0.125}
    const spectrum s = e.codeword0.eigenvalues();
    REQUIRE_THAT(s.values[0], WithinAbs(0.625, 1e-10));
    for (int k = 1; k < 4; ++k) REQUIRE_THAT(s.values[k], WithinAbs(0.125, 1e-10));

    // solver spectrum matches the closed form at other sizes too
    for (std::size_t d : {2u, 3u}) {
        for (double eta : {0.0, 0.3, 1.0}) {
            const codeword_ensemble qe = quantum_codewords(illumination_config(d, eta, 0.5));
            const spectrum expected = isotropic_spectra(d, eta).joint;
            const spectrum got = qe.codeword0.eigenvalues();
            for (std::size_t k = 0; k < got.size(); ++k)
                REQUIRE_THAT(got.values[k], WithinAbs(expected.values[k], 1e-10));
        }
    }
}

TEST_CASE("codeword marginals are maximally mixed") {
    for (std::size_t d : {2u, 3u}) {
        for (double eta : {0.0, 0.4, 1.0}) {
            const codeword_ensemble e = quantum_codewords(illumination_config(d, eta, 0.25));
            const double inv_d = 1.0 / static_cast<double>(d);
            const complex_matrix id = inv_d * complex_matrix::identity(d);
            REQUIRE((partial_trace(e.codeword0.matrix(), d, d, subsystem::a) - id).max_abs() <=
                    1e-12);
            REQUIRE((partial_trace(e.codeword0.matrix(), d, d, subsystem::b) - id).max_abs() <=
                    1e-12);
        }
    }
}

TEST_CASE("average state is isotropic with the damped weight") {
    const illumination_config cfg(3, 0.8, 0.25);
    const spectrum got = quantum_codewords(cfg).average().eigenvalues();
    const spectrum expected = isotropic_spectra(3, 0.25 * 0.8).joint;
    for (std::size_t k = 0; k < got.size(); ++k)
        REQUIRE_THAT(got.values[k], WithinAbs(expected.values[k], 1e-10));
}

TEST_CASE("swap circuit reproduces the codewords") {
    for (std::size_t d : {2u, 3u}) {
        for (double eta : {0.0, 0.5, 1.0}) {
            const illumination_config cfg(d, eta, 0.5);
            const codeword_ensemble e = quantum_codewords(cfg);
            REQUIRE((circuit_codeword(cfg, 0).matrix() - e.codeword0.matrix()).max_abs() <= 1e-12);
            REQUIRE((circuit_codeword(cfg, 1).matrix() - e.codeword1.matrix()).max_abs() <= 1e-12);
        }
    }
    REQUIRE_THROWS_AS(circuit_codeword(illumination_config(2, 0.5, 0.5), 2),
                      std::invalid_argument);
}

TEST_CASE("isotropic spectra closed form") {
    const isotropic_spectra_result s = isotropic_spectra(2, 0.5);
    REQUIRE_THAT(s.conditional.values[0], WithinAbs(0.75, 1e-15));
    REQUIRE_THAT(s.conditional.values[1], WithinAbs(0.25, 1e-15));
    REQUIRE_THAT(s.joint.values[0], WithinAbs(0.625, 1e-15));
    REQUIRE_THAT(s.joint.sum(), WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(s.conditional.sum(), WithinAbs(1.0, 1e-12));

    const isotropic_spectra_result flat = isotropic_spectra(3, 0.0);
    for (double v : flat.joint.values) REQUIRE_THAT(v, WithinAbs(1.0 / 9.0, 1e-15));

    const isotropic_spectra_result pure = isotropic_spectra(3, 1.0);
    REQUIRE_THAT(pure.joint.values[0], WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(pure.joint.values[1], WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(pure.conditional.values[0], WithinAbs(1.0, 1e-15));

    REQUIRE_THROWS_AS(isotropic_spectra(2, -0.01), std::invalid_argument);
    REQUIRE_THROWS_AS(isotropic_spectra(2, 1.01), std::invalid_argument);
}
