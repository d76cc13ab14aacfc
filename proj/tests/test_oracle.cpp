#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qillum/oracle.hpp"

using namespace qillum;
using Catch::Matchers::WithinAbs;

namespace {

search_settings quick_settings() {
    search_settings s;
    s.restarts = 4;
    s.refine_iterations = 120;
    return s;
}

}  // namespace

TEST_CASE("search settings validation") {
    search_settings s;
    REQUIRE_NOTHROW(s.validate());
    s.restarts = 0;
    REQUIRE_THROWS_AS(s.validate(), std::invalid_argument);
    s = search_settings{};
    s.grid_resolution = 0;
    REQUIRE_THROWS_AS(s.validate(), std::invalid_argument);
    s = search_settings{};
    s.convergence_tol = 0.0;
    REQUIRE_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("random projective measurements") {
    const rank_one_measurement m = random_rank1_projective(3, 42);
    complex_matrix sum(3, 3);
    for (const auto& el : m.elements()) {
        sum += el;
        REQUIRE((el * el - el).max_abs() <= 1e-10);  // projector
    }
    REQUIRE((sum - complex_matrix::identity(3)).max_abs() <= 1e-10);

    // fixed seed reproduces the measurement exactly
    const rank_one_measurement again = random_rank1_projective(3, 42);
    for (std::size_t b = 0; b < 3; ++b)
        REQUIRE((m.element(b) - again.element(b)).max_abs() == 0.0);

    REQUIRE_THROWS_AS(random_rank1_projective(1, 1), std::invalid_argument);
}

TEST_CASE("accessible information search on known ensembles") {
    const codeword_ensemble orthogonal(density_operator(basis_projector(2, 0)),
                                       density_operator(basis_projector(2, 1)), 0.5, 0.5);
    const accessible_info_result hit = optimize_accessible_info(orthogonal, quick_settings());
    REQUIRE_THAT(hit.bits, WithinAbs(1.0, 1e-6));

    const density_operator mixed = maximally_mixed(2);
    const codeword_ensemble blank(mixed, mixed, 0.5, 0.5);
    REQUIRE_THAT(optimize_accessible_info(blank, quick_settings()).bits, WithinAbs(0.0, 1e-6));

    // commuting single-system ensemble reaches its Holevo information
    const illumination_config cfg(2, 1.0, 0.5);
    const codeword_ensemble conv =
        conventional_codewords(cfg, density_operator(basis_projector(2, 0)));
    const accessible_info_result best = optimize_accessible_info(conv, quick_settings());
    REQUIRE_THAT(best.bits, WithinAbs(0.311278124459133, 1e-6));
    REQUIRE(best.bits <= holevo_chi(conv) + 1e-9);
}

TEST_CASE("conditional entropy search") {
    const search_settings s = quick_settings();

    // product state: conditioning is useless, objective is flat
    const complex_matrix rho_a{{0.75, 0.25}, {0.25, 0.25}};
    const density_operator product(tensor(rho_a, 0.5 * complex_matrix::identity(2)));
    const conditional_entropy_result flat = optimize_conditional_entropy(product, 2, 2, s);
    REQUIRE_THAT(flat.bits, WithinAbs(von_neumann_entropy(density_operator(rho_a)), 1e-6));
    REQUIRE(flat.flatness <= 1e-9);

    // isotropic family: measurement-independent optimum
    const density_operator iso = quantum_codewords(illumination_config(2, 0.5, 0.5)).codeword0;
    const conditional_entropy_result iso_best = optimize_conditional_entropy(iso, 2, 2, s);
    REQUIRE_THAT(iso_best.bits, WithinAbs(0.811278124459133, 1e-6));
    REQUIRE(iso_best.flatness <= 1e-9);

    // pure entangled state: conditionals are pure
    REQUIRE_THAT(optimize_conditional_entropy(maximally_entangled(2), 2, 2, s).bits,
                 WithinAbs(0.0, 1e-6));
}

TEST_CASE("search-based discord") {
    const search_settings s = quick_settings();
    const complex_matrix rho_a{{0.75, 0.25}, {0.25, 0.25}};
    const density_operator product(tensor(rho_a, 0.5 * complex_matrix::identity(2)));
    REQUIRE_THAT(brute_force_discord(product, 2, 2, s), WithinAbs(0.0, 1e-6));

    REQUIRE_THAT(brute_force_discord(maximally_entangled(2), 2, 2, s), WithinAbs(1.0, 1e-5));

    const density_operator iso = quantum_codewords(illumination_config(2, 0.5, 0.5)).codeword0;
    REQUIRE_THAT(brute_force_discord(iso, 2, 2, s), WithinAbs(0.262483183763734, 1e-5));
}

TEST_CASE("determinism and restart monotonicity") {
    const illumination_config cfg(2, 0.8, 0.5);
    const codeword_ensemble conv =
        conventional_codewords(cfg, density_operator(basis_projector(2, 0)));

    search_settings s = quick_settings();
    const double once = optimize_accessible_info(conv, s).bits;
    const double twice = optimize_accessible_info(conv, s).bits;
    REQUIRE(once == twice);  // bit-for-bit

    // more restarts can only improve the best value found
    double prev = -1.0;
    for (int r = 1; r <= 4; ++r) {
        s.restarts = r;
        const double v = optimize_accessible_info(conv, s).bits;
        REQUIRE(v >= prev);
        prev = v;
    }

    const density_operator iso = quantum_codewords(cfg).codeword0;
    double prev_min = 1e9;
    for (int r = 1; r <= 3; ++r) {
        s.restarts = r;
        const double v = optimize_conditional_entropy(iso, 2, 2, s).bits;
        REQUIRE(v <= prev_min);
        prev_min = v;
    }
}
