// Deterministic random matrices: seeded streams, Haar-ish unitaries,
// random Hermitian / density / pure-state generators.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qillum/matrix.hpp"

namespace qillum {

// splitmix64 mix; used to derive independent stream seeds from (seed, index)
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// mt19937_64 with hand-rolled uniform and normal transforms so that streams
// are bit-identical across standard library implementations (std
// distributions are not portable).
class rng_stream {
public:
    explicit rng_stream(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller; caches the second deviate
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    complexd normal_complex() { return {normal(), normal()}; }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Ginibre matrix followed by two Gram-Schmidt passes (the second pass mops up
// the loss of orthogonality the first can leave at larger dimensions).
inline complex_matrix random_unitary(std::size_t dim, rng_stream& rng) {
    if (dim == 0) throw std::invalid_argument("random_unitary: dimension must be positive");
    complex_matrix u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) u(i, j) = rng.normal_complex();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                complexd ov = 0.0;
                for (std::size_t i = 0; i < dim; ++i) ov += std::conj(u(i, k)) * u(i, j);
                for (std::size_t i = 0; i < dim; ++i) u(i, j) -= ov * u(i, k);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(u(i, j));
            nrm = std::sqrt(nrm);
            if (nrm < 1e-12) throw std::runtime_error("random_unitary: degenerate column");
            for (std::size_t i = 0; i < dim; ++i) u(i, j) /= nrm;
        }
    }
    return u;
}

inline complex_matrix random_hermitian(std::size_t dim, rng_stream& rng) {
    complex_matrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        h(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < dim; ++j) {
            h(i, j) = rng.normal_complex();
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

// normalized G G^dagger with Ginibre G: full-rank random density matrix
inline complex_matrix random_density_matrix(std::size_t dim, rng_stream& rng) {
    complex_matrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.normal_complex();
    complex_matrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

inline std::vector<complexd> random_pure_state(std::size_t dim, rng_stream& rng) {
    std::vector<complexd> v(dim);
    double nrm = 0.0;
    for (auto& c : v) {
        c = rng.normal_complex();
        nrm += std::norm(c);
    }
    nrm = std::sqrt(nrm);
    for (auto& c : v) c /= nrm;
    return v;
}

}  // namespace qillum
