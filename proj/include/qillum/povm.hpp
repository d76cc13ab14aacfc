// Generalized measurements: validated POVMs, rank-1 projective measurements,
// and a seeded sampler over the unitarily invariant distribution.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qillum/eig.hpp"
#include "qillum/matrix.hpp"
#include "qillum/rng.hpp"

namespace qillum {

inline constexpr double povm_tol = 1e-10;

// Finite-outcome POVM {Π_b}; construction checks Hermiticity, positivity and
// completeness Σ_b Π_b = I within povm_tol.
class povm {
public:
    explicit povm(std::vector<complex_matrix> elements) : elements_(std::move(elements)) {
        if (elements_.empty()) throw std::invalid_argument("povm: no elements");
        const std::size_t d = elements_[0].rows();
        complex_matrix sum(d, d);
        for (const auto& e : elements_) {
            if (!e.is_square() || e.rows() != d)
                throw std::invalid_argument("povm: inconsistent element dimensions");
            if (e.hermiticity_error() > povm_tol)
                throw std::invalid_argument("povm: element is not Hermitian");
            if (hermitian_eig(e).values.values.back() < -povm_tol)
                throw std::invalid_argument("povm: element is not positive semidefinite");
            sum += e;
        }
        sum -= complex_matrix::identity(d);
        if (sum.max_abs() > povm_tol)
            throw std::invalid_argument("povm: elements do not sum to the identity");
    }

    std::size_t dim() const { return elements_[0].rows(); }
    std::size_t outcomes() const { return elements_.size(); }
    const std::vector<complex_matrix>& elements() const { return elements_; }
    const complex_matrix& element(std::size_t b) const { return elements_[b]; }

private:
    std::vector<complex_matrix> elements_;
};

// POVM whose every element is rank 1 (largest-but-one eigenvalue ≤ povm_tol);
// such measurements project pure states onto pure states.
class rank_one_measurement : public povm {
public:
    explicit rank_one_measurement(std::vector<complex_matrix> elements)
        : povm(std::move(elements)) {
        for (const auto& e : this->elements()) {
            const spectrum s = hermitian_eig(e).values;
            if (s.size() > 1 && s.values[1] > povm_tol)
                throw std::invalid_argument("rank_one_measurement: element has rank above one");
        }
    }

    // projectors |u_b⟩⟨u_b| onto the columns of a unitary
    static rank_one_measurement from_unitary_columns(const complex_matrix& u) {
        if (!u.is_square()) throw std::invalid_argument("from_unitary_columns: matrix not square");
        std::vector<complex_matrix> els;
        els.reserve(u.cols());
        for (std::size_t j = 0; j < u.cols(); ++j) els.push_back(outer(column(u, j)));
        return rank_one_measurement(std::move(els));
    }

    static rank_one_measurement computational_basis(std::size_t d) {
        std::vector<complex_matrix> els;
        els.reserve(d);
        for (std::size_t k = 0; k < d; ++k) els.push_back(basis_projector(d, k));
        return rank_one_measurement(std::move(els));
    }
};

// d orthonormal projectors from a Haar-ish random unitary; deterministic in
// the seed, so sampled measurements are reproducible across runs.
inline rank_one_measurement random_rank1_projective(std::size_t d, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("random_rank1_projective: need d >= 2");
    rng_stream rng(seed);
    return rank_one_measurement::from_unitary_columns(random_unitary(d, rng));
}

}  // namespace qillum
