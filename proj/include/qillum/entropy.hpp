// Eigenvalue multisets and entropy kernels. All logarithms base 2; results in bits.

#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qillum {

// Eigenvalues in [-1e-12, 0) count as rounding noise and are clipped to zero
// before entropy; anything more negative is a genuine validity failure.
inline constexpr double spectrum_clip_tol = 1e-12;

// Eigenvalue multiset acting as a probability weight vector.
struct spectrum {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }
};

// -sum p log2 p with 0 log 0 := 0
inline double shannon_entropy(const spectrum& s) {
    double h = 0.0;
    for (double p : s.values) {
        if (p < -spectrum_clip_tol)
            throw std::domain_error("shannon_entropy: eigenvalue below clip tolerance");
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

inline double binary_entropy(double p) {
    return shannon_entropy(spectrum{{p, 1.0 - p}});
}

}  // namespace qillum
