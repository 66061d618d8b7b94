#pragma once

// Shared helpers for the test binaries: seeded random matrices/vectors and
// small conversion utilities.

#include <vector>

#include "penreg/matrix.hpp"
#include "penreg/prng.hpp"
#include "penreg/subspace.hpp"

namespace penreg::testsupport {

inline FieldElement random_element(const FieldSpec& fs, SplitMix64& rng, int bound = 3) {
    if (fs.is_rational())
        return FieldElement::from_int(fs, rng.in_range(-bound, bound));
    return FieldElement::from_int(fs, rng.in_range(0, fs.modulus() - 1));
}

inline Matrix random_matrix_of(const FieldSpec& fs, int rows, int cols, SplitMix64& rng,
                               int bound = 3) {
    Matrix m(fs, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = random_element(fs, rng, bound);
    return m;
}

inline Matrix random_invertible_of(const FieldSpec& fs, int n, SplitMix64& rng, int bound = 3) {
    while (true) {
        Matrix m = random_matrix_of(fs, n, n, rng, bound);
        if (rank(m) == n)
            return m;
    }
}

inline std::vector<FieldElement> random_vector_of(const FieldSpec& fs, int n, SplitMix64& rng,
                                                  int bound = 3) {
    std::vector<FieldElement> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i)
        v.push_back(random_element(fs, rng, bound));
    return v;
}

} // namespace penreg::testsupport
