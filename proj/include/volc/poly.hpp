#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "volc/field.hpp"

namespace volc {

/// Value of the classical level-2 modular polynomial Φ₂(j1, j2).
/// Symmetric in its arguments.
Fe phi2_eval(const Fe& j1, const Fe& j2);

/// Coefficients of Φ₂(j, Y) as a monic cubic in Y, ascending: [c0, c1, c2, 1].
std::array<Fe, 4> phi2_at(const Fe& j);

/// Roots with multiplicity, sorted in canonical element order.
struct RootMultiset {
    std::vector<std::pair<Fe, int>> roots;

    int total_multiplicity() const {
        int n = 0;
        for (auto& [r, m] : roots) n += m;
        return n;
    }
    int multiplicity_of(const Fe& x) const {
        for (auto& [r, m] : roots)
            if (r == x) return m;
        return 0;
    }
};

/// All roots (with multiplicity) of a polynomial of degree ≤ 3 over the
/// coefficient field. Coefficients ascending, leading coefficient nonzero.
/// Rational roots are isolated with one gcd against Y^q − Y; a fully split
/// cubic is separated by randomized degree-one splitting, reseeded from
/// rng_seed so results are reproducible. The root multiset itself is
/// seed-independent.
RootMultiset roots_deg_le3(const std::vector<Fe>& coeffs, uint64_t rng_seed);

/// Roots of Φ₂(j, Y): the 2-isogeny neighbors of j, with multiplicity.
RootMultiset phi2_neighbors(const Fe& j, uint64_t rng_seed);

}  // namespace volc
