#pragma once

#include "ghg/abelian_group.hpp"

#include <random>

namespace ghg {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Dense matrix with entries uniform in [lo, hi].
IntMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi);

/// Finite canonical group of order <= max_order built from up to three
/// random cyclic summands.
FgAbGroup random_finite_group(Rng& rng, long max_order);

/// Like random_finite_group, but with a free rank in [0, max_rank].
FgAbGroup random_group(Rng& rng, long max_torsion, std::size_t max_rank);

/// Uniformly random entries subject to well-definedness: each torsion
/// coordinate of the image of an order-d generator is a multiple of e/gcd(d,e).
Homomorphism random_homomorphism(Rng& rng, const FgAbGroup& domain, const FgAbGroup& codomain,
                                 long free_range = 6);

/// Product of elementary row operations; determinant +-1.
IntMatrix random_unimodular(Rng& rng, Eigen::Index n, int steps = 8);

}  // namespace ghg
