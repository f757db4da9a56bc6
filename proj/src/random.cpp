#include "ghg/random.hpp"

#include <algorithm>

namespace ghg {

IntMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

FgAbGroup random_finite_group(Rng& rng, long max_order) {
  FgAbGroup g;
  long order = 1;
  const long summands = uniform(rng, 0, 3);
  for (long s = 0; s < summands; ++s) {
    const long room = max_order / order;
    if (room < 2) break;
    const long d = uniform(rng, 2, std::min<long>(room, 16));
    g = direct_sum(g, FgAbGroup::cyclic(d));
    order *= d;
  }
  return g;
}

FgAbGroup random_group(Rng& rng, long max_torsion, std::size_t max_rank) {
  const auto rank = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_rank)));
  return direct_sum(FgAbGroup::free(rank), random_finite_group(rng, max_torsion));
}

Homomorphism random_homomorphism(Rng& rng, const FgAbGroup& domain, const FgAbGroup& codomain,
                                 long free_range) {
  IntMatrix m = zero_matrix(codomain.generator_count(), domain.generator_count());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const Integer d = domain.generator_order(j);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Integer e = codomain.generator_order(i);
      if (e == 0) {
        // Free coordinate: torsion generators must map to 0 there.
        if (d == 0) m(i, j) = uniform(rng, -free_range, free_range);
      } else {
        const Integer step = d == 0 ? Integer(1) : Integer(e / gcd(d, e));
        const long choices = Integer(e / step).get_si();
        m(i, j) = step * uniform(rng, 0, choices - 1);
      }
    }
  }
  return Homomorphism(domain, codomain, std::move(m));
}

IntMatrix random_unimodular(Rng& rng, Eigen::Index n, int steps) {
  IntMatrix u = identity_matrix(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const Eigen::Index i = uniform(rng, 0, n - 1);
    Eigen::Index j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    const long factor = uniform(rng, -2, 2);
    u.row(i) += Integer(factor) * u.row(j);
    if (uniform(rng, 0, 3) == 0) u.row(i).swap(u.row(j));
  }
  return u;
}

}  // namespace ghg
