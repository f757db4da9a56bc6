#pragma once

#include "ghg/catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ghg::verify {

struct CheckReport {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a short summary
  double seconds = 0.0;
};

// Algebra checks against the brute-force oracles. Seeds are fixed so reports
// are reproducible.
CheckReport snf_properties(std::size_t matrices = 1000, std::uint64_t seed = 1);
CheckReport canonicalize_idempotent(std::size_t groups = 200, std::uint64_t seed = 2);
CheckReport presentation_orders(std::size_t presentations = 200, std::uint64_t seed = 3);
CheckReport hom_counts(std::size_t maps = 200, std::uint64_t seed = 4);
CheckReport hom_special_maps(std::size_t groups = 100, std::uint64_t seed = 5);
CheckReport tensor_q_additivity(std::size_t pairs = 200, std::uint64_t seed = 6);
CheckReport extension_oracle(std::size_t instances = 100, std::uint64_t seed = 7);
CheckReport sign_invariance(std::size_t fragments = 100, std::uint64_t seed = 8);

// Checks over catalogued data.
CheckReport catalog_consistency(const Catalog& catalog);
CheckReport samelson_biadditivity(const Catalog& catalog);
CheckReport delta_well_defined(const Catalog& catalog);
CheckReport gcd_table(const Catalog& catalog);
CheckReport hopf_bundle(const Catalog& catalog);
CheckReport rational_theorem(const Catalog& catalog, const std::vector<std::string>& groups);
CheckReport even_degree_vanishing(const Catalog& catalog, const std::vector<std::string>& groups);

/// Every check above, in a fixed order.
std::vector<CheckReport> run_all(const Catalog& catalog);

}  // namespace ghg::verify
