#pragma once

// Brute-force reference computations. Nothing here calls the Smith normal
// form, hom_decompose or the extension solver; elements are explicit tuples
// and subgroups explicit sets.

#include "ghg/abelian_group.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ghg::oracle {

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Z/m_1 + ... + Z/m_k with explicit elements, k small and product bounded.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<long> moduli);

  std::size_t order() const { return order_; }
  const std::vector<long>& moduli() const { return moduli_; }

  std::vector<long> element(std::size_t index) const;
  std::size_t index(const std::vector<long>& element) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t multiple(long n, std::size_t a) const;

  /// Subgroup generated by the given elements, as a membership mask.
  std::vector<bool> closure(const std::vector<std::size_t>& generators) const;

 private:
  std::vector<long> moduli_;
  std::size_t order_ = 1;
};

/// Number of elements of each order.
using OrderStatistics = std::map<std::size_t, std::size_t>;

OrderStatistics order_statistics(const FiniteGroup& g, const std::vector<bool>& subgroup);
/// Statistics of the quotient g / subgroup, coset by coset.
OrderStatistics quotient_order_statistics(const FiniteGroup& g, const std::vector<bool>& subgroup);
/// Statistics of a canonical group, by enumerating coordinate tuples.
OrderStatistics order_statistics(const FgAbGroup& g);

/// Invariant factors recovered from |G[p^k]| counts of an explicit group.
FgAbGroup type_of(const FiniteGroup& g, const std::vector<bool>& subgroup);
FgAbGroup quotient_type(const FiniteGroup& g, const std::vector<bool>& subgroup);

/// Every subgroup of g (g.order() <= 64), as membership masks.
std::vector<std::vector<bool>> all_subgroups(const FiniteGroup& g);

/// All canonical groups of order n, by direct search over divisor chains.
std::vector<FgAbGroup> abelian_groups_of_order(long n);

/// Groups X of order |sub| * |quot| with a subgroup of type sub whose
/// quotient has type quot, found by subgroup enumeration (orders <= 64).
std::vector<FgAbGroup> extension_candidates(const FgAbGroup& sub, const FgAbGroup& quot);

/// |kernel| and |image| of a map between finite canonical groups, by
/// applying it to every element.
struct MapCounts {
  std::size_t kernel = 0;
  std::size_t image = 0;
};
MapCounts count_kernel_image(const FgAbGroup& domain, const FgAbGroup& codomain,
                             const IntMatrix& matrix);

FiniteGroup explicit_group(const FgAbGroup& g);

}  // namespace ghg::oracle
