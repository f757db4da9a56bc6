#pragma once

#include "ghg/abelian_group.hpp"

#include <map>
#include <vector>

namespace ghg {

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

int partition_size(const Partition& p);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// True when the Littlewood-Richardson coefficient c^outer_{inner,content}
/// is nonzero, i.e. some LR tableau of shape outer/inner has the given content.
///
/// For a finite abelian p-group of type `outer` this holds exactly when the
/// group has a subgroup of type `inner` with quotient of type `content`.
bool lr_coefficient_positive(const Partition& outer, const Partition& inner,
                             const Partition& content);

/// Prime factorization by trial division.
std::map<Integer, int> factorize(Integer n);

/// Type of the p-primary part of the torsion subgroup.
Partition primary_type(const FgAbGroup& group, const Integer& p);

/// Inverse of primary_type: assembles invariant factors from p-types.
FgAbGroup group_from_primary_types(std::size_t rank, const std::map<Integer, Partition>& types);

}  // namespace ghg
