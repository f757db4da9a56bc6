#include "ghg/exact_sequence.hpp"

#include "ghg/errors.hpp"
#include "ghg/partitions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ghg {

namespace {

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

// Types B of subgroups of a p-group of type `quot` whose quotient needs at
// most `max_length` generators. With max_length == 0 only B = quot survives.
std::vector<Partition> admissible_subtypes(const Partition& quot, std::size_t max_length) {
  if (max_length == 0) return {quot};
  std::vector<Partition> out;
  const int total = partition_size(quot);
  for (int size = 0; size <= total; ++size) {
    for (const auto& beta : partitions_of(size)) {
      if (!contains(quot, beta)) continue;
      for (const auto& gamma : partitions_of(total - size)) {
        if (gamma.size() > max_length) continue;
        if (lr_coefficient_positive(quot, beta, gamma)) {
          out.push_back(beta);
          break;
        }
      }
    }
  }
  return out;
}

// Types of p-groups T admitting a subgroup of type `sub` with quotient of
// type `quot_part`.
std::vector<Partition> middle_types(const Partition& sub, const Partition& quot_part) {
  std::vector<Partition> out;
  for (const auto& lambda : partitions_of(partition_size(sub) + partition_size(quot_part))) {
    if (!contains(lambda, sub) || !contains(lambda, quot_part)) continue;
    if (lr_coefficient_positive(lambda, sub, quot_part)) out.push_back(lambda);
  }
  return out;
}

std::vector<FgAbGroup> sorted_unique(std::vector<FgAbGroup> groups) {
  std::sort(groups.begin(), groups.end(), canonical_less);
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
  return groups;
}

}  // namespace

ExtensionCandidates resolve_extension(const FgAbGroup& sub, const FgAbGroup& quot,
                                      std::size_t torsion_bound) {
  if (sub.is_trivial()) return {{quot}};
  if (quot.is_trivial()) return {{sub}};
  if (quot.is_free()) return {{direct_sum(sub, quot)}};

  const Integer order = sub.torsion_order() * quot.torsion_order();
  if (order > Integer(static_cast<unsigned long>(torsion_bound)))
    throw CapacityExceeded("extension of " + quot.name() + " by " + sub.name() +
                           ": torsion order " + order.get_str() + " exceeds the bound " +
                           std::to_string(torsion_bound));

  // The free part of quot splits off. What remains is an extension of the
  // torsion of quot by sub; when sub has free rank a, part B of that torsion
  // can be absorbed by the free summand, leaving any quotient of <= a
  // generators. Everything decomposes over primes.
  const std::size_t free_rank = sub.rank() + quot.rank();
  std::vector<std::pair<Integer, std::vector<Partition>>> per_prime;
  for (const auto& [p, exponent] : factorize(order)) {
    const Partition sub_type = primary_type(sub, p);
    const Partition quot_type = primary_type(quot, p);
    std::set<Partition> types;
    for (const auto& beta : admissible_subtypes(quot_type, sub.rank()))
      for (auto& lambda : middle_types(sub_type, beta)) types.insert(std::move(lambda));
    per_prime.emplace_back(p, std::vector<Partition>(types.begin(), types.end()));
  }

  std::vector<FgAbGroup> groups;
  std::map<Integer, Partition> choice;
  auto combine = [&](auto&& self, std::size_t k) -> void {
    if (k == per_prime.size()) {
      groups.push_back(group_from_primary_types(free_rank, choice));
      return;
    }
    for (const auto& type : per_prime[k].second) {
      choice[per_prime[k].first] = type;
      self(self, k + 1);
    }
    choice.erase(per_prime[k].first);
  };
  combine(combine, 0);
  return {sorted_unique(std::move(groups))};
}

SequenceResult middle_group(const Homomorphism& left, const Homomorphism& right,
                            std::size_t torsion_bound) {
  SequenceResult out;
  out.sub = hom_decompose(left).cokernel;
  out.quot = hom_decompose(right).kernel;
  auto candidates = resolve_extension(out.sub, out.quot, torsion_bound);
  if (candidates.resolved()) {
    out.kind = SequenceResult::Kind::Resolved;
    out.group = candidates.groups.front();
  } else {
    out.kind = SequenceResult::Kind::Ambiguous;
    out.candidates = std::move(candidates.groups);
  }
  return out;
}

std::string describe(const SequenceResult& result) {
  if (result.resolved()) return result.group.name();
  std::ostringstream out;
  out << "extension of " << result.quot.name() << " by " << result.sub.name() << "; candidates: ";
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    if (i > 0) out << ", ";
    out << result.candidates[i].name();
  }
  return out.str();
}

}  // namespace ghg
