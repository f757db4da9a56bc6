#pragma once

#include "ghg/abelian_group.hpp"

#include <cstddef>
#include <vector>

namespace ghg {

inline constexpr std::size_t kDefaultTorsionBound = 10000;

/// Groups X fitting into 0 -> sub -> X -> quot -> 0, sorted by canonical_less.
/// A single entry means the extension is determined.
struct ExtensionCandidates {
  std::vector<FgAbGroup> groups;

  bool resolved() const { return groups.size() == 1; }
};

/// Solves the extension problem for abelian groups.
///
/// Trivial sub, trivial quot and free quot are settled directly. Otherwise
/// the candidates are enumerated prime by prime; this path throws
/// CapacityExceeded when |torsion(sub)| * |torsion(quot)| > torsion_bound.
ExtensionCandidates resolve_extension(const FgAbGroup& sub, const FgAbGroup& quot,
                                      std::size_t torsion_bound = kDefaultTorsionBound);

/// Middle term X of an exact fragment A -> B -> X -> C -> D.
struct SequenceResult {
  enum class Kind { Resolved, Ambiguous };

  Kind kind = Kind::Resolved;
  FgAbGroup group;  // meaningful when Resolved
  FgAbGroup sub;    // coker(A -> B)
  FgAbGroup quot;   // ker(C -> D)
  std::vector<FgAbGroup> candidates;  // nonempty when Ambiguous

  bool resolved() const { return kind == Kind::Resolved; }
  /// rank(sub) + rank(quot); shared by every candidate.
  std::size_t rank() const { return sub.rank() + quot.rank(); }

  friend bool operator==(const SequenceResult&, const SequenceResult&) = default;
};

SequenceResult middle_group(const Homomorphism& left, const Homomorphism& right,
                            std::size_t torsion_bound = kDefaultTorsionBound);

/// Text form: the group name, or
/// "extension of <quot> by <sub>; candidates: A, B".
std::string describe(const SequenceResult& result);

}  // namespace ghg
