#pragma once

#include "ghg/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ghg {

/// Z^generators modulo the row span of `relations`.
struct Presentation {
  Eigen::Index generators = 0;
  IntMatrix relations;

  Presentation() : relations(0, 0) {}
  Presentation(Eigen::Index generator_count, IntMatrix relation_rows);
};

/// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_t with
/// 2 <= d_1 | d_2 | ... | d_t. Canonical generators are ordered free first,
/// then one generator per invariant factor.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  /// Throws InvalidArgument unless the factors already form a divisibility
  /// chain of integers >= 2.
  FgAbGroup(std::size_t rank, std::vector<Integer> invariant_factors);

  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
  static FgAbGroup cyclic(const Integer& order);

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }

  /// rank + number of invariant factors.
  Eigen::Index generator_count() const {
    return static_cast<Eigen::Index>(rank_ + factors_.size());
  }
  /// 0 for a free generator, otherwise its invariant factor.
  Integer generator_order(Eigen::Index i) const;

  bool is_trivial() const { return rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  bool is_free() const { return factors_.empty(); }
  bool is_cyclic() const { return generator_count() <= 1; }

  /// Product of the invariant factors (1 for a free group).
  Integer torsion_order() const;

  /// Canonical display name, e.g. "0", "Z", "Z^2 + Z/2 + Z/6".
  std::string name() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> factors_;
};

/// Sort order for candidate lists: rank first, then factor lists compared
/// lexicographically by value.
bool canonical_less(const FgAbGroup& a, const FgAbGroup& b);

/// Element of a canonical group; torsion coordinates are kept in [0, d_i).
class GroupElement {
 public:
  GroupElement(FgAbGroup group, IntVector coordinates);
  GroupElement(FgAbGroup group, const std::vector<long>& coordinates);

  static GroupElement zero(const FgAbGroup& group);
  /// The i-th canonical generator.
  static GroupElement generator(const FgAbGroup& group, Eigen::Index i);

  const FgAbGroup& group() const { return group_; }
  const IntVector& coordinates() const { return coords_; }

  bool is_zero() const { return ghg::is_zero(coords_); }
  /// Smallest n > 0 with n * x = 0, or 0 when x has infinite order.
  Integer order() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement operator-(const GroupElement& other) const { return *this + (-other); }
  friend GroupElement operator*(const Integer& n, const GroupElement& x);

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  FgAbGroup group_;
  IntVector coords_;
};

/// Reduces the torsion coordinates of a raw coordinate vector.
IntVector reduce_coordinates(const FgAbGroup& group, IntVector coordinates);

/// Group homomorphism given on canonical generators. Column j is the image of
/// the j-th domain generator in codomain coordinates.
class Homomorphism {
 public:
  /// Throws InvalidArgument on a shape mismatch and IllDefinedMap when some
  /// torsion generator of order d has an image not killed by d.
  Homomorphism(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix);

  static Homomorphism zero(const FgAbGroup& domain, const FgAbGroup& codomain);
  static Homomorphism identity(const FgAbGroup& group);

  const FgAbGroup& domain() const { return domain_; }
  const FgAbGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  bool is_zero() const { return ghg::is_zero(matrix_); }
  GroupElement operator()(const GroupElement& x) const;
  Homomorphism operator-() const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b);

 private:
  FgAbGroup domain_;
  FgAbGroup codomain_;
  IntMatrix matrix_;
};

/// True when the matrix defines a homomorphism domain -> codomain.
bool is_well_defined(const FgAbGroup& domain, const FgAbGroup& codomain,
                     const IntMatrix& matrix);

/// Canonical form of a presentation together with coordinate changes.
/// `to_canonical` maps presentation coordinates to canonical coordinates
/// (reduce torsion afterwards); `from_canonical` lifts canonical generators.
struct CanonicalForm {
  FgAbGroup group;
  IntMatrix to_canonical;
  IntMatrix from_canonical;
};

CanonicalForm canonical_form(const Presentation& presentation);
FgAbGroup canonicalize(const Presentation& presentation);

/// Diagonal presentation of a canonical group.
Presentation presentation_of(const FgAbGroup& group);

FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h);

/// Canonical form of a finite direct sum; presentation coordinates are the
/// concatenated canonical coordinates of the summands.
CanonicalForm direct_sum_form(const std::vector<FgAbGroup>& summands);

struct HomDecomposition {
  FgAbGroup kernel;
  FgAbGroup image;
  FgAbGroup cokernel;
};

HomDecomposition hom_decompose(const Homomorphism& f);

/// dim_Q(G tensor Q), which is the free rank.
std::size_t tensor_q(const FgAbGroup& group);

bool is_isomorphic(const FgAbGroup& g, const FgAbGroup& h);

/// Every element of a finite group exactly once, in mixed-radix order.
/// Throws CapacityExceeded for infinite groups or when |G| > bound.
std::vector<GroupElement> enumerate_elements(const FgAbGroup& group, std::size_t bound);

/// Basis (as columns) of the integer kernel of a matrix.
IntMatrix integer_nullspace(const IntMatrix& a);

}  // namespace ghg
