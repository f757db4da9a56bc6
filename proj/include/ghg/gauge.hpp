#pragma once

#include "ghg/catalog.hpp"
#include "ghg/exact_sequence.hpp"

#include <string>
#include <variant>

namespace ghg {

/// Base of a principal bundle: the sphere S^m or a closed orientable surface
/// of genus g.
struct Base {
  enum class Kind { Sphere, Surface };

  Kind kind = Kind::Sphere;
  int dimension_or_genus = 0;

  static Base sphere(int m) { return {Kind::Sphere, m}; }
  static Base surface(int genus) { return {Kind::Surface, genus}; }

  bool is_sphere() const { return kind == Kind::Sphere; }
  /// Degree of the homotopy group holding the characteristic class:
  /// m - 1 over S^m, 1 over a surface.
  int class_degree() const { return is_sphere() ? dimension_or_genus - 1 : 1; }
  std::string name() const;

  friend bool operator==(const Base&, const Base&) = default;
};

/// Base plus characteristic class. Over S^m the class lives in pi_{m-1}(K),
/// over a surface in pi_1(K).
struct BundleSpec {
  Base base;
  GroupElement clazz;
};

/// Validates the base and checks that the class lies in the right group.
BundleSpec make_bundle(const GroupCatalogEntry& entry, Base base, const IntVector& clazz);
BundleSpec make_bundle(const GroupCatalogEntry& entry, Base base, const std::vector<long>& clazz);

/// Samelson data needed for a connecting map is not catalogued.
struct PairingUnavailable {
  std::string group;
  int n = 0;
  int m = 0;

  std::string message() const;
};

using ConnectingMap = std::variant<Homomorphism, PairingUnavailable>;

/// delta_n : pi_n(K) -> pi_{n+m-1}(K), a |-> -<a, b>.
ConnectingMap connecting_hom_sphere(const GroupCatalogEntry& entry, int m, const GroupElement& b,
                                    int n);

/// delta_n : pi_n(K) -> pi_n(K)^{2g} + pi_{n+1}(K), a |-> (0, -<a, b>).
/// The codomain is the canonical form of that direct sum; see
/// surface_target_form for the coordinate change.
ConnectingMap connecting_hom_surface(const GroupCatalogEntry& entry, int genus,
                                     const GroupElement& b, int n);

/// Canonical form of pi_n(K)^{2g} + pi_{n+1}(K) with block coordinates.
CanonicalForm surface_target_form(const GroupCatalogEntry& entry, int genus, int n);

/// pi_n(Gau(P)) from the evaluation fibration's exact sequence.
/// Throws PairingUnavailableError, TableDepthExceeded, CapacityExceeded, and
/// InvalidArgument for n < 1.
SequenceResult gauge_homotopy(const GroupCatalogEntry& entry, const BundleSpec& bundle, int n,
                              std::size_t torsion_bound = kDefaultTorsionBound);

/// dim_Q pi_n(Gau(P)) in closed form from the rational exponents.
int gauge_homotopy_rational(const GroupCatalogEntry& entry, const BundleSpec& bundle, int n);
int gauge_homotopy_rational(const GroupCatalogEntry& entry, const Base& base, int n);

/// The same dimension by running the sequence engine on the free parts of
/// the pi table with both connecting maps zero.
int gauge_homotopy_rational_via_sequence(const GroupCatalogEntry& entry, const Base& base, int n);

/// pi_2 of the gauge group of the SU2-bundle over S^4 with Chern number k,
/// computed through gauge_homotopy.
FgAbGroup su2_s4_pi2(const Catalog& catalog, long k);

}  // namespace ghg
