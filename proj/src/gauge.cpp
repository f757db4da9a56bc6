#include "ghg/gauge.hpp"

#include "ghg/errors.hpp"

#include <stdexcept>

namespace ghg {

std::string Base::name() const {
  return (is_sphere() ? "sphere:" : "surface:") + std::to_string(dimension_or_genus);
}

BundleSpec make_bundle(const GroupCatalogEntry& entry, Base base, const IntVector& clazz) {
  if (base.is_sphere() && base.dimension_or_genus < 1)
    throw InvalidArgument("sphere dimension must be >= 1, got " +
                          std::to_string(base.dimension_or_genus));
  if (!base.is_sphere() && base.dimension_or_genus < 0)
    throw InvalidArgument("surface genus must be >= 0, got " +
                          std::to_string(base.dimension_or_genus));
  if (!entry.connected) throw InvalidArgument(entry.name + " is not connected");
  const FgAbGroup& group = lookup_pi(entry, base.class_degree());
  return {base, GroupElement(group, clazz)};
}

BundleSpec make_bundle(const GroupCatalogEntry& entry, Base base, const std::vector<long>& clazz) {
  IntVector v(static_cast<Eigen::Index>(clazz.size()));
  for (std::size_t i = 0; i < clazz.size(); ++i) v(static_cast<Eigen::Index>(i)) = clazz[i];
  return make_bundle(entry, base, v);
}

std::string PairingUnavailable::message() const {
  return "Samelson pairing pi_" + std::to_string(n) + "(" + group + ") x pi_" + std::to_string(m) +
         "(" + group + ") -> pi_" + std::to_string(n + m) + "(" + group + ") is not catalogued";
}

namespace {

// Image of each domain generator under a |-> -<a, b>, as columns over the
// target of the pairing.
IntMatrix negated_pairing_columns(const PairingMatrix& pairing, const GroupElement& b) {
  const FgAbGroup& domain = pairing.left;
  IntMatrix columns(pairing.target.generator_count(), domain.generator_count());
  for (Eigen::Index j = 0; j < domain.generator_count(); ++j)
    columns.col(j) = (-samelson_apply(pairing, GroupElement::generator(domain, j), b)).coordinates();
  return columns;
}

bool delta_vanishes(const GroupCatalogEntry& entry, const FgAbGroup& domain,
                    const FgAbGroup& target, const GroupElement& b) {
  return domain.is_trivial() || target.is_trivial() || b.group().is_trivial() || b.is_zero() ||
         entry.abelian;
}

void check_degree(int n) {
  if (n < 1) throw InvalidArgument("homotopy degree must be >= 1, got " + std::to_string(n));
}

}  // namespace

ConnectingMap connecting_hom_sphere(const GroupCatalogEntry& entry, int m, const GroupElement& b,
                                    int n) {
  check_degree(n);
  if (m < 1) throw InvalidArgument("sphere dimension must be >= 1, got " + std::to_string(m));
  const FgAbGroup& domain = lookup_pi(entry, n);
  const FgAbGroup& codomain = lookup_pi(entry, n + m - 1);
  if (!(b.group() == lookup_pi(entry, m - 1)))
    throw InvalidArgument("characteristic class must lie in pi_" + std::to_string(m - 1) + "(" +
                          entry.name + ")");

  if (delta_vanishes(entry, domain, codomain, b)) return Homomorphism::zero(domain, codomain);
  auto pairing = lookup_samelson(entry, n, m - 1);
  if (!pairing) return PairingUnavailable{entry.name, n, m - 1};
  return Homomorphism(domain, codomain, negated_pairing_columns(*pairing, b));
}

CanonicalForm surface_target_form(const GroupCatalogEntry& entry, int genus, int n) {
  if (genus < 0) throw InvalidArgument("surface genus must be >= 0, got " + std::to_string(genus));
  std::vector<FgAbGroup> summands(static_cast<std::size_t>(2 * genus), lookup_pi(entry, n));
  summands.push_back(lookup_pi(entry, n + 1));
  return direct_sum_form(summands);
}

ConnectingMap connecting_hom_surface(const GroupCatalogEntry& entry, int genus,
                                     const GroupElement& b, int n) {
  check_degree(n);
  const FgAbGroup& domain = lookup_pi(entry, n);
  const FgAbGroup& last = lookup_pi(entry, n + 1);
  const CanonicalForm target = surface_target_form(entry, genus, n);
  if (!(b.group() == lookup_pi(entry, 1)))
    throw InvalidArgument("characteristic class must lie in pi_1(" + entry.name + ")");

  if (delta_vanishes(entry, domain, last, b)) return Homomorphism::zero(domain, target.group);
  auto pairing = lookup_samelson(entry, n, 1);
  if (!pairing) return PairingUnavailable{entry.name, n, 1};

  // Block coordinates: 2g copies of pi_n stay zero, the last block carries
  // -<a, b>.
  const IntMatrix last_block = negated_pairing_columns(*pairing, b);
  IntMatrix blocks = zero_matrix(target.to_canonical.cols(), domain.generator_count());
  blocks.bottomRows(last_block.rows()) = last_block;
  return Homomorphism(domain, target.group, IntMatrix(target.to_canonical * blocks));
}

namespace {

Homomorphism require_map(ConnectingMap map, const std::string& label) {
  if (auto* unavailable = std::get_if<PairingUnavailable>(&map))
    throw PairingUnavailableError("cannot build " + label + ": " + unavailable->message());
  return std::get<Homomorphism>(std::move(map));
}

std::string delta_label(int n, const std::string& target) {
  return "delta_" + std::to_string(n) + ": pi_" + std::to_string(n) + " -> " + target;
}

SequenceResult sphere_sequence(const GroupCatalogEntry& entry, int m, const GroupElement& b, int n,
                               std::size_t torsion_bound) {
  const auto target = [&](int k) { return "pi_" + std::to_string(k + m - 1); };
  Homomorphism left = require_map(connecting_hom_sphere(entry, m, b, n + 1),
                                  delta_label(n + 1, target(n + 1)));
  Homomorphism right =
      require_map(connecting_hom_sphere(entry, m, b, n), delta_label(n, target(n)));
  return middle_group(left, right, torsion_bound);
}

}  // namespace

SequenceResult gauge_homotopy(const GroupCatalogEntry& entry, const BundleSpec& bundle, int n,
                              std::size_t torsion_bound) {
  check_degree(n);
  const Base& base = bundle.base;
  if (!(bundle.clazz.group() == lookup_pi(entry, base.class_degree())))
    throw InvalidArgument("bundle class does not lie in pi_" + std::to_string(base.class_degree()) +
                          "(" + entry.name + ")");
  if (base.is_sphere())
    return sphere_sequence(entry, base.dimension_or_genus, bundle.clazz, n, torsion_bound);

  const int genus = base.dimension_or_genus;
  const auto target = [&](int k) {
    return "pi_" + std::to_string(k) + "^" + std::to_string(2 * genus) + " + pi_" +
           std::to_string(k + 1);
  };
  Homomorphism left = require_map(connecting_hom_surface(entry, genus, bundle.clazz, n + 1),
                                  delta_label(n + 1, target(n + 1)));
  Homomorphism right = require_map(connecting_hom_surface(entry, genus, bundle.clazz, n),
                                   delta_label(n, target(n)));
  SequenceResult result = middle_group(left, right, torsion_bound);

  // Genus 0 is the sphere S^2; both sequences must agree.
  if (genus == 0 && !(sphere_sequence(entry, 2, bundle.clazz, n, torsion_bound) == result))
    throw std::logic_error("genus-0 surface and S^2 sequences disagree for " + entry.name);
  return result;
}

int gauge_homotopy_rational(const GroupCatalogEntry& entry, const Base& base, int n) {
  check_degree(n);
  if (base.is_sphere()) {
    if (base.dimension_or_genus < 1) throw InvalidArgument("sphere dimension must be >= 1");
    return rational_pi(entry, n + base.dimension_or_genus) + rational_pi(entry, n);
  }
  const int genus = base.dimension_or_genus;
  if (genus < 0) throw InvalidArgument("surface genus must be >= 0");
  return rational_pi(entry, n + 2) + 2 * genus * rational_pi(entry, n + 1) + rational_pi(entry, n);
}

int gauge_homotopy_rational(const GroupCatalogEntry& entry, const BundleSpec& bundle, int n) {
  return gauge_homotopy_rational(entry, bundle.base, n);
}

int gauge_homotopy_rational_via_sequence(const GroupCatalogEntry& entry, const Base& base, int n) {
  check_degree(n);
  const auto rational = [&](int k) { return FgAbGroup::free(tensor_q(lookup_pi(entry, k))); };

  FgAbGroup left_domain = rational(n + 1);
  FgAbGroup right_domain = rational(n);
  FgAbGroup left_target;
  FgAbGroup right_target;
  if (base.is_sphere()) {
    const int m = base.dimension_or_genus;
    if (m < 1) throw InvalidArgument("sphere dimension must be >= 1");
    left_target = rational(n + m);
    right_target = rational(n + m - 1);
  } else {
    const int genus = base.dimension_or_genus;
    if (genus < 0) throw InvalidArgument("surface genus must be >= 0");
    const auto blocks = [&](int k) {
      FgAbGroup sum = rational(k + 1);
      for (int i = 0; i < 2 * genus; ++i) sum = direct_sum(sum, rational(k));
      return sum;
    };
    left_target = blocks(n + 1);
    right_target = blocks(n);
  }
  const SequenceResult result = middle_group(Homomorphism::zero(left_domain, left_target),
                                             Homomorphism::zero(right_domain, right_target));
  return static_cast<int>(tensor_q(result.group));
}

FgAbGroup su2_s4_pi2(const Catalog& catalog, long k) {
  const GroupCatalogEntry& su2 = catalog.entry("SU2");
  const BundleSpec bundle = make_bundle(su2, Base::sphere(4), std::vector<long>{k});
  const SequenceResult result = gauge_homotopy(su2, bundle, 2);
  if (!result.resolved())
    throw std::logic_error("pi_2 of an SU2 gauge group over S^4 came out ambiguous: " +
                           describe(result));
  return result.group;
}

}  // namespace ghg
