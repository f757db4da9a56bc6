#include "ghg/catalog.hpp"
#include "ghg/errors.hpp"
#include "ghg/gauge.hpp"

#include <doctest.h>

#include <numeric>

using namespace ghg;

namespace {

const Catalog& shipped() {
  static const Catalog catalog = load_catalog(GHG_DEFAULT_CATALOG);
  return catalog;
}

Homomorphism as_map(const ConnectingMap& m) {
  REQUIRE(std::holds_alternative<Homomorphism>(m));
  return std::get<Homomorphism>(m);
}

}  // namespace

TEST_CASE("sphere connecting map for SU2 over S^4") {
  const auto& su2 = shipped().entry("SU2");
  const FgAbGroup z = FgAbGroup::free(1);
  for (long k = -13; k <= 13; ++k) {
    const auto b = Integer(k) * GroupElement::generator(z, 0);
    const auto f = as_map(connecting_hom_sphere(su2, 4, b, 3));
    CHECK(f.domain() == z);
    CHECK(f.codomain() == FgAbGroup::cyclic(12));
    CHECK(f.matrix()(0, 0) == floor_mod(Integer(-k), 12));
  }
  const auto zero = as_map(connecting_hom_sphere(su2, 4, GroupElement::generator(z, 0), 2));
  CHECK(zero.domain().is_trivial());
  CHECK(zero.is_zero());
}

TEST_CASE("abelian group gives zero connecting maps") {
  const auto& u1 = shipped().entry("U1");
  const auto b = Integer(3) * GroupElement::generator(FgAbGroup::free(1), 0);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 6; ++n) {
      const auto zero = GroupElement::zero(lookup_pi(u1, m - 1));
      CHECK(as_map(connecting_hom_sphere(u1, m, m == 2 ? b : zero, n)).is_zero());
    }
  const auto s = as_map(connecting_hom_surface(u1, 2, b, 1));
  CHECK(s.is_zero());
  CHECK(s.domain() == FgAbGroup::free(1));
  CHECK(s.codomain() == FgAbGroup::free(4));
}

TEST_CASE("surface connecting maps") {
  const auto& su2 = shipped().entry("SU2");
  const auto zero = as_map(connecting_hom_surface(su2, 1, GroupElement::zero(FgAbGroup()), 3));
  CHECK(zero.is_zero());
  CHECK(zero.codomain() == FgAbGroup(2, {2}));

  // TEST fixture: <gen, gen> = 2 in pi_2 = Z/6, so delta(gen) = (0, 0, -2) = (0, 0, 4).
  const auto& t = shipped().entry("TEST");
  const auto gen = GroupElement::generator(FgAbGroup::free(1), 0);
  const auto f = as_map(connecting_hom_surface(t, 1, gen, 1));
  CHECK(f.codomain() == FgAbGroup(2, {6}));
  const auto form = surface_target_form(t, 1, 1);
  IntVector block = zero_vector(3);
  block(2) = 4;
  CHECK(f(GroupElement::generator(f.domain(), 0)).coordinates() ==
        reduce_coordinates(form.group, form.to_canonical * block));
}

TEST_CASE("missing pairing data is reported") {
  const auto& t = shipped().entry("TEST");
  // Needs <pi_3, pi_1> which the fixture leaves out.
  const auto m = connecting_hom_sphere(t, 2, GroupElement::generator(lookup_pi(t, 1), 0), 3);
  REQUIRE(std::holds_alternative<PairingUnavailable>(m));
  CHECK(std::get<PairingUnavailable>(m).n == 3);
  CHECK(std::get<PairingUnavailable>(m).m == 1);
  const auto bundle = make_bundle(t, Base::sphere(2), std::vector<long>{1});
  CHECK_THROWS_AS(gauge_homotopy(t, bundle, 2), PairingUnavailableError);
}

TEST_CASE("gauge_homotopy for SU2 over S^4") {
  const auto& su2 = shipped().entry("SU2");
  const auto at = [&](long k) {
    return gauge_homotopy(su2, make_bundle(su2, Base::sphere(4), std::vector<long>{k}), 2);
  };
  CHECK(at(6).group == FgAbGroup::cyclic(6));
  CHECK(at(1).group.is_trivial());
  CHECK(at(0).group == FgAbGroup::cyclic(12));
  for (long k = -24; k <= 24; ++k) {
    const auto r = at(k);
    REQUIRE(r.resolved());
    CHECK(r.group == FgAbGroup::cyclic(std::gcd(k, 12L)));
  }
  CHECK(su2_s4_pi2(shipped(), 6) == FgAbGroup::cyclic(6));
  CHECK(su2_s4_pi2(shipped(), 1).is_trivial());
  CHECK(su2_s4_pi2(shipped(), -5).is_trivial());
}

TEST_CASE("gauge_homotopy argument checks") {
  const auto& su2 = shipped().entry("SU2");
  const auto bundle = make_bundle(su2, Base::sphere(4), std::vector<long>{1});
  CHECK_THROWS_AS(gauge_homotopy(su2, bundle, 0), InvalidArgument);
  CHECK_THROWS_AS(gauge_homotopy(su2, bundle, su2.table_depth()), TableDepthExceeded);
  CHECK_THROWS_AS(make_bundle(su2, Base::sphere(4), std::vector<long>{1, 2}), InvalidArgument);
  CHECK_THROWS_AS(make_bundle(su2, Base::sphere(0), std::vector<long>{}), InvalidArgument);
}

TEST_CASE("genus zero surface agrees with S^2") {
  const auto& t = shipped().entry("TEST");
  const auto both = [&](long c, int n) {
    const auto s = gauge_homotopy(t, make_bundle(t, Base::surface(0), std::vector<long>{c}), n);
    const auto p = gauge_homotopy(t, make_bundle(t, Base::sphere(2), std::vector<long>{c}), n);
    CHECK(s == p);
  };
  for (long c = -3; c <= 3; ++c) both(c, 1);
  for (int n = 1; n <= 8; ++n) both(0, n);
}

TEST_CASE("gauge_homotopy_rational examples") {
  const auto& su2 = shipped().entry("SU2");
  for (long k : {0L, 1L, 7L})
    CHECK(gauge_homotopy_rational(su2, make_bundle(su2, Base::sphere(4), std::vector<long>{k}),
                                  3) == 1);
  CHECK(gauge_homotopy_rational(su2, Base::surface(2), 2) == 4);
  CHECK(gauge_homotopy_rational(su2, Base::sphere(4), 2) == 0);
  for (int n = 1; n <= 10; ++n)
    CHECK(gauge_homotopy_rational(su2, Base::surface(2), n) ==
          gauge_homotopy_rational_via_sequence(su2, Base::surface(2), n));
}

TEST_CASE("rational rank of the integral result matches") {
  const auto& su2 = shipped().entry("SU2");
  const auto bundle = make_bundle(su2, Base::sphere(4), std::vector<long>{2});
  int computed = 0;
  for (int n = 1; n <= 8; ++n) {
    std::size_t rank = 0;
    try {
      rank = gauge_homotopy(su2, bundle, n).rank();
    } catch (const PairingUnavailableError&) {
      continue;
    }
    CHECK(static_cast<int>(rank) == gauge_homotopy_rational(su2, bundle, n));
    ++computed;
  }
  CHECK(computed >= 2);
}

TEST_CASE("SU3 over S^4 in degree 2") {
  const auto& su3 = shipped().entry("SU3");
  for (long k = -12; k <= 12; ++k) {
    const auto r = gauge_homotopy(su3, make_bundle(su3, Base::sphere(4), std::vector<long>{k}), 2);
    REQUIRE(r.resolved());
    CHECK(r.group == FgAbGroup::cyclic(std::gcd(k, 6L)));
  }
}
