#include "ghg/catalog.hpp"
#include "ghg/errors.hpp"

#include <doctest.h>

#include <string>

using namespace ghg;

namespace {

const Catalog& shipped() {
  static const Catalog catalog = load_catalog(GHG_DEFAULT_CATALOG);
  return catalog;
}

// One-entry document.
std::string with_entry(const std::string& exponents, const std::string& pi,
                       const std::string& samelson) {
  return R"([{"name": "K", "connected": true, "rational_exponents": )" + exponents +
         R"(, "pi": )" + pi + R"(, "samelson": )" + samelson + "}]";
}

const std::string kPi =
    R"([{"degree": 0, "rank": 0, "factors": [], "source": "x"},
        {"degree": 1, "rank": 0, "factors": [], "source": "x"},
        {"degree": 2, "rank": 0, "factors": [], "source": "x"},
        {"degree": 3, "rank": 1, "factors": [], "source": "x"},
        {"degree": 4, "rank": 0, "factors": [2], "source": "x"},
        {"degree": 5, "rank": 0, "factors": [2], "source": "x"},
        {"degree": 6, "rank": 0, "factors": [12], "source": "x"}])";

}  // namespace

TEST_CASE("shipped catalog loads") {
  CHECK(shipped().contains("SU2"));
  CHECK(shipped().contains("SU3"));
  CHECK(shipped().contains("U1"));
  CHECK(shipped().contains("TEST"));
  CHECK(shipped().entry("SU2").table_depth() >= 12);
  CHECK_THROWS_AS(shipped().entry("G2"), UnknownGroup);
}

TEST_CASE("minimal document parses") {
  const auto c = parse_catalog(with_entry("[3]", kPi, R"([{"n": 3, "m": 3, "values": [[[1]]]}])"));
  REQUIRE(c.contains("K"));
  CHECK(c.entry("K").table_depth() == 6);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(parse_catalog(with_entry("[4]", kPi, "[]")), ValidationError);
  // pi_1 x pi_2 -> pi_3 = Z: a nonzero value has infinite order.
  const std::string free_target =
      R"([{"degree": 0, "rank": 0, "factors": [], "source": "x"},
          {"degree": 1, "rank": 1, "factors": [], "source": "x"},
          {"degree": 2, "rank": 0, "factors": [2], "source": "x"},
          {"degree": 3, "rank": 1, "factors": [], "source": "x"}])";
  CHECK_NOTHROW(
      parse_catalog(with_entry("[1, 3]", free_target, R"([{"n": 1, "m": 2, "values": [[[0]]]}])")));
  CHECK_THROWS_AS(
      parse_catalog(with_entry("[1, 3]", free_target, R"([{"n": 1, "m": 2, "values": [[[1]]]}])")),
      ValidationError);
  // Degree 3 has rank 1 but two exponents claim degree 3 and 5.
  CHECK_THROWS_AS(parse_catalog(with_entry("[3, 5]", kPi, "[]")), ValidationError);
  // Pairing with the wrong shape.
  CHECK_THROWS_AS(
      parse_catalog(with_entry("[3]", kPi, R"([{"n": 3, "m": 3, "values": [[[1], [1]]]}])")),
      ValidationError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_catalog("not json"), ParseError);
  CHECK_THROWS_AS(parse_catalog(R"([{"name": "K"}])"), ParseError);
  CHECK_THROWS_AS(parse_catalog(R"([{"name": "K", "connected": true, "rational_exponents": [3],
                                     "pi": [], "samelson": [], "colour": 1}])"),
                  ParseError);
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.json"), ParseError);
}

TEST_CASE("lookup_pi") {
  const auto& su2 = shipped().entry("SU2");
  CHECK(lookup_pi(su2, 3) == FgAbGroup::free(1));
  CHECK(lookup_pi(su2, 6) == FgAbGroup::cyclic(12));
  CHECK(lookup_pi(su2, 2).is_trivial());
  CHECK_THROWS_AS(lookup_pi(su2, su2.table_depth() + 1), TableDepthExceeded);
  CHECK_THROWS_AS(lookup_pi(su2, -1), InvalidArgument);
}

TEST_CASE("lookup_samelson") {
  const auto& su2 = shipped().entry("SU2");
  const auto p = lookup_samelson(su2, 3, 3);
  REQUIRE(p.has_value());
  CHECK(p->value(0, 0) == GroupElement::generator(FgAbGroup::cyclic(12), 0));

  const auto u1 = lookup_samelson(shipped().entry("U1"), 1, 1);
  REQUIRE(u1.has_value());
  CHECK(u1->value(0, 0).is_zero());

  CHECK_FALSE(lookup_samelson(su2, 4, 5).has_value());
  // pi_2 trivial gives the zero pairing without data.
  const auto z = lookup_samelson(su2, 2, 3);
  REQUIRE(z.has_value());
  CHECK(z->values.empty());
}

TEST_CASE("samelson_apply") {
  const auto& su2 = shipped().entry("SU2");
  const auto p = *lookup_samelson(su2, 3, 3);
  const FgAbGroup z = FgAbGroup::free(1);
  const auto gen = GroupElement::generator(z, 0);
  const auto six = samelson_apply(p, Integer(2) * gen, Integer(3) * gen);
  CHECK(six == Integer(6) * GroupElement::generator(FgAbGroup::cyclic(12), 0));
  CHECK(samelson_apply(p, GroupElement::zero(z), gen).is_zero());
  CHECK(samelson_apply(p, gen, gen).order() == 12);
  CHECK_THROWS_AS(samelson_apply(p, GroupElement::zero(FgAbGroup::cyclic(2)), gen),
                  InvalidArgument);
}

TEST_CASE("rational_pi") {
  CHECK(rational_pi(shipped().entry("SU2"), 3) == 1);
  CHECK(rational_pi(shipped().entry("SU3"), 5) == 1);
  CHECK(tensor_q(lookup_pi(shipped().entry("SU3"), 5)) == 1);
  CHECK(rational_pi(shipped().entry("SU2"), 4) == 0);
}
