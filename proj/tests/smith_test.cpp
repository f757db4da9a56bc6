#include "ghg/oracle.hpp"
#include "ghg/random.hpp"
#include "ghg/smith.hpp"

#include <doctest.h>

using namespace ghg;
using namespace ghg::oracle;

namespace {

void check_smith(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  REQUIRE(s.U.rows() == a.rows());
  REQUIRE(s.V.cols() == a.cols());
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.V * s.V_inverse == identity_matrix(a.cols()));
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  const Eigen::Index n = std::min(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    CHECK(s.D(i, i) >= 0);
    if (i + 1 < n && s.D(i, i) != 0) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
    if (i + 1 < n && s.D(i, i) == 0) CHECK(s.D(i + 1, i + 1) == 0);
  }
}

}  // namespace

TEST_CASE("snf of diag(2,3)") {
  const IntMatrix a = int_matrix(2, 2, {2, 0, 0, 3});
  const auto s = smith_normal_form(a);
  CHECK(s.D == int_matrix(2, 2, {1, 0, 0, 6}));
  check_smith(a);
}

TEST_CASE("snf of the identity is the identity") {
  const auto s = smith_normal_form(identity_matrix(3));
  CHECK(s.D == identity_matrix(3));
}

TEST_CASE("snf normalizes sign") {
  const auto s = smith_normal_form(int_matrix(1, 1, {-5}));
  CHECK(s.D(0, 0) == 5);
}

TEST_CASE("snf of empty shapes") {
  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}}) {
    const auto s = smith_normal_form(zero_matrix(r, c));
    CHECK(s.D.rows() == r);
    CHECK(s.D.cols() == c);
    CHECK(s.rank() == 0);
  }
}

TEST_CASE("snf works for plain machine integers too") {
  Eigen::MatrixXi a(2, 2);
  a << 4, 6, 6, 9;
  const auto s = smith_normal_form(a);
  CHECK((s.U * a * s.V) == s.D);
  CHECK(s.D(0, 0) == 1);
  CHECK(s.D(1, 1) == 0);
}

TEST_CASE("snf survives entry growth") {
  // Large entries that would overflow 64-bit intermediates.
  IntMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("987654321098765432109876543210");
  a(1, 0) = Integer("-555555555555555555555555555555");
  a(1, 1) = Integer("777777777777777777777777777777");
  check_smith(a);
}

TEST_CASE("snf random matrices") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto r = uniform(rng, 0, 6);
    const auto c = uniform(rng, 0, 6);
    check_smith(random_matrix(rng, r, c, -9, 9));
  }
}

TEST_CASE("determinant oracle") {
  CHECK(determinant(int_matrix(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(determinant(int_matrix(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2})) == 6);
  CHECK(determinant(zero_matrix(0, 0)) == 1);
}
