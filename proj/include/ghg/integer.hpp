#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <vector>

namespace Eigen {

// Exact integers as an Eigen scalar. Only ring operations are used on
// matrices of this type; nothing here relies on division or norms.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };

  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ghg {

using Integer = mpz_class;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/// Representative of a modulo m in [0, |m|). For m == 0 returns a unchanged.
inline Integer floor_mod(const Integer& a, const Integer& m) {
  if (m == 0) return a;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline IntMatrix int_matrix(Eigen::Index rows, Eigen::Index cols,
                            const std::vector<long>& row_major) {
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = row_major[static_cast<std::size_t>(i * cols + j)];
  return m;
}

inline IntMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return IntMatrix::Constant(rows, cols, Integer(0));
}

inline IntMatrix identity_matrix(Eigen::Index n) {
  IntMatrix m = zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline IntVector zero_vector(Eigen::Index n) {
  return IntVector::Constant(n, Integer(0));
}

inline bool is_zero(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool is_zero(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

}  // namespace ghg
