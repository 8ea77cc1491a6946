#ifndef BINOMDEC_INTMATRIX_HPP
#define BINOMDEC_INTMATRIX_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "binomdec/errors.hpp"

namespace binomdec {

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<mpz_class> entries);
  static IntMatrix identity(int n);
  // columns given as vectors of length rows
  static IntMatrix from_columns(int rows, const std::vector<std::vector<mpz_class>>& cols);
  static IntMatrix from_columns(int rows, const std::vector<std::vector<long>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const mpz_class& at(int i, int j) const;
  mpz_class& at(int i, int j);
  std::vector<mpz_class> column(int j) const;

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool operator<(const IntMatrix& o) const;  // ordering for canonical containers
  IntMatrix transpose() const;
  bool is_zero() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> e_;
};

/// Column Hermite form: h = m * u with u unimodular. Pivot rows strictly
/// increase left to right, pivots are positive, entries left of a pivot in its
/// row lie in [0, pivot), entries right of it vanish; zero columns sit at the
/// right edge.
struct HnfResult {
  IntMatrix h, u;
};
HnfResult hnf(const IntMatrix& m);

/// Smith form: d = u * m * v diagonal with nonnegative d_1 | d_2 | ...,
/// u and v unimodular.
struct SnfResult {
  IntMatrix d, u, v;
};
SnfResult snf(const IntMatrix& m);

/// Smith form plus the inverses of both transforms.
struct SnfFull {
  IntMatrix d, u, v, uinv, vinv;
};
SnfFull snf_full(const IntMatrix& m);

}  // namespace binomdec

#endif
