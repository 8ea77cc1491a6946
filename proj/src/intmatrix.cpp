#include "binomdec/intmatrix.hpp"

#include <sstream>
#include <utility>

namespace binomdec {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimensions");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0 || e_.size() != static_cast<size_t>(rows) * cols)
    throw DimensionMismatch("entry count does not match matrix dimensions");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<mpz_class>>& cols) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != static_cast<size_t>(rows))
      throw DimensionMismatch("column length does not match row count");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<long>>& cols) {
  std::vector<std::vector<mpz_class>> z;
  z.reserve(cols.size());
  for (const auto& c : cols) z.emplace_back(c.begin(), c.end());
  return from_columns(rows, z);
}

const mpz_class& IntMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw DimensionMismatch("matrix index out of range");
  return e_[static_cast<size_t>(i) * cols_ + j];
}

mpz_class& IntMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw DimensionMismatch("matrix index out of range");
  return e_[static_cast<size_t>(i) * cols_ + j];
}

std::vector<mpz_class> IntMatrix::column(int j) const {
  std::vector<mpz_class> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return e_[i] < o.e_[i];
  return false;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (const mpz_class& x : e_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

void col_swap(IntMatrix& a, int j1, int j2) {
  for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, j1), a.at(i, j2));
}

void col_negate(IntMatrix& a, int j) {
  for (int i = 0; i < a.rows(); ++i) a.at(i, j) = -a.at(i, j);
}

// col_j += q * col_jsrc
void col_addmul(IntMatrix& a, int j, int jsrc, const mpz_class& q) {
  if (q == 0) return;
  for (int i = 0; i < a.rows(); ++i) a.at(i, j) += q * a.at(i, jsrc);
}

void row_swap(IntMatrix& a, int i1, int i2) {
  for (int j = 0; j < a.cols(); ++j) std::swap(a.at(i1, j), a.at(i2, j));
}

void row_negate(IntMatrix& a, int i) {
  for (int j = 0; j < a.cols(); ++j) a.at(i, j) = -a.at(i, j);
}

// row_i += q * row_isrc
void row_addmul(IntMatrix& a, int i, int isrc, const mpz_class& q) {
  if (q == 0) return;
  for (int j = 0; j < a.cols(); ++j) a.at(i, j) += q * a.at(isrc, j);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  int c = 0;  // next pivot column
  for (int i = 0; i < m.rows() && c < m.cols(); ++i) {
    // gcd out row i across columns c.. until one nonzero entry remains
    for (;;) {
      int best = -1;
      for (int j = c; j < m.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        if (best < 0 || cmp(abs(a.at(i, j)), abs(a.at(i, best))) < 0) best = j;
      }
      if (best < 0) break;  // row has no pivot among the free columns
      if (best != c) {
        col_swap(a, c, best);
        col_swap(u, c, best);
      }
      if (a.at(i, c) < 0) {
        col_negate(a, c);
        col_negate(u, c);
      }
      bool clean = true;
      for (int j = c + 1; j < m.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        mpz_class q = -floor_div(a.at(i, j), a.at(i, c));
        col_addmul(a, j, c, q);
        col_addmul(u, j, c, q);
        if (a.at(i, j) != 0) clean = false;
      }
      if (clean) {
        // normalize the entries left of the pivot into [0, pivot)
        for (int j = 0; j < c; ++j) {
          mpz_class q = -floor_div(a.at(i, j), a.at(i, c));
          col_addmul(a, j, c, q);
          col_addmul(u, j, c, q);
        }
        ++c;
        break;
      }
    }
  }
  return {std::move(a), std::move(u)};
}

namespace {

struct SnfWork {
  IntMatrix a, u, v, uinv, vinv;

  void rswap(int i1, int i2) {
    row_swap(a, i1, i2);
    row_swap(u, i1, i2);
    col_swap(uinv, i1, i2);
  }
  void rneg(int i) {
    row_negate(a, i);
    row_negate(u, i);
    col_negate(uinv, i);
  }
  void raddmul(int i, int isrc, const mpz_class& q) {
    row_addmul(a, i, isrc, q);
    row_addmul(u, i, isrc, q);
    col_addmul(uinv, isrc, i, -q);
  }
  void cswap(int j1, int j2) {
    col_swap(a, j1, j2);
    col_swap(v, j1, j2);
    row_swap(vinv, j1, j2);
  }
  void cneg(int j) {
    col_negate(a, j);
    col_negate(v, j);
    row_negate(vinv, j);
  }
  void caddmul(int j, int jsrc, const mpz_class& q) {
    col_addmul(a, j, jsrc, q);
    col_addmul(v, j, jsrc, q);
    row_addmul(vinv, jsrc, j, -q);
  }
};

}  // namespace

SnfFull snf_full(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
            IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& a = w.a;
  int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // move the absolutely smallest nonzero entry of the trailing block to (t, t)
      int bi = -1, bj = -1;
      for (int i = t; i < m.rows(); ++i)
        for (int j = t; j < m.cols(); ++j) {
          if (a.at(i, j) == 0) continue;
          if (bi < 0 || cmp(abs(a.at(i, j)), abs(a.at(bi, bj))) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) return {std::move(w.a), std::move(w.u), std::move(w.v),
                          std::move(w.uinv), std::move(w.vinv)};
      if (bi != t) w.rswap(t, bi);
      if (bj != t) w.cswap(t, bj);
      if (a.at(t, t) < 0) w.rneg(t);

      bool clean = true;
      for (int i = t + 1; i < m.rows(); ++i) {
        if (a.at(i, t) == 0) continue;
        w.raddmul(i, t, -floor_div(a.at(i, t), a.at(t, t)));
        if (a.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < m.cols(); ++j) {
        if (a.at(t, j) == 0) continue;
        w.caddmul(j, t, -floor_div(a.at(t, j), a.at(t, t)));
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot isolated; enforce that it divides the trailing block
      bool divides = true;
      for (int i = t + 1; i < m.rows() && divides; ++i)
        for (int j = t + 1; j < m.cols() && divides; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            w.raddmul(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
  return {std::move(w.a), std::move(w.u), std::move(w.v),
          std::move(w.uinv), std::move(w.vinv)};
}

SnfResult snf(const IntMatrix& m) {
  SnfFull f = snf_full(m);
  return {std::move(f.d), std::move(f.u), std::move(f.v)};
}

}  // namespace binomdec
