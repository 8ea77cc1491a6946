#include "binomdec/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace binomdec {

namespace {

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

IntMatrix strip_zero_columns(const IntMatrix& h) {
  std::vector<std::vector<mpz_class>> keep;
  for (int j = 0; j < h.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < h.rows() && zero; ++i)
      if (h.at(i, j) != 0) zero = false;
    if (!zero) keep.push_back(h.column(j));
  }
  return IntMatrix::from_columns(h.rows(), keep);
}

}  // namespace

Lattice::Lattice(std::vector<int> ambient, const IntMatrix& generators)
    : ambient_(std::move(ambient)) {
  for (size_t i = 0; i + 1 < ambient_.size(); ++i)
    if (ambient_[i] >= ambient_[i + 1])
      throw DimensionMismatch("ambient indices must be strictly increasing");
  if (generators.rows() != static_cast<int>(ambient_.size()))
    throw DimensionMismatch("generator rows must match the ambient size");
  basis_ = strip_zero_columns(hnf(generators).h);
}

Lattice::Lattice(int n, const IntMatrix& generators)
    : Lattice(
          [n] {
            std::vector<int> a(n);
            std::iota(a.begin(), a.end(), 0);
            return a;
          }(),
          generators) {}

Lattice Lattice::zero(std::vector<int> ambient) {
  return Lattice(std::move(ambient), IntMatrix(static_cast<int>(ambient.size()), 0));
}

std::optional<std::vector<mpz_class>> Lattice::coordinates(
    const std::vector<mpz_class>& v) const {
  if (v.size() != ambient_.size())
    throw DimensionMismatch("vector length does not match the ambient size");
  std::vector<mpz_class> rem = v;
  std::vector<mpz_class> coords(basis_.cols());
  for (int j = 0; j < basis_.cols(); ++j) {
    int pivot = 0;
    while (basis_.at(pivot, j) == 0) ++pivot;  // column is nonzero by construction
    // columns right of j vanish in this pivot row, so rem[pivot] is determined
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[pivot].get_mpz_t(),
                basis_.at(pivot, j).get_mpz_t());
    if (r != 0) return std::nullopt;
    coords[j] = q;
    if (q != 0)
      for (int i = pivot; i < basis_.rows(); ++i) rem[i] -= q * basis_.at(i, j);
  }
  for (const mpz_class& x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

bool Lattice::member(const std::vector<mpz_class>& v) const {
  return coordinates(v).has_value();
}

bool Lattice::operator==(const Lattice& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Lattice::operator<(const Lattice& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  return basis_ < o.basis_;
}

std::string Lattice::str() const {
  std::ostringstream os;
  os << "lattice(ambient=[";
  for (size_t i = 0; i < ambient_.size(); ++i) os << (i ? "," : "") << ambient_[i];
  os << "], basis=" << basis_.str() << ")";
  return os.str();
}

namespace {

Lattice scaled_saturation(const Lattice& l, long p, bool p_part) {
  // SNF of the basis: B = Uinv * D * Vinv, so Sat(L) is spanned by the first
  // r columns s_i of Uinv and L by the d_i * s_i. Splitting d_i = p^a * m
  // gives the intermediate lattices: m * s_i spans the p-power-index one,
  // p^a * s_i the prime-to-p one.
  SnfFull f = snf_full(l.basis());
  int r = l.rank();
  std::vector<std::vector<mpz_class>> cols;
  for (int j = 0; j < r; ++j) {
    mpz_class d = f.d.at(j, j);
    mpz_class ppow = 1;
    while (d % p == 0) {
      d /= p;
      ppow *= p;
    }
    mpz_class scale = p_part ? d : ppow;
    std::vector<mpz_class> col = f.uinv.column(j);
    for (mpz_class& x : col) x *= scale;
    cols.push_back(std::move(col));
  }
  return Lattice(l.ambient(), IntMatrix::from_columns(l.dim(), cols));
}

}  // namespace

Lattice saturate(const Lattice& l) {
  SnfFull f = snf_full(l.basis());
  std::vector<std::vector<mpz_class>> cols;
  for (int j = 0; j < l.rank(); ++j) cols.push_back(f.uinv.column(j));
  return Lattice(l.ambient(), IntMatrix::from_columns(l.dim(), cols));
}

Lattice sat_p(const Lattice& l, long p) {
  if (p == 0) return l;
  if (!is_prime_long(p)) throw InvalidPrime("sat_p needs p = 0 or p prime");
  return scaled_saturation(l, p, true);
}

Lattice sat_prime_p(const Lattice& l, long p) {
  if (p == 0) return saturate(l);
  if (!is_prime_long(p)) throw InvalidPrime("sat_prime_p needs p = 0 or p prime");
  return scaled_saturation(l, p, false);
}

QuotientStructure quotient(const Lattice& l, const Lattice& l_sup) {
  if (l.ambient() != l_sup.ambient())
    throw DimensionMismatch("quotient requires a common ambient");
  // coordinates of each basis vector of L in the basis of L_sup
  std::vector<std::vector<mpz_class>> coord_cols;
  for (int j = 0; j < l.rank(); ++j) {
    std::optional<std::vector<mpz_class>> c = l_sup.coordinates(l.basis().column(j));
    if (!c) throw NotASublattice();
    coord_cols.push_back(std::move(*c));
  }
  if (l.rank() != l_sup.rank()) throw InfiniteQuotient();
  int r = l_sup.rank();
  SnfFull f = snf_full(IntMatrix::from_columns(r, coord_cols));
  // L_sup / L is the direct sum of Z/d_i generated by the columns of Uinv
  QuotientStructure out;
  std::vector<std::vector<mpz_class>> lift_cols;
  for (int j = 0; j < r; ++j) {
    mpz_class d = f.d.at(j, j);
    if (d == 1) continue;
    out.factors.push_back(d);
    // back to ambient coordinates through the basis of L_sup
    std::vector<mpz_class> amb(l_sup.dim(), 0);
    for (int i = 0; i < r; ++i)
      for (int a = 0; a < l_sup.dim(); ++a)
        amb[a] += f.uinv.at(i, j) * l_sup.basis().at(a, i);
    lift_cols.push_back(std::move(amb));
  }
  out.lifts = IntMatrix::from_columns(l_sup.dim(), lift_cols);
  return out;
}

}  // namespace binomdec
