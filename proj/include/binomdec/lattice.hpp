#ifndef BINOMDEC_LATTICE_HPP
#define BINOMDEC_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "binomdec/intmatrix.hpp"

namespace binomdec {

/// Subgroup of Z^ambient given by a basis in column Hermite form. The ambient
/// is a sorted list of variable indices; basis rows follow that order.
/// Construction canonicalizes, so equal lattices compare equal structurally.
class Lattice {
 public:
  Lattice() = default;  // zero lattice in Z^0
  Lattice(std::vector<int> ambient, const IntMatrix& generators);
  // ambient {0, 1, ..., n-1}
  Lattice(int n, const IntMatrix& generators);
  static Lattice zero(std::vector<int> ambient);

  const std::vector<int>& ambient() const { return ambient_; }
  const IntMatrix& basis() const { return basis_; }
  int rank() const { return basis_.cols(); }
  int dim() const { return static_cast<int>(ambient_.size()); }

  bool member(const std::vector<mpz_class>& v) const;
  // integer coordinates of v in the basis, or nothing if v is outside
  std::optional<std::vector<mpz_class>> coordinates(const std::vector<mpz_class>& v) const;

  bool operator==(const Lattice& o) const;
  bool operator!=(const Lattice& o) const { return !(*this == o); }
  bool operator<(const Lattice& o) const;

  std::string str() const;

 private:
  std::vector<int> ambient_;
  IntMatrix basis_;
};

/// Finite quotient L_sup / L: invariant factors greater than one (with the
/// divisibility chain) and, per factor, a generator written in ambient
/// coordinates. The factor product is the index.
struct QuotientStructure {
  std::vector<mpz_class> factors;
  IntMatrix lifts;  // one column per factor
};

/// Sat(L) = (Q tensor L) meet Z^ambient.
Lattice saturate(const Lattice& l);

/// Largest lattice between L and Sat(L) whose index over L is a power of p.
/// p = 0 returns L itself.
Lattice sat_p(const Lattice& l, long p);

/// Largest lattice between L and Sat(L) whose index over L is prime to p.
/// p = 0 returns Sat(L).
Lattice sat_prime_p(const Lattice& l, long p);

QuotientStructure quotient(const Lattice& l, const Lattice& l_sup);

}  // namespace binomdec

#endif
