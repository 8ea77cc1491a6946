#ifndef BINOMDEC_POLY_HPP
#define BINOMDEC_POLY_HPP

#include <string>
#include <vector>

#include "binomdec/ring.hpp"

namespace binomdec {

// Exponent vector of a monomial; one entry per ring variable.
using Expvec = std::vector<int>;

Expvec exp_add(const Expvec& a, const Expvec& b);
Expvec exp_lcm(const Expvec& a, const Expvec& b);
// componentwise a - b; caller guarantees divisibility where nonnegativity matters
Expvec exp_sub(const Expvec& a, const Expvec& b);
bool exp_divides(const Expvec& a, const Expvec& b);  // x^a divides x^b
bool exp_coprime(const Expvec& a, const Expvec& b);
long exp_deg(const Expvec& e);
bool exp_is_zero(const Expvec& e);

struct Term {
  FieldElement coeff;  // nonzero
  Expvec exp;
};

/// Monomial order: graded reverse lexicographic, or a block order whose
/// eliminated variables beat all others, degrevlex inside each block.
class TermOrder {
 public:
  static TermOrder degrevlex();
  static TermOrder block(std::vector<int> elim);  // 1-based, nonempty

  // three-way comparison, > 0 when x^a > x^b
  int cmp(const Expvec& a, const Expvec& b) const;
  bool less(const Expvec& a, const Expvec& b) const { return cmp(a, b) < 0; }

  bool is_degrevlex() const { return elim_.empty(); }
  const std::vector<int>& elim() const { return elim_; }
  std::string key() const;  // cache key: "drl", "elim:2,4"

 private:
  std::vector<int> elim_;  // sorted ascending; empty means plain degrevlex
};

/// Terms sorted strictly descending under the active order, coefficients
/// nonzero. The empty vector is the zero polynomial.
using Poly = std::vector<Term>;

// combines duplicate exponents, drops zeros, sorts under ord
Poly poly_make(std::vector<Term> terms, const TermOrder& ord);
Poly poly_const(const Ring& R, const FieldElement& c);
Poly poly_var(const Ring& R, int i);  // 1-based
Poly poly_monomial(const Ring& R, const FieldElement& c, Expvec e);

inline bool poly_is_zero(const Poly& f) { return f.empty(); }
const Term& poly_lt(const Poly& f);  // f nonzero

Poly poly_neg(const Poly& f);
Poly poly_add(const Poly& a, const Poly& b, const TermOrder& ord);
Poly poly_sub(const Poly& a, const Poly& b, const TermOrder& ord);
Poly poly_mul_term(const Poly& a, const Term& t);
Poly poly_mul(const Poly& a, const Poly& b, const TermOrder& ord);
Poly poly_monic(const Poly& f);
// resort an existing polynomial under a different order
Poly poly_reorder(const Poly& f, const TermOrder& ord);
bool poly_equal(const Poly& a, const Poly& b);  // termwise; same order assumed

std::string poly_str(const Ring& R, const Poly& f);

/// Full normal form of f against G: no term of the result is divisible by
/// any leading term of G. Deterministic: divisors tried in G order.
Poly normal_form(const Poly& f, const std::vector<Poly>& G, const TermOrder& ord);

/// Reduced Groebner basis: monic, pairwise tail-reduced, sorted ascending by
/// leading term. Canonical for (ideal, order). The unit ideal returns {1},
/// the zero ideal an empty list.
std::vector<Poly> groebner_basis(const Ring& R, std::vector<Poly> gens, const TermOrder& ord);

}  // namespace binomdec

#endif
