#ifndef BINOMDEC_BIDEAL_HPP
#define BINOMDEC_BIDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "binomdec/poly.hpp"

namespace binomdec {

/// Monic polynomial with at most two terms. The lead term is the larger one
/// under degrevlex and carries coefficient 1.
struct Binomial {
  Term lead;
  std::optional<Term> trail;
};

Poly binomial_poly(const Binomial& b);
// reduces a polynomial with at most two terms; throws NonBinomialGenerator
// on more terms, returns nullopt for zero
std::optional<Binomial> binomial_from_poly(const Poly& f);

namespace detail {
// one reduced basis per term order, shared across copies of an ideal
struct GbCache {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const std::vector<Poly>>> by_order;
};
std::shared_ptr<const std::vector<Poly>> cached_groebner(const Ring& R,
                                                         const std::vector<Poly>& gens,
                                                         const TermOrder& ord, GbCache& cache);
}  // namespace detail

/// Ideal generated by binomials and monomials. Immutable; the reduced
/// Groebner basis per term order is computed once and shared.
class BinomialIdeal {
 public:
  BinomialIdeal(Ring R, const std::vector<Poly>& gens);
  static BinomialIdeal zero(const Ring& R);
  static BinomialIdeal unit(const Ring& R);

  const Ring& ring() const { return ring_; }
  const std::vector<Binomial>& generators() const { return gens_; }
  std::vector<Poly> generator_polys() const;

  // reduced basis; every element has at most two terms
  const std::vector<Poly>& groebner(const TermOrder& ord = TermOrder::degrevlex()) const;

  bool is_zero() const;
  bool is_unit() const;  // 1 lies in the ideal
  bool is_proper() const { return !is_unit(); }

  std::string str() const;

 private:
  Ring ring_;
  std::vector<Binomial> gens_;
  std::shared_ptr<detail::GbCache> cache_;
};

/// Ideal with arbitrary polynomial generators; carrier for intersections,
/// which need not be binomial. Used by verification paths.
class PolyIdeal {
 public:
  PolyIdeal(Ring R, std::vector<Poly> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Poly>& groebner(const TermOrder& ord = TermOrder::degrevlex()) const;

 private:
  Ring ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<detail::GbCache> cache_;
};

Poly normal_form(const Poly& f, const BinomialIdeal& I, const TermOrder& ord = TermOrder::degrevlex());
bool member(const BinomialIdeal& I, const Poly& f);
bool member(const PolyIdeal& I, const Poly& f);

BinomialIdeal sum(const BinomialIdeal& I, const BinomialIdeal& J);
bool equal(const BinomialIdeal& I, const BinomialIdeal& J);
bool contains(const BinomialIdeal& I, const BinomialIdeal& J);  // I contains J
bool contains(const BinomialIdeal& I, const PolyIdeal& J);
bool equal(const PolyIdeal& I, const BinomialIdeal& J);
bool equal(const PolyIdeal& I, const PolyIdeal& J);

/// (I : x^m). Stays binomial: the computation runs through I meet <x^m>,
/// whose auxiliary generators are again binomial.
BinomialIdeal quotient_monomial(const BinomialIdeal& I, const Expvec& m);

/// (I : (x^m)^infinity) by iterating quotients until they stabilize.
BinomialIdeal saturate_monomial(const BinomialIdeal& I, const Expvec& m);

/// Saturation by the product of the variables indexed by S (1-based).
BinomialIdeal saturate_variables(const BinomialIdeal& I, const std::vector<int>& S);

/// Intersection with the subring generated by the variables in delta, via a
/// block order eliminating the others. The ambient ring is kept; generators
/// only involve delta variables.
BinomialIdeal eliminate(const BinomialIdeal& I, const std::vector<int>& delta);

/// I meet J through one auxiliary variable; the result can be non-binomial.
PolyIdeal intersect(const BinomialIdeal& I, const BinomialIdeal& J);
PolyIdeal intersect_all(const std::vector<BinomialIdeal>& parts);

/// Generated by t1^q - t2^q over the reduced degrevlex basis elements
/// t1 - t2 of I; q must be a power of the characteristic.
BinomialIdeal quasipower(const BinomialIdeal& I, long q);

/// All monomials in the variables indexed by S lying outside I; finite
/// because each such variable must be nilpotent modulo I.
std::vector<Expvec> monomials_outside(const BinomialIdeal& I, const std::vector<int>& S);

/// Least e with x_i^e in I; i taken 1-based. Requires nilpotency.
int nilpotency_exponent(const BinomialIdeal& I, int i);

/// Strict deterministic order through the canonical bases; both ideals must
/// live in the same ring.
bool ideal_less(const BinomialIdeal& a, const BinomialIdeal& b);

}  // namespace binomdec

#endif
