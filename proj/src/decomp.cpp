#include "binomdec/decomp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "binomdec/errors.hpp"

namespace binomdec {

namespace {

// sorted deduplicated copy, checked against the certificate of I
std::vector<int> checked_delta(const BinomialIdeal& I, const std::vector<int>& delta) {
  std::vector<int> d = delta;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  std::optional<CellularCertificate> cert = is_cellular(I);
  if (!cert || cert->delta != d) throw NotCellular();
  return d;
}

std::vector<int> complement_vars(const std::vector<int>& d, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(d.begin(), d.end(), i)) out.push_back(i);
  }
  return out;
}

// character tau with J meet kk[delta] = I(tau); assumes the elimination is a
// lattice ideal, so a monomial in it means the engine went wrong upstream
PartialCharacter character_of_elimination(const BinomialIdeal& J, const std::vector<int>& d) {
  const Ring& R = J.ring();
  std::vector<std::vector<mpz_class>> cols;
  std::vector<FieldElement> vals;
  BinomialIdeal E = eliminate(J, d);
  for (const Poly& f : E.groebner()) {
    if (f.size() != 2) throw InconsistentCharacter();
    std::vector<mpz_class> col;
    col.reserve(d.size());
    for (int i : d) col.emplace_back(f[0].exp[i - 1] - f[1].exp[i - 1]);
    cols.push_back(std::move(col));
    vals.push_back(-f[1].coeff);
  }
  if (cols.empty()) return trivial_character(Lattice::zero(d), R.field());
  return character_from_generators(d, IntMatrix::from_columns(static_cast<int>(d.size()), cols),
                                   vals, R.field());
}

bool seen_character(const std::vector<PartialCharacter>& pool, const PartialCharacter& c) {
  for (const PartialCharacter& s : pool) {
    if (s == c) return true;
  }
  return false;
}

// embedded witness monomials, divisibility-minimalized, sorted ascending
BinomialIdeal memb_of(const Ring& R, const std::vector<WitnessRecord>& recs) {
  std::vector<Expvec> ms;
  for (const WitnessRecord& w : recs) {
    if (w.embedded) ms.push_back(w.monomial);
  }
  TermOrder ord = TermOrder::degrevlex();
  std::sort(ms.begin(), ms.end(), [&](const Expvec& a, const Expvec& b) { return ord.less(a, b); });
  std::vector<Expvec> kept;
  for (const Expvec& m : ms) {
    bool redundant = false;
    for (const Expvec& k : kept) {
      if (exp_divides(k, m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(m);
  }
  if (kept.empty()) return BinomialIdeal::zero(R);
  std::vector<Poly> gens;
  for (const Expvec& m : kept) gens.push_back(poly_monomial(R, R.field().one(), m));
  return BinomialIdeal(R, gens);
}

BinomialIdeal add_unless_zero(const BinomialIdeal& I, const BinomialIdeal& J) {
  return J.is_zero() ? I : sum(I, J);
}

BinomialIdeal off_delta_variables(const Ring& R, const std::vector<int>& dc) {
  std::vector<Poly> gens;
  for (int i : dc) gens.push_back(poly_var(R, i));
  return gens.empty() ? BinomialIdeal::zero(R) : BinomialIdeal(R, gens);
}

Expvec unit_monomial(const Ring& R) { return Expvec(static_cast<size_t>(R.nvars()), 0); }

std::vector<Component> minimal_primary_inner(const BinomialIdeal& I, const std::vector<int>& d,
                                             bool use_alternate) {
  const Ring& R = I.ring();
  PartialCharacter rho = character_of_elimination(I, d);
  std::vector<SaturationPair> pairs = saturations(rho);
  BinomialIdeal M = memb(I, d);
  std::vector<int> dc = complement_vars(d, R.nvars());
  BinomialIdeal maximal_part = off_delta_variables(R, dc);
  std::vector<Component> out;
  for (size_t l = 0; l < pairs.size(); ++l) {
    BinomialIdeal S = saturate_variables(sum(I, lattice_ideal(pairs[l].rho_l, R)), d);
    BinomialIdeal Q = add_unless_zero(S, M);
    if (use_alternate) {
      BinomialIdeal alt = add_unless_zero(S, memb(S, d));
      if (!equal(alt, Q)) throw std::logic_error("primary component variants disagree");
    }
    BinomialIdeal P = add_unless_zero(lattice_ideal(pairs[l].chi_l, R), maximal_part);
    out.push_back(
        {Q, {unit_monomial(R), static_cast<int>(l), ComponentKind::Primary}, std::move(P)});
  }
  return out;
}

// drop components containing the intersection of the rest; the backward scan
// removes the later of two equal ones first
void prune_components(std::vector<Component>& comps) {
  bool removed = true;
  while (removed && comps.size() > 1) {
    removed = false;
    for (int i = static_cast<int>(comps.size()) - 1; i >= 0; --i) {
      std::vector<BinomialIdeal> others;
      for (int j = 0; j < static_cast<int>(comps.size()); ++j) {
        if (j != i) others.push_back(comps[j].ideal);
      }
      if (contains(comps[i].ideal, intersect_all(others))) {
        comps.erase(comps.begin() + i);
        removed = true;
        break;
      }
    }
  }
}

std::vector<Component> primary_cellular_inner(const BinomialIdeal& I, const std::vector<int>& d,
                                              bool prune) {
  std::vector<Component> out;
  for (const Component& U : unmixed_decomposition(I, d)) {
    for (Component q : minimal_primary_inner(U.ideal, d, false)) {
      q.provenance.witness = U.provenance.witness;
      out.push_back(std::move(q));
    }
  }
  if (prune) prune_components(out);
  return out;
}

// retries body over successively larger coefficient fields until the roots
// of unity it needs exist; the lcm degrees compose, so a handful of rounds
// must suffice
template <class F>
auto with_extensions(BinomialIdeal I, bool allow_extension, F body) {
  for (int round = 0;; ++round) {
    try {
      return body(I);
    } catch (const MissingRoots& e) {
      if (!allow_extension) throw;
      if (round >= 8) throw std::logic_error("field extension failed to stabilize");
      I = embed_ideal(I, extend_field(I.ring().field(), e.needed_degree).embed);
    }
  }
}

}  // namespace

PartialCharacter cellular_character(const BinomialIdeal& I, const std::vector<int>& delta) {
  return character_of_elimination(I, checked_delta(I, delta));
}

std::vector<WitnessRecord> witnesses(const BinomialIdeal& I, const std::vector<int>& delta) {
  std::vector<int> d = checked_delta(I, delta);
  std::vector<int> dc = complement_vars(d, I.ring().nvars());
  PartialCharacter rho = character_of_elimination(I, d);
  int base_rank = rho.lattice.rank();
  std::vector<WitnessRecord> out;
  for (Expvec& m : monomials_outside(I, dc)) {
    PartialCharacter tau =
        exp_is_zero(m) ? rho : character_of_elimination(quotient_monomial(I, m), d);
    bool embedded = tau.lattice.rank() > base_rank;
    out.push_back({std::move(m), std::move(tau), embedded});
  }
  return out;
}

BinomialIdeal memb(const BinomialIdeal& I, const std::vector<int>& delta) {
  return memb_of(I.ring(), witnesses(I, delta));
}

BinomialIdeal hull(const BinomialIdeal& I, const std::vector<int>& delta) {
  std::vector<int> d = checked_delta(I, delta);
  BinomialIdeal H = add_unless_zero(I, memb(I, d));
  std::optional<CellularCertificate> cert = is_cellular(H);
  if (!cert || cert->delta != d) throw std::logic_error("hull left the cellular class");
  if (!memb(H, d).is_zero()) throw std::logic_error("hull kept an embedded witness");
  if (!equal(eliminate(H, d), eliminate(I, d)))
    throw std::logic_error("hull moved the ideal in the cellular variables");
  return H;
}

std::vector<Component> unmixed_decomposition(const BinomialIdeal& I,
                                             const std::vector<int>& delta) {
  std::vector<int> d = checked_delta(I, delta);
  const Ring& R = I.ring();
  std::vector<WitnessRecord> recs = witnesses(I, d);
  std::vector<PartialCharacter> seen;
  std::vector<Component> out;
  for (const WitnessRecord& w : recs) {
    if (!w.embedded && !exp_is_zero(w.monomial)) continue;
    if (seen_character(seen, w.tau)) continue;
    seen.push_back(w.tau);
    BinomialIdeal K = saturate_variables(sum(I, lattice_ideal(w.tau, R)), d);
    BinomialIdeal C = add_unless_zero(K, memb(K, d));
    out.push_back({std::move(C), {w.monomial, -1, ComponentKind::Unmixed}, std::nullopt});
  }
  return out;
}

std::vector<Component> minimal_primary_components(const BinomialIdeal& I,
                                                  const std::vector<int>& delta,
                                                  bool allow_extension, bool use_alternate) {
  std::vector<int> d = checked_delta(I, delta);
  return with_extensions(I, allow_extension, [&](const BinomialIdeal& J) {
    return minimal_primary_inner(J, d, use_alternate);
  });
}

std::vector<Component> primary_decomposition_cellular(const BinomialIdeal& I,
                                                      const std::vector<int>& delta,
                                                      bool allow_extension, bool prune) {
  std::vector<int> d = checked_delta(I, delta);
  return with_extensions(I, allow_extension, [&](const BinomialIdeal& J) {
    return primary_cellular_inner(J, d, prune);
  });
}

std::vector<Component> primary_decomposition(const BinomialIdeal& I, bool allow_extension,
                                             bool prune) {
  return with_extensions(I, allow_extension, [&](const BinomialIdeal& J) {
    std::vector<Component> out;
    for (const CellularComponent& c : cellular_decomposition(J)) {
      for (Component q : primary_cellular_inner(c.ideal, c.certificate.delta, false))
        out.push_back(std::move(q));
    }
    if (prune) prune_components(out);
    return out;
  });
}

std::vector<BinomialIdeal> associated_primes(const BinomialIdeal& I,
                                             const std::vector<int>& delta,
                                             bool allow_extension) {
  std::vector<int> d = checked_delta(I, delta);
  return with_extensions(I, allow_extension, [&](const BinomialIdeal& J) {
    const Ring& R = J.ring();
    BinomialIdeal maximal_part = off_delta_variables(R, complement_vars(d, R.nvars()));
    std::vector<PartialCharacter> chis;
    for (const WitnessRecord& w : witnesses(J, d)) {
      for (const SaturationPair& pr : saturations(w.tau)) {
        if (!seen_character(chis, pr.chi_l)) chis.push_back(pr.chi_l);
      }
    }
    std::vector<BinomialIdeal> out;
    for (const PartialCharacter& chi : chis)
      out.push_back(add_unless_zero(lattice_ideal(chi, R), maximal_part));
    return out;
  });
}

bool is_primary(const BinomialIdeal& I) {
  std::optional<CellularCertificate> cert = is_cellular(I);
  if (!cert) return false;
  if (!memb(I, cert->delta).is_zero()) return false;
  PartialCharacter rho = character_of_elimination(I, cert->delta);
  return sat_prime_p(rho.lattice, I.ring().field().p()) == rho.lattice;
}

std::vector<Component> unmixed_decomposition_stepwise(const BinomialIdeal& I,
                                                      const std::vector<int>& delta) {
  std::vector<int> d = checked_delta(I, delta);
  const Ring& R = I.ring();
  std::vector<WitnessRecord> recs = witnesses(I, d);
  BinomialIdeal M = memb_of(R, recs);
  std::vector<Component> out;
  out.push_back(
      {add_unless_zero(I, M), {unit_monomial(R), -1, ComponentKind::Hull}, std::nullopt});
  if (M.is_zero()) return out;

  // distinct embedded lattice ideals with the first witness producing each;
  // Frobenius-related characters can cut out the same ideal, so deduplicate
  // on the ideal itself
  std::vector<std::pair<const WitnessRecord*, BinomialIdeal>> ideals;
  std::vector<PartialCharacter> seen;
  for (const WitnessRecord& w : recs) {
    if (!w.embedded || seen_character(seen, w.tau)) continue;
    seen.push_back(w.tau);
    BinomialIdeal L = lattice_ideal(w.tau, R);
    bool dup = false;
    for (const auto& known : ideals) {
      if (equal(known.second, L)) {
        dup = true;
        break;
      }
    }
    if (!dup) ideals.emplace_back(&w, std::move(L));
  }
  for (size_t i = 0; i < ideals.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < ideals.size(); ++j) {
      if (j != i && contains(ideals[i].second, ideals[j].second)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    BinomialIdeal K = saturate_variables(sum(I, ideals[i].second), d);
    out.push_back({std::move(K),
                   {ideals[i].first->monomial, -1, ComponentKind::Unmixed},
                   std::nullopt});
  }
  return out;
}

BinomialIdeal embed_ideal(const BinomialIdeal& I, const FieldEmbedding& phi) {
  const Ring& R = I.ring();
  if (R.field() != phi.from) throw FieldMismatch();
  Ring R2(phi.to, R.vars());
  std::vector<Poly> gens;
  for (const Poly& f : I.generator_polys()) {
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const Term& t : f) ts.push_back({phi(t.coeff), t.exp});
    gens.push_back(poly_make(std::move(ts), TermOrder::degrevlex()));
  }
  return BinomialIdeal(std::move(R2), gens);
}

}  // namespace binomdec
