#include "binomdec/character.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "binomdec/errors.hpp"

namespace binomdec {

namespace {

// Exact integer solution z of m z = s. Every caller has already placed s in
// the column span, so failure means the engine lost track of a lattice.
std::vector<mpz_class> solve_in_columns(const IntMatrix& m, const SnfFull& f,
                                        const std::vector<mpz_class>& s) {
  const int rows = m.rows(), cols = m.cols();
  IntMatrix sc = IntMatrix::from_columns(rows, std::vector<std::vector<mpz_class>>{s});
  IntMatrix u = f.u * sc;
  IntMatrix w(cols, 1);
  const int diag = rows < cols ? rows : cols;
  for (int t = 0; t < diag; ++t) {
    const mpz_class& dt = f.d.at(t, t);
    if (dt == 0) continue;
    if (!mpz_divisible_p(u.at(t, 0).get_mpz_t(), dt.get_mpz_t())) throw InconsistentCharacter();
    w.at(t, 0) = u.at(t, 0) / dt;
  }
  IntMatrix z = f.v * w;
  if (m * z != sc) throw InconsistentCharacter();
  std::vector<mpz_class> out(cols);
  for (int t = 0; t < cols; ++t) out[t] = z.at(t, 0);
  return out;
}

mpz_class prime_to_p_part(mpz_class d, long p) {
  if (p > 1) {
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) d /= p;
  }
  return d;
}

int exponent_entry(const mpz_class& e) {
  if (!e.fits_sint_p()) throw std::overflow_error("lattice exponent too large for a monomial");
  return static_cast<int>(e.get_si());
}

}  // namespace

PartialCharacter trivial_character(const Lattice& l, const FieldCtx& field) {
  return {l, std::vector<FieldElement>(l.rank(), field.one()), field};
}

PartialCharacter character_from_generators(std::vector<int> ambient, const IntMatrix& generators,
                                           const std::vector<FieldElement>& values,
                                           const FieldCtx& field) {
  if (static_cast<int>(values.size()) != generators.cols())
    throw DimensionMismatch("one character value per generator column required");
  for (const FieldElement& v : values) {
    if (v.ctx() != field) throw FieldMismatch();
    if (v.is_zero()) throw ZeroArgument("character values must be nonzero");
  }
  PartialCharacter rho{Lattice(std::move(ambient), generators), {}, field};
  if (rho.lattice.rank() > 0) {
    SnfFull f = snf_full(generators);
    for (int j = 0; j < rho.lattice.rank(); ++j) {
      std::vector<mpz_class> z = solve_in_columns(generators, f, rho.lattice.basis().column(j));
      FieldElement val = field.one();
      for (int t = 0; t < generators.cols(); ++t) val = val * values[t].pow(z[t]);
      rho.values.push_back(val);
    }
  }
  // the prescribed values define a homomorphism iff they survive the round trip
  for (int t = 0; t < generators.cols(); ++t) {
    if (evaluate(rho, generators.column(t)) != values[t]) throw InconsistentCharacter();
  }
  return rho;
}

bool operator==(const PartialCharacter& a, const PartialCharacter& b) {
  return a.field == b.field && a.lattice == b.lattice && a.values == b.values;
}

FieldElement evaluate(const PartialCharacter& rho, const std::vector<mpz_class>& v) {
  if (static_cast<int>(v.size()) != rho.lattice.dim())
    throw DimensionMismatch("vector length does not match the lattice ambient");
  std::optional<std::vector<mpz_class>> coords = rho.lattice.coordinates(v);
  if (!coords) throw NotInLattice();
  FieldElement acc = rho.field.one();
  for (size_t i = 0; i < coords->size(); ++i) acc = acc * rho.values[i].pow((*coords)[i]);
  return acc;
}

PartialCharacter embed_character(const PartialCharacter& rho, const FieldEmbedding& phi) {
  if (phi.from != rho.field) throw FieldMismatch();
  PartialCharacter out{rho.lattice, {}, phi.to};
  out.values.reserve(rho.values.size());
  for (const FieldElement& v : rho.values) out.values.push_back(phi(v));
  return out;
}

BinomialIdeal lattice_ideal(const PartialCharacter& rho, const Ring& r) {
  if (r.field() != rho.field) throw FieldMismatch();
  const Lattice& l = rho.lattice;
  for (int label : l.ambient()) {
    if (label < 1 || label > r.nvars())
      throw DimensionMismatch("lattice ambient label outside the ring");
  }
  if (l.rank() == 0) return BinomialIdeal::zero(r);
  std::vector<Poly> gens;
  for (int j = 0; j < l.rank(); ++j) {
    Expvec plus(r.nvars(), 0), minus(r.nvars(), 0);
    for (int t = 0; t < l.dim(); ++t) {
      int e = exponent_entry(l.basis().at(t, j));
      if (e > 0) plus[l.ambient()[t] - 1] = e;
      if (e < 0) minus[l.ambient()[t] - 1] = -e;
    }
    gens.push_back(poly_make({Term{rho.field.one(), plus}, Term{-rho.values[j], minus}},
                             TermOrder::degrevlex()));
  }
  return saturate_variables(BinomialIdeal(r, gens), l.ambient());
}

std::vector<PartialCharacter> extensions(const PartialCharacter& rho, const Lattice& l_sup,
                                         bool allow_extension) {
  QuotientStructure q = quotient(rho.lattice, l_sup);
  if (q.factors.empty()) return {rho};
  const long p = rho.field.p();
  const int r = static_cast<int>(q.factors.size());
  std::vector<mpz_class> primeparts(r);
  for (int i = 0; i < r; ++i) primeparts[i] = prime_to_p_part(q.factors[i], p);

  // root choices per invariant factor, enlarging the field once if allowed
  PartialCharacter cur = rho;
  std::vector<std::vector<FieldElement>> roots(r);
  for (bool extended = false;; extended = true) {
    long degree = 1;
    for (int i = 0; i < r; ++i) {
      std::vector<mpz_class> dw = q.lifts.column(i);
      for (mpz_class& e : dw) e *= q.factors[i];
      FieldElement c = evaluate(cur, dw);
      roots[i] = nth_roots(c, q.factors[i]);
      if (static_cast<mpz_class>(roots[i].size()) < primeparts[i])
        degree = std::lcm(degree, splitting_degree(cur.field, q.factors[i], c));
    }
    if (degree == 1) break;
    if (extended) throw std::logic_error("root extension failed to split");
    if (!allow_extension) throw MissingRoots(degree);
    cur = embed_character(cur, extend_field(cur.field, degree).embed);
  }

  // write each basis vector of l_sup over [lifts | basis of L] once
  std::vector<std::vector<mpz_class>> cols;
  for (int i = 0; i < r; ++i) cols.push_back(q.lifts.column(i));
  for (int j = 0; j < cur.lattice.rank(); ++j) cols.push_back(cur.lattice.basis().column(j));
  IntMatrix m = IntMatrix::from_columns(cur.lattice.dim(), cols);
  SnfFull f = snf_full(m);
  std::vector<std::vector<mpz_class>> coord;
  coord.reserve(l_sup.rank());
  for (int j = 0; j < l_sup.rank(); ++j)
    coord.push_back(solve_in_columns(m, f, l_sup.basis().column(j)));

  std::vector<PartialCharacter> out;
  std::vector<size_t> idx(r, 0);
  for (;;) {
    PartialCharacter sigma{l_sup, {}, cur.field};
    sigma.values.reserve(l_sup.rank());
    for (int j = 0; j < l_sup.rank(); ++j) {
      FieldElement val = cur.field.one();
      for (int i = 0; i < r; ++i) val = val * roots[i][idx[i]].pow(coord[j][i]);
      for (int t = 0; t < cur.lattice.rank(); ++t)
        val = val * cur.values[t].pow(coord[j][r + t]);
      sigma.values.push_back(val);
    }
    out.push_back(std::move(sigma));
    int pos = r - 1;
    while (pos >= 0) {
      if (++idx[pos] < roots[pos].size()) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<SaturationPair> saturations(const PartialCharacter& rho) {
  Lattice sp = sat_prime_p(rho.lattice, rho.field.p());
  Lattice sat = saturate(rho.lattice);
  std::vector<SaturationPair> out;
  for (PartialCharacter& rl : extensions(rho, sp, false)) {
    std::vector<PartialCharacter> chi = extensions(rl, sat, false);
    if (chi.size() != 1) throw std::logic_error("p-power root extension must be unique");
    out.push_back({std::move(rl), std::move(chi.front())});
  }
  return out;
}

}  // namespace binomdec
