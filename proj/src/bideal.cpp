#include "binomdec/bideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "binomdec/errors.hpp"

namespace binomdec {

Poly binomial_poly(const Binomial& b) {
  Poly f{b.lead};
  if (b.trail) f.push_back(*b.trail);
  return f;
}

std::optional<Binomial> binomial_from_poly(const Poly& f0) {
  Poly f = poly_monic(poly_reorder(f0, TermOrder::degrevlex()));
  if (f.empty()) return std::nullopt;
  if (f.size() > 2)
    throw NonBinomialGenerator("generator has more than two terms");
  Binomial b{f[0], std::nullopt};
  if (f.size() == 2) b.trail = f[1];
  return b;
}

namespace detail {

std::shared_ptr<const std::vector<Poly>> cached_groebner(const Ring& R,
                                                         const std::vector<Poly>& gens,
                                                         const TermOrder& ord, GbCache& cache) {
  const std::string key = ord.key();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.by_order.find(key);
    if (it != cache.by_order.end()) return it->second;
  }
  auto gb = std::make_shared<const std::vector<Poly>>(groebner_basis(R, gens, ord));
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.by_order.emplace(key, gb);
  return it->second;  // first writer wins
}

}  // namespace detail

BinomialIdeal::BinomialIdeal(Ring R, const std::vector<Poly>& gens)
    : ring_(std::move(R)), cache_(std::make_shared<detail::GbCache>()) {
  for (const auto& g : gens) {
    if (!g.empty() && g.front().coeff.ctx() != ring_.field())
      throw RingMismatch("generator coefficients use a different field");
    if (!g.empty() && static_cast<int>(g.front().exp.size()) != ring_.nvars())
      throw RingMismatch("generator exponents do not fit the ring");
    auto b = binomial_from_poly(g);
    if (b) gens_.push_back(std::move(*b));
  }
}

BinomialIdeal BinomialIdeal::zero(const Ring& R) { return BinomialIdeal(R, {}); }

BinomialIdeal BinomialIdeal::unit(const Ring& R) {
  return BinomialIdeal(R, {poly_const(R, R.field().one())});
}

std::vector<Poly> BinomialIdeal::generator_polys() const {
  std::vector<Poly> out;
  out.reserve(gens_.size());
  for (const auto& b : gens_) out.push_back(binomial_poly(b));
  return out;
}

const std::vector<Poly>& BinomialIdeal::groebner(const TermOrder& ord) const {
  auto gb = detail::cached_groebner(ring_, generator_polys(), ord, *cache_);
  for (const auto& g : *gb)
    if (g.size() > 2)
      throw std::logic_error("reduced basis of a binomial ideal acquired a third term");
  return *gb;
}

bool BinomialIdeal::is_zero() const { return groebner().empty(); }

bool BinomialIdeal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && exp_is_zero(gb[0].front().exp);
}

std::string BinomialIdeal::str() const {
  std::string s = "<";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += poly_str(ring_, binomial_poly(gens_[i]));
  }
  if (gens_.empty()) s += "0";
  return s + ">";
}

PolyIdeal::PolyIdeal(Ring R, std::vector<Poly> gens)
    : ring_(std::move(R)), gens_(std::move(gens)), cache_(std::make_shared<detail::GbCache>()) {}

const std::vector<Poly>& PolyIdeal::groebner(const TermOrder& ord) const {
  return *detail::cached_groebner(ring_, gens_, ord, *cache_);
}

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b) throw RingMismatch();
}

}  // namespace

Poly normal_form(const Poly& f, const BinomialIdeal& I, const TermOrder& ord) {
  return normal_form(f, I.groebner(ord), ord);
}

bool member(const BinomialIdeal& I, const Poly& f) {
  return normal_form(f, I.groebner(), TermOrder::degrevlex()).empty();
}

bool member(const PolyIdeal& I, const Poly& f) {
  return normal_form(f, I.groebner(), TermOrder::degrevlex()).empty();
}

BinomialIdeal sum(const BinomialIdeal& I, const BinomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Poly> gens = I.generator_polys();
  for (auto& g : J.generator_polys()) gens.push_back(std::move(g));
  return BinomialIdeal(I.ring(), gens);
}

namespace {

bool gb_equal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!poly_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool equal(const BinomialIdeal& I, const BinomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  return gb_equal(I.groebner(), J.groebner());
}

bool contains(const BinomialIdeal& I, const BinomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  for (const auto& g : J.generator_polys())
    if (!member(I, g)) return false;
  return true;
}

bool contains(const BinomialIdeal& I, const PolyIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  for (const auto& g : J.groebner())
    if (!member(I, g)) return false;
  return true;
}

bool equal(const PolyIdeal& I, const BinomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  return gb_equal(I.groebner(), J.groebner());
}

bool equal(const PolyIdeal& I, const PolyIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  return gb_equal(I.groebner(), J.groebner());
}

namespace {

// ring extended by one auxiliary variable, appended last
Ring extend_ring(const Ring& R) {
  std::vector<std::string> names = R.vars();
  std::string t = "t";
  for (int suffix = 0; R.var_index(t) != 0; ++suffix) t = "t" + std::to_string(suffix);
  names.push_back(t);
  return Ring(R.field(), names);
}

Poly lift_poly(const Poly& f) {
  Poly out = f;
  for (auto& t : out) t.exp.push_back(0);
  return out;
}

// drops the auxiliary entry; caller guarantees it is zero
Poly restrict_poly(const Poly& f) {
  Poly out = f;
  for (auto& t : out) t.exp.pop_back();
  return out;
}

// generators of t*I + (1-t)*J inside the extended ring
std::vector<Poly> graph_generators(const Ring& E, const std::vector<Poly>& I,
                                   const std::vector<Poly>& J) {
  const int n = E.nvars();
  Poly t = poly_var(E, n);
  Poly one_minus_t = poly_sub(poly_const(E, E.field().one()), t, TermOrder::degrevlex());
  std::vector<Poly> gens;
  for (const auto& g : I)
    gens.push_back(poly_mul(lift_poly(g), t, TermOrder::degrevlex()));
  for (const auto& h : J)
    gens.push_back(poly_mul(lift_poly(h), one_minus_t, TermOrder::degrevlex()));
  return gens;
}

// elements of the reduced elimination basis free of the auxiliary variable
std::vector<Poly> intersect_polys(const Ring& R, const std::vector<Poly>& I,
                                  const std::vector<Poly>& J) {
  Ring E = extend_ring(R);
  auto gens = graph_generators(E, I, J);
  auto gb = groebner_basis(E, gens, TermOrder::block({E.nvars()}));
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (const auto& t : g)
      if (t.exp.back() != 0) {
        free = false;
        break;
      }
    if (free) kept.push_back(restrict_poly(g));
  }
  return kept;
}

}  // namespace

PolyIdeal intersect(const BinomialIdeal& I, const BinomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  return PolyIdeal(I.ring(), intersect_polys(I.ring(), I.generator_polys(), J.generator_polys()));
}

PolyIdeal intersect_all(const std::vector<BinomialIdeal>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty intersection");
  std::vector<Poly> acc = parts[0].generator_polys();
  for (size_t i = 1; i < parts.size(); ++i) {
    require_same_ring(parts[0].ring(), parts[i].ring());
    acc = intersect_polys(parts[0].ring(), acc, parts[i].generator_polys());
  }
  return PolyIdeal(parts[0].ring(), std::move(acc));
}

BinomialIdeal quotient_monomial(const BinomialIdeal& I, const Expvec& m) {
  const Ring& R = I.ring();
  if (static_cast<int>(m.size()) != R.nvars())
    throw DimensionMismatch("monomial exponent length differs from the ring");
  for (int e : m)
    if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  if (exp_is_zero(m)) return I;
  // I meet <x^m> = x^m * (I : x^m); both factors binomial, so the auxiliary
  // computation never leaves the binomial world
  std::vector<Poly> mono{poly_monomial(R, R.field().one(), m)};
  auto meet = intersect_polys(R, I.generator_polys(), mono);
  std::vector<Poly> quotient;
  for (const auto& g : meet) {
    Poly q = g;
    for (auto& t : q) t.exp = exp_sub(t.exp, m);  // every term divisible by x^m
    quotient.push_back(std::move(q));
  }
  return BinomialIdeal(R, quotient);
}

BinomialIdeal saturate_monomial(const BinomialIdeal& I, const Expvec& m) {
  BinomialIdeal cur = I;
  for (;;) {
    BinomialIdeal next = quotient_monomial(cur, m);
    if (equal(next, cur)) return cur;
    cur = next;
  }
}

BinomialIdeal saturate_variables(const BinomialIdeal& I, const std::vector<int>& S) {
  if (S.empty()) return I;
  Expvec m(I.ring().nvars(), 0);
  for (int i : S) {
    if (i < 1 || i > I.ring().nvars()) throw DimensionMismatch("variable index out of range");
    m[i - 1] = 1;
  }
  return saturate_monomial(I, m);
}

BinomialIdeal eliminate(const BinomialIdeal& I, const std::vector<int>& delta) {
  const Ring& R = I.ring();
  std::vector<bool> keep(R.nvars() + 1, false);
  for (int i : delta) {
    if (i < 1 || i > R.nvars()) throw DimensionMismatch("variable index out of range");
    keep[i] = true;
  }
  std::vector<int> elim;
  for (int i = 1; i <= R.nvars(); ++i)
    if (!keep[i]) elim.push_back(i);
  if (elim.empty()) return I;
  const auto& gb = I.groebner(TermOrder::block(elim));
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (const auto& t : g)
      for (int i : elim)
        if (t.exp[i - 1] != 0) {
          free = false;
          break;
        }
    if (free) kept.push_back(g);
  }
  return BinomialIdeal(R, kept);
}

BinomialIdeal quasipower(const BinomialIdeal& I, long q) {
  const long p = I.ring().field().p();
  if (q < 1) throw NotAFrobeniusPower("exponent must be a positive power of the characteristic");
  long r = q;
  while (r > 1) {
    if (r % p != 0) throw NotAFrobeniusPower(std::to_string(q) + " is not a power of " +
                                             std::to_string(p));
    r /= p;
  }
  std::vector<Poly> gens;
  for (const auto& g : I.groebner()) {
    Poly h;
    for (const auto& t : g) {
      Expvec e(t.exp.size());
      for (size_t i = 0; i < e.size(); ++i) {
        long v = static_cast<long>(t.exp[i]) * q;
        if (v > 1000000) throw std::overflow_error("quasipower exponent too large");
        e[i] = static_cast<int>(v);
      }
      h.push_back(Term{t.coeff.pow(q), std::move(e)});
    }
    gens.push_back(std::move(h));
  }
  return BinomialIdeal(I.ring(), gens);
}

int nilpotency_exponent(const BinomialIdeal& I, int i) {
  const Ring& R = I.ring();
  if (i < 1 || i > R.nvars()) throw DimensionMismatch("variable index out of range");
  Expvec xi(R.nvars(), 0);
  xi[i - 1] = 1;
  if (!saturate_monomial(I, xi).is_unit())
    throw NotNilpotent(R.var(i) + " is not nilpotent modulo the ideal");
  for (int e = 1;; ++e) {
    Expvec m(R.nvars(), 0);
    m[i - 1] = e;
    if (member(I, poly_monomial(R, R.field().one(), m))) return e;
  }
}

std::vector<Expvec> monomials_outside(const BinomialIdeal& I, const std::vector<int>& S) {
  const Ring& R = I.ring();
  std::vector<int> vars = S;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<int> bound;
  for (int i : vars) bound.push_back(nilpotency_exponent(I, i));

  // odometer over the box of candidate exponents, lowest index fastest
  std::vector<Expvec> out;
  Expvec digits(vars.size(), 0);
  for (;;) {
    Expvec m(R.nvars(), 0);
    for (size_t j = 0; j < vars.size(); ++j) m[vars[j] - 1] = digits[j];
    if (!member(I, poly_monomial(R, R.field().one(), m))) out.push_back(std::move(m));
    size_t j = 0;
    while (j < digits.size() && digits[j] + 1 >= bound[j]) digits[j++] = 0;
    if (j == digits.size()) break;
    ++digits[j];
  }
  return out;
}

bool ideal_less(const BinomialIdeal& a, const BinomialIdeal& b) {
  const std::vector<Poly>& ga = a.groebner();
  const std::vector<Poly>& gb = b.groebner();
  TermOrder ord = TermOrder::degrevlex();
  for (size_t i = 0; i < ga.size() && i < gb.size(); ++i) {
    const Poly& fa = ga[i];
    const Poly& fb = gb[i];
    for (size_t t = 0; t < fa.size() && t < fb.size(); ++t) {
      int c = ord.cmp(fa[t].exp, fb[t].exp);
      if (c != 0) return c < 0;
      if (fa[t].coeff != fb[t].coeff) return fa[t].coeff < fb[t].coeff;
    }
    if (fa.size() != fb.size()) return fa.size() < fb.size();
  }
  return ga.size() < gb.size();
}

}  // namespace binomdec
