#include "binomdec/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "binomdec/errors.hpp"

namespace binomdec {

namespace {

void require_same_size(const Expvec& a, const Expvec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("exponent vectors have different lengths");
}

}  // namespace

Expvec exp_add(const Expvec& a, const Expvec& b) {
  require_same_size(a, b);
  Expvec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Expvec exp_sub(const Expvec& a, const Expvec& b) {
  require_same_size(a, b);
  Expvec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Expvec exp_lcm(const Expvec& a, const Expvec& b) {
  require_same_size(a, b);
  Expvec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

bool exp_divides(const Expvec& a, const Expvec& b) {
  require_same_size(a, b);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool exp_coprime(const Expvec& a, const Expvec& b) {
  require_same_size(a, b);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

long exp_deg(const Expvec& e) {
  long d = 0;
  for (int x : e) d += x;
  return d;
}

bool exp_is_zero(const Expvec& e) {
  for (int x : e)
    if (x != 0) return false;
  return true;
}

TermOrder TermOrder::degrevlex() { return TermOrder{}; }

TermOrder TermOrder::block(std::vector<int> elim) {
  if (elim.empty()) throw std::invalid_argument("empty elimination block");
  std::sort(elim.begin(), elim.end());
  elim.erase(std::unique(elim.begin(), elim.end()), elim.end());
  if (elim.front() < 1) throw std::invalid_argument("variable indices are 1-based");
  TermOrder o;
  o.elim_ = std::move(elim);
  return o;
}

namespace {

int drl_cmp_full(const Expvec& a, const Expvec& b) {
  long da = 0, db = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? -1 : 1;  // smaller trailing exponent wins
  }
  return 0;
}

}  // namespace

int TermOrder::cmp(const Expvec& a, const Expvec& b) const {
  require_same_size(a, b);
  if (elim_.empty()) return drl_cmp_full(a, b);
  if (elim_.back() > static_cast<int>(a.size()))
    throw DimensionMismatch("elimination block exceeds the exponent vector");
  long da = 0, db = 0;
  for (int v : elim_) {
    da += a[v - 1];
    db += b[v - 1];
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = elim_.rbegin(); it != elim_.rend(); ++it) {
    int d = a[*it - 1] - b[*it - 1];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  // eliminated entries agree exactly; fall through to the retained block
  long ta = 0, tb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ta += a[i];
    tb += b[i];
  }
  if (ta != tb) return ta < tb ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (std::binary_search(elim_.begin(), elim_.end(), static_cast<int>(i) + 1)) continue;
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

std::string TermOrder::key() const {
  if (elim_.empty()) return "drl";
  std::string s = "elim:";
  for (size_t i = 0; i < elim_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elim_[i]);
  }
  return s;
}

Poly poly_make(std::vector<Term> terms, const TermOrder& ord) {
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& s, const Term& t) { return ord.cmp(s.exp, t.exp) > 0; });
  Poly out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = out.back().coeff + t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Poly poly_const(const Ring& R, const FieldElement& c) {
  if (c.is_zero()) return {};
  return {Term{c, Expvec(R.nvars(), 0)}};
}

Poly poly_var(const Ring& R, int i) {
  if (i < 1 || i > R.nvars()) throw DimensionMismatch("variable index out of range");
  Expvec e(R.nvars(), 0);
  e[i - 1] = 1;
  return {Term{R.field().one(), std::move(e)}};
}

Poly poly_monomial(const Ring& R, const FieldElement& c, Expvec e) {
  if (static_cast<int>(e.size()) != R.nvars())
    throw DimensionMismatch("exponent vector length differs from the ring");
  if (c.is_zero()) return {};
  return {Term{c, std::move(e)}};
}

const Term& poly_lt(const Poly& f) {
  if (f.empty()) throw std::invalid_argument("zero polynomial has no leading term");
  return f.front();
}

Poly poly_neg(const Poly& f) {
  Poly out = f;
  for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

Poly poly_add(const Poly& a, const Poly& b, const TermOrder& ord) {
  Poly out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.cmp(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      FieldElement s = a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{s, a[i].exp});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b, const TermOrder& ord) {
  return poly_add(a, poly_neg(b), ord);
}

Poly poly_mul_term(const Poly& a, const Term& t) {
  if (t.coeff.is_zero()) return {};
  Poly out;
  out.reserve(a.size());
  // monomial orders respect multiplication, so sortedness is preserved
  for (const auto& s : a) out.push_back(Term{s.coeff * t.coeff, exp_add(s.exp, t.exp)});
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, const TermOrder& ord) {
  Poly acc;
  for (const auto& t : b) acc = poly_add(acc, poly_mul_term(a, t), ord);
  return acc;
}

Poly poly_monic(const Poly& f) {
  if (f.empty()) return f;
  if (f.front().coeff.is_one()) return f;
  FieldElement c = f.front().coeff.inv();
  Poly out = f;
  for (auto& t : out) t.coeff = t.coeff * c;
  return out;
}

Poly poly_reorder(const Poly& f, const TermOrder& ord) { return poly_make(f, ord); }

bool poly_equal(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].exp != b[i].exp || a[i].coeff != b[i].coeff) return false;
  return true;
}

std::string poly_str(const Ring& R, const Poly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += " + ";
    const Term& t = f[i];
    std::string c = t.coeff.str();
    bool composite = c.find_first_of("+-*^") != std::string::npos;
    std::string mono;
    for (int v = 1; v <= R.nvars(); ++v) {
      int e = t.exp[v - 1];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += R.var(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += composite ? "(" + c + ")" : c;
    } else if (t.coeff.is_one()) {
      s += mono;
    } else {
      s += (composite ? "(" + c + ")" : c) + "*" + mono;
    }
  }
  return s;
}

Poly normal_form(const Poly& f0, const std::vector<Poly>& G, const TermOrder& ord) {
  Poly f = poly_reorder(f0, ord);
  Poly r;
  while (!f.empty()) {
    const Term& t = f.front();
    const Poly* g = nullptr;
    for (const auto& h : G) {
      if (!h.empty() && exp_divides(h.front().exp, t.exp)) {
        g = &h;
        break;
      }
    }
    if (g) {
      Term q{t.coeff / g->front().coeff, exp_sub(t.exp, g->front().exp)};
      f = poly_sub(f, poly_mul_term(*g, q), ord);
    } else {
      r.push_back(t);
      f.erase(f.begin());
    }
  }
  return r;
}

namespace {

struct SPair {
  size_t i, j;
  Expvec lcm;
  long deg;
};

// normal strategy: smallest lcm degree, then lex on the lcm, then indices
bool pair_before(const SPair& a, const SPair& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  if (a.lcm != b.lcm)
    return std::lexicographical_compare(a.lcm.begin(), a.lcm.end(), b.lcm.begin(), b.lcm.end());
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace

std::vector<Poly> groebner_basis(const Ring& R, std::vector<Poly> gens, const TermOrder& ord) {
  std::vector<Poly> G;
  for (auto& g : gens) {
    Poly h = poly_make(std::move(g), ord);
    if (!h.empty()) G.push_back(poly_monic(h));
  }
  auto unit = [&] { return std::vector<Poly>{poly_const(R, R.field().one())}; };
  for (const auto& g : G)
    if (exp_is_zero(g.front().exp)) return unit();

  std::vector<SPair> pairs;
  auto push_pairs = [&](size_t jnew) {
    for (size_t i = 0; i < jnew; ++i) {
      Expvec l = exp_lcm(G[i].front().exp, G[jnew].front().exp);
      long d = exp_deg(l);
      pairs.push_back(SPair{i, jnew, std::move(l), d});
    }
  };
  for (size_t j = 1; j < G.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (pair_before(pairs[k], pairs[best])) best = k;
    SPair pr = std::move(pairs[best]);
    pairs.erase(pairs.begin() + best);

    const Expvec& ei = G[pr.i].front().exp;
    const Expvec& ej = G[pr.j].front().exp;
    if (exp_coprime(ei, ej)) continue;
    Term ti{G[pr.j].front().coeff, exp_sub(pr.lcm, ei)};
    Term tj{G[pr.i].front().coeff, exp_sub(pr.lcm, ej)};
    Poly S = poly_sub(poly_mul_term(G[pr.i], ti), poly_mul_term(G[pr.j], tj), ord);
    Poly r = normal_form(S, G, ord);
    if (!r.empty()) {
      if (exp_is_zero(r.front().exp)) return unit();
      G.push_back(poly_monic(r));
      push_pairs(G.size() - 1);
    }
  }

  // minimal basis: drop elements whose leading term another one divides
  std::vector<Poly> M;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Expvec& a = G[j].front().exp;
      const Expvec& b = G[i].front().exp;
      if (exp_divides(a, b) && !(a == b && j > i)) redundant = true;
    }
    if (!redundant) M.push_back(G[i]);
  }

  // tail reduction; leading terms are untouched since M is minimal
  std::vector<Poly> out;
  for (size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(M.size() - 1);
    for (size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    out.push_back(poly_monic(normal_form(M[i], others, ord)));
  }
  std::sort(out.begin(), out.end(),
            [&](const Poly& f, const Poly& g) { return ord.cmp(f.front().exp, g.front().exp) < 0; });
  return out;
}

}  // namespace binomdec
