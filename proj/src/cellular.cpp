#include "binomdec/cellular.hpp"

#include <algorithm>
#include <stdexcept>

#include "binomdec/errors.hpp"

namespace binomdec {

namespace {

Expvec var_power(const Ring& r, int i, int e) {
  Expvec m(r.nvars(), 0);
  m[i - 1] = e;
  return m;
}

// -1 when every variable is a nonzerodivisor or nilpotent
int first_offender(const BinomialIdeal& I) {
  for (int i = 1; i <= I.ring().nvars(); ++i) {
    Expvec xi = var_power(I.ring(), i, 1);
    if (equal(quotient_monomial(I, xi), I)) continue;
    if (saturate_monomial(I, xi).is_unit()) continue;
    return i;
  }
  return -1;
}

// least e with (I : x_i^e) = (I : x_i^(e+1)); the chain is monotone, so
// doubling followed by binary search lands on the first stable exponent
int stabilization_exponent(const BinomialIdeal& I, int i) {
  auto stable = [&](int e) {
    return equal(quotient_monomial(I, var_power(I.ring(), i, e)),
                 quotient_monomial(I, var_power(I.ring(), i, e + 1)));
  };
  int hi = 1;
  while (!stable(hi)) hi *= 2;
  int lo = hi == 1 ? 1 : hi / 2 + 1;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (stable(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

void split(const BinomialIdeal& I, std::vector<CellularComponent>& out) {
  int i = first_offender(I);
  if (i < 0) {
    std::optional<CellularCertificate> cert = is_cellular(I);
    out.push_back({I, *cert});
    return;
  }
  int e = stabilization_exponent(I, i);
  BinomialIdeal sat = quotient_monomial(I, var_power(I.ring(), i, e));
  BinomialIdeal plus =
      sum(I, BinomialIdeal(I.ring(), {poly_monomial(I.ring(), I.ring().field().one(),
                                                    var_power(I.ring(), i, e))}));
  if (!equal(intersect(sat, plus), I)) throw std::logic_error("cellular split lost the ideal");
  split(sat, out);
  split(plus, out);
}

}  // namespace

std::optional<CellularCertificate> is_cellular(const BinomialIdeal& I) {
  if (I.is_unit()) throw UnitIdeal();
  CellularCertificate cert;
  for (int i = 1; i <= I.ring().nvars(); ++i) {
    Expvec xi = var_power(I.ring(), i, 1);
    if (equal(quotient_monomial(I, xi), I)) {
      cert.delta.push_back(i);
      continue;
    }
    if (!saturate_monomial(I, xi).is_unit()) return std::nullopt;
    cert.exponents[i] = static_cast<int>(nilpotency_exponent(I, i));
  }
  return cert;
}

std::vector<CellularComponent> cellular_decomposition(const BinomialIdeal& I, bool prune) {
  if (I.is_unit()) throw UnitIdeal();
  std::vector<CellularComponent> out;
  split(I, out);
  if (prune) {
    bool removed = true;
    while (removed && out.size() > 1) {
      removed = false;
      for (size_t i = 0; i < out.size(); ++i) {
        std::vector<BinomialIdeal> others;
        for (size_t j = 0; j < out.size(); ++j) {
          if (j != i) others.push_back(out[j].ideal);
        }
        if (contains(out[i].ideal, intersect_all(others))) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          removed = true;
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CellularComponent& a, const CellularComponent& b) {
    return ideal_less(a.ideal, b.ideal);
  });
  return out;
}

bool verify_cellular_decomposition(const BinomialIdeal& I,
                                   const std::vector<BinomialIdeal>& comps) {
  if (comps.empty()) return false;
  for (const BinomialIdeal& c : comps) {
    if (c.is_unit() || !is_cellular(c)) return false;
  }
  return equal(intersect_all(comps), I);
}

}  // namespace binomdec
