#include "binomdec/field.hpp"

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

// ---- dense polynomials over Z/p, coefficients low-to-high, used only during
// ---- context construction (irreducibility checks, modulus search)

using FpPoly = std::vector<long>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

long fp_inv_scalar(long a, long p);

FpPoly fp_rem(FpPoly a, const FpPoly& f, long p) {
  fp_trim(a);
  int df = fp_deg(f);
  long linv = fp_inv_scalar(f[df], p);
  while (fp_deg(a) >= df) {
    long factor = a.back() * linv % p;
    int shift = fp_deg(a) - df;
    if (factor != 0)
      for (int i = 0; i < df; ++i) {
        long& t = a[i + shift];
        t = (t - factor * f[i]) % p;
        if (t < 0) t += p;
      }
    a.pop_back();
    fp_trim(a);
  }
  return a;
}

FpPoly fp_powmod(const FpPoly& base, long e, const FpPoly& f, long p) {
  FpPoly result{1};
  FpPoly b = fp_rem(base, f, p);
  while (e > 0) {
    if (e & 1) result = fp_rem(fp_mul(result, b, p), f, p);
    b = fp_rem(fp_mul(b, b, p), f, p);
    e >>= 1;
  }
  return result;
}

long fp_inv_scalar(long a, long p) {
  // p prime, a nonzero mod p
  long r = 1, e = p - 2, b = a % p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

FpPoly fp_monic(FpPoly a, long p) {
  fp_trim(a);
  if (a.empty()) return a;
  long inv = fp_inv_scalar(a.back(), p);
  for (long& c : a) c = c * inv % p;
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// f monic of degree k >= 1 over Z/p
bool fp_irreducible(const FpPoly& f, long p) {
  int k = fp_deg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  FpPoly x{0, 1};
  // for every prime r | k, x^(p^(k/r)) and x must share no common factor with f
  int rem = k;
  for (int r = 2; r <= rem; ++r) {
    if (rem % r != 0) continue;
    while (rem % r == 0) rem /= r;
    long e = 1;
    for (int i = 0; i < k / r; ++i) e *= p;
    FpPoly h = fp_powmod(x, e, f, p);
    // h - x
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    fp_trim(diff);
    FpPoly g = fp_gcd(diff, f, p);
    if (fp_deg(g) != 0) return false;
  }
  long e = 1;
  for (int i = 0; i < k; ++i) e *= p;
  FpPoly h = fp_powmod(x, e, f, p);
  return h == FpPoly{0, 1};
}

}  // namespace

struct FieldCtx::Data {
  long p = 0;
  int k = 1;
  long q = 0;                  // p^k
  std::vector<long> modulus;   // k+1 coefficients, empty when k == 1
};

static void check_prime(long p) {
  if (!is_prime_long(p)) throw InvalidPrime("characteristic must be prime, got " + std::to_string(p));
}

static long checked_power(long p, int k) {
  long q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > ((1L << 31) - 1) / p)
      throw InvalidField("field size p^k must stay below 2^31");
    q *= p;
  }
  return q;
}

FieldCtx::FieldCtx(long p) : FieldCtx(p, 1) {}

FieldCtx::FieldCtx(long p, int k) {
  check_prime(p);
  if (k < 1) throw InvalidField("extension degree must be at least 1");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  d->q = checked_power(p, k);
  if (k > 1) {
    // smallest monic irreducible of degree k: candidates ordered by the base-p
    // value of their non-leading coefficient vector
    for (long v = 0; v < d->q; ++v) {
      FpPoly f(k + 1, 0);
      long t = v;
      for (int i = 0; i < k; ++i) {
        f[i] = t % p;
        t /= p;
      }
      f[k] = 1;
      if (f[0] == 0) continue;  // divisible by x
      if (fp_irreducible(f, p)) {
        d->modulus = f;
        break;
      }
    }
    if (d->modulus.empty()) throw InvalidField("no irreducible modulus found");  // unreachable
  }
  d_ = std::move(d);
}

FieldCtx::FieldCtx(long p, int k, const std::vector<long>& modulus) {
  check_prime(p);
  if (k < 2) throw InvalidField("explicit modulus requires extension degree at least 2");
  if (modulus.size() != static_cast<size_t>(k) + 1)
    throw InvalidField("modulus must have exactly degree+1 coefficients");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  d->q = checked_power(p, k);
  FpPoly f(modulus.size());
  for (size_t i = 0; i < modulus.size(); ++i) {
    f[i] = modulus[i] % p;
    if (f[i] < 0) f[i] += p;
  }
  if (f[k] != 1) throw InvalidField("modulus must be monic");
  if (!fp_irreducible(f, p)) throw InvalidField("modulus is reducible");
  d->modulus = f;
  d_ = std::move(d);
}

const FieldCtx::Data& FieldCtx::data() const {
  if (!d_) throw InvalidField("uninitialized field context");
  return *d_;
}

long FieldCtx::p() const { return data().p; }
int FieldCtx::k() const { return data().k; }
long FieldCtx::size() const { return data().q; }

const std::vector<long>& FieldCtx::modulus() const { return data().modulus; }

bool FieldCtx::operator==(const FieldCtx& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->p == o.d_->p && d_->k == o.d_->k && d_->modulus == o.d_->modulus;
}

FieldElement FieldCtx::zero() const {
  data();
  return FieldElement(*this, std::vector<long>(d_->k, 0));
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(long v) const {
  data();
  std::vector<long> c(d_->k, 0);
  c[0] = v % d_->p;
  if (c[0] < 0) c[0] += d_->p;
  return FieldElement(*this, std::move(c));
}

FieldElement FieldCtx::from_int(const mpz_class& v) const {
  data();
  mpz_class r = v % d_->p;
  if (r < 0) r += d_->p;
  return from_int(r.get_si());
}

FieldElement FieldCtx::make(const std::vector<long>& coeffs) const {
  data();
  if (coeffs.size() > static_cast<size_t>(d_->k))
    throw InvalidField("coefficient vector longer than extension degree");
  std::vector<long> c(d_->k, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    c[i] = coeffs[i] % d_->p;
    if (c[i] < 0) c[i] += d_->p;
  }
  return FieldElement(*this, std::move(c));
}

FieldElement FieldCtx::gen() const {
  data();
  if (d_->k == 1) throw InvalidField("prime field has no extension generator");
  std::vector<long> c(d_->k, 0);
  c[1] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement FieldCtx::element_at(long i) const {
  data();
  if (i < 0 || i >= d_->q) throw InvalidField("element index out of range");
  std::vector<long> c(d_->k, 0);
  for (int j = 0; j < d_->k; ++j) {
    c[j] = i % d_->p;
    i /= d_->p;
  }
  return FieldElement(*this, std::move(c));
}

std::string FieldCtx::str() const {
  data();
  std::ostringstream os;
  os << "GF(" << d_->p;
  if (d_->k > 1) os << "^" << d_->k;
  os << ")";
  return os.str();
}

// ---- FieldElement

bool FieldElement::is_zero() const {
  for (long c : c_)
    if (c != 0) return false;
  return !c_.empty();
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

static void check_same_ctx(const FieldElement& a, const FieldElement& b) {
  if (!a.ctx().valid() || !b.ctx().valid()) throw InvalidField("uninitialized field element");
  if (a.ctx() != b.ctx()) throw FieldMismatch("operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_ctx(*this, o);
  long p = ctx_.p();
  std::vector<long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    c[i] = c_[i] + o.c_[i];
    if (c[i] >= p) c[i] -= p;
  }
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_ctx(*this, o);
  long p = ctx_.p();
  std::vector<long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    c[i] = c_[i] - o.c_[i];
    if (c[i] < 0) c[i] += p;
  }
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  if (!ctx_.valid()) throw InvalidField("uninitialized field element");
  long p = ctx_.p();
  std::vector<long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] == 0 ? 0 : p - c_[i];
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_ctx(*this, o);
  long p = ctx_.p();
  int k = ctx_.k();
  if (k == 1) return FieldElement(ctx_, {c_[0] * o.c_[0] % p});
  std::vector<long> r(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < k; ++j) r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p;
  }
  const std::vector<long>& m = ctx_.modulus();
  for (int i = 2 * k - 2; i >= k; --i) {
    long lead = r[i];
    if (lead == 0) continue;
    for (int j = 0; j < k; ++j) {
      long& t = r[i - k + j];
      t = (t - lead * m[j]) % p;
      if (t < 0) t += p;
    }
    r[i] = 0;
  }
  r.resize(k);
  return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return pow(ctx_.size() - 2);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_ctx(*this, o);
  return *this * o.inv();
}

FieldElement FieldElement::pow(long e) const { return pow(mpz_class(e)); }

FieldElement FieldElement::pow(const mpz_class& e) const {
  if (!ctx_.valid()) throw InvalidField("uninitialized field element");
  if (is_zero()) {
    if (e > 0) return ctx_.zero();
    if (e == 0) return ctx_.one();
    throw DivisionByZero("zero raised to a negative power");
  }
  long n = ctx_.size() - 1;  // >= 1; exponents on units work mod the group order
  mpz_class m = e % n;
  if (m < 0) m += n;
  long r = m.get_si();
  FieldElement result = ctx_.one();
  FieldElement b = *this;
  while (r > 0) {
    if (r & 1) result = result * b;
    b = b * b;
    r >>= 1;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_ctx(*this, o);
  return c_ == o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  check_same_ctx(*this, o);
  // ascending base-p value of the coefficient vector
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

mpz_class FieldElement::order() const {
  if (is_zero()) throw ZeroArgument("multiplicative order of zero");
  long n = ctx_.size() - 1;
  long ord = n;
  long rem = n;
  for (long f = 2; f * f <= rem; ++f) {
    if (rem % f != 0) continue;
    while (rem % f == 0) rem /= f;
    while (ord % f == 0 && pow(ord / f).is_one()) ord /= f;
  }
  if (rem > 1)
    while (ord % rem == 0 && pow(ord / rem).is_one()) ord /= rem;
  return mpz_class(ord);
}

std::string FieldElement::str() const {
  if (!ctx_.valid()) throw InvalidField("uninitialized field element");
  if (ctx_.k() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = ctx_.k() - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---- dense polynomials over an arbitrary FieldCtx, low-to-high;
// ---- root extraction machinery

namespace {

using FPoly = std::vector<FieldElement>;

void pf_trim(FPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int pf_deg(const FPoly& a) { return static_cast<int>(a.size()) - 1; }

FPoly pf_mul(const FPoly& a, const FPoly& b, const FieldCtx& F) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  pf_trim(r);
  return r;
}

std::pair<FPoly, FPoly> pf_divmod(FPoly a, const FPoly& f, const FieldCtx& F) {
  pf_trim(a);
  int df = pf_deg(f);
  if (df < 0) throw DivisionByZero("polynomial division by zero");
  FieldElement linv = f.back().inv();
  FPoly q(a.size() > static_cast<size_t>(df) ? a.size() - df : 0, F.zero());
  while (pf_deg(a) >= df) {
    FieldElement factor = a.back() * linv;
    int shift = pf_deg(a) - df;
    if (!factor.is_zero()) {
      q[shift] = factor;
      for (int i = 0; i < df; ++i) a[i + shift] = a[i + shift] - factor * f[i];
    }
    a.pop_back();
    pf_trim(a);
  }
  pf_trim(q);
  return {std::move(q), std::move(a)};
}

FPoly pf_rem(FPoly a, const FPoly& f, const FieldCtx& F) {
  return pf_divmod(std::move(a), f, F).second;
}

FPoly pf_powmod(const FPoly& base, mpz_class e, const FPoly& f, const FieldCtx& F) {
  FPoly result{F.one()};
  FPoly b = pf_rem(base, f, F);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = pf_rem(pf_mul(result, b, F), f, F);
    b = pf_rem(pf_mul(b, b, F), f, F);
    e >>= 1;
  }
  return result;
}

FPoly pf_monic(FPoly a, const FieldCtx&) {
  pf_trim(a);
  if (a.empty()) return a;
  FieldElement inv = a.back().inv();
  for (FieldElement& c : a) c = c * inv;
  return a;
}

FPoly pf_gcd(FPoly a, FPoly b, const FieldCtx& F) {
  pf_trim(a);
  pf_trim(b);
  while (!b.empty()) {
    FPoly r = pf_rem(std::move(a), b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return pf_monic(std::move(a), F);
}

// f monic, known to be a product of distinct linear factors; returns all roots.
// Splitting: char 2 uses trace maps, odd characteristic uses (x+a)^((q-1)/2) - 1.
void pf_linear_roots(const FPoly& f, const FieldCtx& F, std::vector<FieldElement>& out) {
  int d = pf_deg(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(-f[0]);
    return;
  }
  long q = F.size();
  for (long trial = 0;; ++trial) {
    FPoly g;
    if (F.p() == 2) {
      // T(delta x) = sum over Frobenius orbit; separates roots by absolute trace
      FieldElement delta = F.element_at(1 + trial % (q - 1));
      FPoly term = pf_rem(FPoly{F.zero(), delta}, f, F);
      FPoly acc = term;
      long m = q;
      int bits = 0;
      while (m > 2) {
        m >>= 1;
        ++bits;
      }
      for (int i = 0; i < bits; ++i) {
        term = pf_rem(pf_mul(term, term, F), f, F);
        if (acc.size() < term.size()) acc.resize(term.size(), F.zero());
        for (size_t j = 0; j < term.size(); ++j) acc[j] = acc[j] + term[j];
        pf_trim(acc);
      }
      g = pf_gcd(acc, f, F);
    } else {
      FieldElement a = F.element_at(trial % q);
      FPoly h = pf_powmod(FPoly{a, F.one()}, mpz_class((q - 1) / 2), f, F);
      if (h.empty()) h.push_back(F.zero());
      h[0] = h[0] - F.one();
      pf_trim(h);
      g = pf_gcd(h, f, F);
    }
    int dg = pf_deg(g);
    if (dg > 0 && dg < d) {
      FPoly rest = pf_divmod(f, g, F).first;
      pf_linear_roots(g, F, out);
      pf_linear_roots(pf_monic(std::move(rest), F), F, out);
      return;
    }
  }
}

std::vector<FieldElement> pf_all_roots(const FPoly& f_in, const FieldCtx& F) {
  FPoly f = f_in;
  pf_trim(f);
  std::vector<FieldElement> out;
  if (pf_deg(f) <= 0) return out;
  if (F.size() <= (1L << 16)) {
    for (long i = 0; i < F.size(); ++i) {
      FieldElement a = F.element_at(i);
      FieldElement v = F.zero();
      for (size_t j = f.size(); j-- > 0;) v = v * a + f[j];
      if (v.is_zero()) out.push_back(a);
    }
  } else {
    f = pf_monic(std::move(f), F);
    FPoly x{F.zero(), F.one()};
    FPoly xq = pf_powmod(x, mpz_class(F.size()), f, F);
    // x^q - x
    if (xq.size() < 2) xq.resize(2, F.zero());
    xq[1] = xq[1] - F.one();
    pf_trim(xq);
    FPoly sf = pf_gcd(xq, f, F);
    pf_linear_roots(sf, F, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<FieldElement> poly_roots(const FieldCtx& ctx, const std::vector<FieldElement>& f) {
  for (const FieldElement& c : f)
    if (c.ctx() != ctx) throw FieldMismatch("coefficient outside the stated field");
  return pf_all_roots(f, ctx);
}

std::vector<FieldElement> nth_roots(const FieldElement& c, const mpz_class& d) {
  if (!c.ctx().valid()) throw InvalidField("uninitialized field element");
  if (c.is_zero()) throw ZeroArgument("root extraction requires a nonzero element");
  if (d <= 0) throw ZeroArgument("root index must be positive");
  const FieldCtx& F = c.ctx();
  long p = F.p();
  int k = F.k();
  long q = F.size();
  long n = q - 1;

  // d = p^e * d' with d' prime to p; Frobenius is bijective, so the roots of
  // x^d - c are exactly the roots of x^d' - c1 where c1 is the p^e-th root of c
  mpz_class dp = d;
  long e = 0;
  while (dp % p == 0) {
    dp /= p;
    ++e;
  }
  long e_red = e % k;
  long frob_exp = 1;
  for (long i = 0; i < (k - e_red) % k; ++i) frob_exp *= p;
  FieldElement c1 = c.pow(frob_exp);

  if (q <= (1L << 16)) {
    std::vector<FieldElement> out;
    for (long i = 1; i < q; ++i) {
      FieldElement a = F.element_at(i);
      if (a.pow(dp) == c1) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // reduce x^d' = c1 in the unit group of order n to x^g = b with g = gcd(d', n)
  mpz_class dred_z = dp % n;
  long dred = dred_z.get_si();
  long g = dred == 0 ? n : std::gcd(dred, n);
  if (!c1.pow(n / g).is_one()) return {};
  FieldElement b;
  if (dred == 0) {
    b = F.one();  // solvability above forces c1 == 1; every unit x has x^n = 1
  } else {
    long u = dred / g, m = n / g;
    // u is invertible mod m; b = c1^(u^-1 mod m)
    long uinv = 0;
    if (m > 1) {
      long r0 = m, r1 = u % m, s0 = 0, s1 = 1;
      while (r1 != 0) {
        long t = r0 / r1;
        long r2 = r0 - t * r1, s2 = s0 - t * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
      }
      uinv = s0 % m;
      if (uinv < 0) uinv += m;
    }
    b = c1.pow(uinv);
  }
  // every solution of x^g = b lies in the cyclic subgroup whose order T
  // divides both g * ord(b) and n; the splitting flow keeps T tiny, so
  // walking that subgroup beats factoring x^g - b by orders of magnitude
  mpz_class t_z = gcd(mpz_class(g) * b.order(), mpz_class(n));
  long T = t_z.get_si();
  if (T > (1L << 20)) {
    FPoly f(static_cast<size_t>(g) + 1, F.zero());
    f[0] = -b;
    f[static_cast<size_t>(g)] = F.one();
    return pf_all_roots(f, F);
  }
  FieldElement gamma = F.one();
  if (T > 1) {
    std::vector<long> rad;
    long t = T;
    for (long r = 2; r * r <= t; ++r) {
      if (t % r == 0) {
        rad.push_back(r);
        while (t % r == 0) t /= r;
      }
    }
    if (t > 1) rad.push_back(t);
    // the T-th power residue map is onto the subgroup, so some image of the
    // deterministic element scan generates it
    for (long i = 1; i < q; ++i) {
      FieldElement h = F.element_at(i).pow(n / T);
      bool full = !h.is_one();
      for (size_t j = 0; full && j < rad.size(); ++j) {
        if (h.pow(T / rad[j]).is_one()) full = false;
      }
      if (full) {
        gamma = h;
        break;
      }
    }
  }
  std::vector<FieldElement> out;
  FieldElement cur = F.one();
  FieldElement cur_g = F.one();
  FieldElement step = gamma.pow(g);
  for (long s = 0; s < T; ++s) {
    if (cur_g == b) out.push_back(cur);
    cur = cur * gamma;
    cur_g = cur_g * step;
  }
  std::sort(out.begin(), out.end());
  return out;
}

long splitting_degree(const FieldCtx& ctx, const mpz_class& d, const FieldElement& c) {
  if (c.ctx() != ctx) throw FieldMismatch("element outside the stated field");
  if (c.is_zero()) throw ZeroArgument("splitting field of a zero right-hand side");
  if (d <= 0) throw ZeroArgument("root index must be positive");
  long p = ctx.p();
  mpz_class dp = d;
  while (dp % p == 0) dp /= p;
  // need ord(c) * d' | q^j - 1, smallest such j
  mpz_class M = c.order() * dp;
  if (M == 1) return 1;
  mpz_class q(ctx.size());
  mpz_class acc = q % M;
  long j = 1;
  // j beyond this bound cannot be realized under the p^k < 2^31 size limit
  long jmax = 1;
  {
    long s = ctx.size();
    long prod = s;
    while (prod <= ((1L << 31) - 1) / s) {
      prod *= s;
      ++jmax;
    }
  }
  while (acc != 1) {
    acc = acc * q % M;
    ++j;
    if (j > jmax)
      throw InvalidField("required splitting extension exceeds the field size limit");
  }
  return j;
}

ExtensionResult extend_field(const FieldCtx& ctx, long j) {
  if (!ctx.valid()) throw InvalidField("uninitialized field context");
  if (j < 1) throw ZeroArgument("extension degree must be positive");
  if (j == 1) {
    FieldEmbedding id{ctx, ctx, ctx.k() > 1 ? ctx.gen() : FieldElement()};
    return {ctx, std::move(id)};
  }
  FieldCtx big(ctx.p(), ctx.k() * static_cast<int>(j));
  FieldEmbedding emb;
  emb.from = ctx;
  emb.to = big;
  if (ctx.k() > 1) {
    // image of the old generator: the canonically smallest root of the old
    // modulus inside the new field
    FPoly mu;
    mu.reserve(ctx.modulus().size());
    for (long coef : ctx.modulus()) mu.push_back(big.from_int(coef));
    std::vector<FieldElement> roots = pf_all_roots(mu, big);
    if (roots.empty()) throw InvalidField("old modulus has no root in the extension");  // unreachable
    emb.gen_image = roots[0];
  }
  return {big, std::move(emb)};
}

ExtensionResult splitting_extension(const FieldCtx& ctx, const mpz_class& d, const FieldElement& c) {
  return extend_field(ctx, splitting_degree(ctx, d, c));
}

FieldElement FieldEmbedding::operator()(const FieldElement& a) const {
  if (a.ctx() != from) throw FieldMismatch("element is not in the embedding's source field");
  if (from == to) return a;
  if (from.k() == 1) return to.from_int(a.coeffs()[0]);
  FieldElement r = to.zero();
  const std::vector<long>& c = a.coeffs();
  for (size_t i = c.size(); i-- > 0;) r = r * gen_image + to.from_int(c[i]);
  return r;
}

}  // namespace binomdec
