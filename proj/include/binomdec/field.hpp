#ifndef BINOMDEC_FIELD_HPP
#define BINOMDEC_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "binomdec/errors.hpp"

namespace binomdec {

class FieldElement;

/// Finite field F_{p^k}. For k > 1 the modulus is a monic irreducible of
/// degree k over F_p, chosen deterministically unless supplied. p^k < 2^31.
class FieldCtx {
 public:
  FieldCtx() = default;  // invalid placeholder; any use throws
  explicit FieldCtx(long p);
  FieldCtx(long p, int k);
  // modulus: k+1 coefficients low-to-high, leading coefficient 1
  FieldCtx(long p, int k, const std::vector<long>& modulus);

  long p() const;
  int k() const;
  long size() const;  // p^k
  // full coefficient list of the modulus, low-to-high; empty when k == 1
  const std::vector<long>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement from_int(const mpz_class& v) const;
  FieldElement make(const std::vector<long>& coeffs) const;
  FieldElement gen() const;  // the class of x in F_p[x]/(modulus); requires k > 1

  // element with enumeration index i in [0, p^k), coefficient vector as base-p digits
  FieldElement element_at(long i) const;

  bool valid() const { return d_ != nullptr; }
  bool operator==(const FieldCtx& o) const;
  bool operator!=(const FieldCtx& o) const { return !(*this == o); }

  std::string str() const;  // "GF(7)", "GF(2^4)"

 private:
  friend class FieldElement;
  struct Data;
  const Data& data() const;  // throws InvalidField on a default-constructed context
  std::shared_ptr<const Data> d_;
};

class FieldElement {
 public:
  FieldElement() = default;

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<long>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(const mpz_class& e) const;
  FieldElement pow(long e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // canonical order: ascending base-p value of the coefficient vector
  bool operator<(const FieldElement& o) const;

  // multiplicative order; nonzero elements only
  mpz_class order() const;

  std::string str() const;  // "3", "(1+2*t)", "t"

 private:
  friend class FieldCtx;
  FieldElement(FieldCtx ctx, std::vector<long> c) : ctx_(std::move(ctx)), c_(std::move(c)) {}
  FieldCtx ctx_;
  std::vector<long> c_;  // size k, entries in [0, p)
};

/// All d-th roots of c in c's field, sorted canonically; empty when none exist.
std::vector<FieldElement> nth_roots(const FieldElement& c, const mpz_class& d);

/// Coefficientwise embedding of a smaller field into an extension.
struct FieldEmbedding {
  FieldCtx from, to;
  FieldElement gen_image;  // image of from.gen(); unused when from.k() == 1
  FieldElement operator()(const FieldElement& a) const;
};

struct ExtensionResult {
  FieldCtx field;
  FieldEmbedding embed;
};

/// Degree-j extension of ctx with its embedding; j = 1 returns ctx itself.
ExtensionResult extend_field(const FieldCtx& ctx, long j);

/// Smallest extension of c's field in which x^d - c has d' distinct roots,
/// where d' is the prime-to-p part of d.
ExtensionResult splitting_extension(const FieldCtx& ctx, const mpz_class& d, const FieldElement& c);

/// Degree of the extension splitting_extension would build, without building it.
long splitting_degree(const FieldCtx& ctx, const mpz_class& d, const FieldElement& c);

/// Roots in f's coefficient field of the polynomial with the given coefficients
/// (low-to-high), sorted canonically.
std::vector<FieldElement> poly_roots(const FieldCtx& ctx, const std::vector<FieldElement>& f);

}  // namespace binomdec

#endif
