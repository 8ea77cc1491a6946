#ifndef BINOMDEC_DECOMP_HPP
#define BINOMDEC_DECOMP_HPP

#include <optional>
#include <vector>

#include "binomdec/cellular.hpp"
#include "binomdec/character.hpp"

namespace binomdec {

/// One staircase monomial m outside the ideal together with the character
/// cutting out (I : m) in the cellular variables. The record is embedded when
/// that character's lattice has strictly larger rank than the one of I.
struct WitnessRecord {
  Expvec monomial;       // supported outside delta; all zero for m = 1
  PartialCharacter tau;  // lattice ambient = delta
  bool embedded;
};

enum class ComponentKind { Unmixed, Primary, Hull };

struct Provenance {
  Expvec witness;       // monomial the component descends from; all zero for 1
  int character_index;  // saturation character position, -1 when not applicable
  ComponentKind kind;
};

struct Component {
  BinomialIdeal ideal;
  Provenance provenance;
  std::optional<BinomialIdeal> associated_prime;
};

/// The character rho with I meet kk[delta] = I(rho). Throws NotCellular when
/// I is not cellular with exactly the given delta.
PartialCharacter cellular_character(const BinomialIdeal& I, const std::vector<int>& delta);

/// One record per staircase monomial outside I in the variables off delta,
/// in staircase enumeration order.
std::vector<WitnessRecord> witnesses(const BinomialIdeal& I, const std::vector<int>& delta);

/// Ideal generated by the embedded witness monomials, minimalized; the zero
/// ideal exactly when I is unmixed.
BinomialIdeal memb(const BinomialIdeal& I, const std::vector<int>& delta);

/// I + memb(I); intersection of the minimal primary components. The result
/// is checked to be cellular with the same delta, to have no embedded
/// witnesses left, and to cut out the same ideal in kk[delta].
BinomialIdeal hull(const BinomialIdeal& I, const std::vector<int>& delta);

/// One unmixed component per distinct witness character of an embedded
/// witness (plus the character of I itself): the delta-saturation of
/// I + I(tau) with its own embedded monomials added back. Intersects to I.
std::vector<Component> unmixed_decomposition(const BinomialIdeal& I,
                                             const std::vector<int>& delta);

/// The primary components of hull(I): per saturation character pair, the
/// delta-saturation of I + I(rho_l) plus memb(I), with associated prime
/// I(chi_l) + the variables off delta. When roots of unity are missing the
/// field is enlarged if allowed (results then live over the larger field),
/// else MissingRoots escapes. use_alternate recomputes each component with
/// the embedded monomials of the saturated sum itself instead of memb(I) and
/// insists both agree.
std::vector<Component> minimal_primary_components(const BinomialIdeal& I,
                                                  const std::vector<int>& delta,
                                                  bool allow_extension,
                                                  bool use_alternate = false);

/// Primary decomposition of a cellular ideal: minimal primary components of
/// every unmixed component. prune drops components containing the
/// intersection of the others, keeping the earlier of two equal ones.
std::vector<Component> primary_decomposition_cellular(const BinomialIdeal& I,
                                                      const std::vector<int>& delta,
                                                      bool allow_extension, bool prune = true);

/// Full pipeline for arbitrary proper binomial ideals: cellular
/// decomposition, then the cellular primary decomposition of every part,
/// then one global prune.
std::vector<Component> primary_decomposition(const BinomialIdeal& I, bool allow_extension,
                                             bool prune = true);

/// Deduplicated primes I(chi) + <x_i : i off delta> over the saturation
/// characters chi of every witness character.
std::vector<BinomialIdeal> associated_primes(const BinomialIdeal& I,
                                             const std::vector<int>& delta,
                                             bool allow_extension);

/// Primary over the algebraic closure: cellular, no embedded witnesses, and
/// the cellular character saturated prime to the characteristic.
bool is_primary(const BinomialIdeal& I);

/// One induction step: I + memb(I) together with the delta-saturations of
/// I + I(tau) for the inclusion-minimal embedded witness lattice ideals.
std::vector<Component> unmixed_decomposition_stepwise(const BinomialIdeal& I,
                                                      const std::vector<int>& delta);

/// The same ideal over an extension field; the ring keeps its variable names.
BinomialIdeal embed_ideal(const BinomialIdeal& I, const FieldEmbedding& phi);

}  // namespace binomdec

#endif
