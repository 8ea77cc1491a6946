#ifndef BINOMDEC_CHARACTER_HPP
#define BINOMDEC_CHARACTER_HPP

#include <vector>

#include "binomdec/bideal.hpp"
#include "binomdec/field.hpp"
#include "binomdec/lattice.hpp"

namespace binomdec {

/// Group homomorphism from a lattice into the multiplicative group of a finite
/// field. Values are stored against the columns of the canonical basis, one
/// nonzero element per column, so equal characters compare equal structurally.
struct PartialCharacter {
  Lattice lattice;
  std::vector<FieldElement> values;
  FieldCtx field;
};

PartialCharacter trivial_character(const Lattice& l, const FieldCtx& field);

/// Character defined by its values on an arbitrary generating set of the
/// lattice, re-expressed onto the canonical basis. The generator columns live
/// in ambient coordinates. Throws InconsistentCharacter when the prescribed
/// values do not define a homomorphism.
PartialCharacter character_from_generators(std::vector<int> ambient, const IntMatrix& generators,
                                           const std::vector<FieldElement>& values,
                                           const FieldCtx& field);

bool operator==(const PartialCharacter& a, const PartialCharacter& b);
inline bool operator!=(const PartialCharacter& a, const PartialCharacter& b) { return !(a == b); }

/// rho(v) for v inside the lattice; NotInLattice otherwise.
FieldElement evaluate(const PartialCharacter& rho, const std::vector<mpz_class>& v);

/// Character with the same lattice and embedded values.
PartialCharacter embed_character(const PartialCharacter& rho, const FieldEmbedding& phi);

/// The ideal I(rho) in r: binomials x^(b+) - rho(b) x^(b-) over the basis,
/// saturated with respect to the product of the ambient variables. Ambient
/// labels of the lattice index variables of r.
BinomialIdeal lattice_ideal(const PartialCharacter& rho, const Ring& r);

/// All characters on l_sup restricting to rho on its lattice; requires a
/// finite quotient l_sup / L_rho. When roots of unity are missing the field
/// is enlarged if allow_extension is set, else MissingRoots carries the
/// extension degree that would repair it. Deterministic order: the root
/// choices per invariant factor are sorted, tuples enumerate lexicographically
/// with the first factor most significant.
std::vector<PartialCharacter> extensions(const PartialCharacter& rho, const Lattice& l_sup,
                                         bool allow_extension);

/// One entry per character on the prime-to-p saturation extending rho. chi is
/// the unique further extension to the full saturation, obtained through
/// p-power roots.
struct SaturationPair {
  PartialCharacter rho_l;
  PartialCharacter chi_l;
};

std::vector<SaturationPair> saturations(const PartialCharacter& rho);

}  // namespace binomdec

#endif
