#ifndef BINOMDEC_CELLULAR_HPP
#define BINOMDEC_CELLULAR_HPP

#include <map>
#include <optional>
#include <vector>

#include "binomdec/bideal.hpp"

namespace binomdec {

/// Witness that an ideal is cellular: every ring variable is either a
/// nonzerodivisor (listed in delta) or nilpotent with the recorded least
/// exponent. The two sets partition the variables.
struct CellularCertificate {
  std::vector<int> delta;        // sorted, 1-based
  std::map<int, int> exponents;  // variable -> least e with x^e in the ideal
};

/// Certificate for a proper ideal, or nothing when some variable is a
/// zerodivisor without being nilpotent.
std::optional<CellularCertificate> is_cellular(const BinomialIdeal& I);

struct CellularComponent {
  BinomialIdeal ideal;
  CellularCertificate certificate;
};

/// Cellular ideals whose intersection is I. Splits at the lowest offending
/// variable into (I : x_i^inf) and I + <x_i^e>, e being the exponent at which
/// the quotient chain stabilizes; the identity I = meet of the two parts is
/// asserted at every step. With prune set, components containing the
/// intersection of the others are dropped. Output sorted canonically.
std::vector<CellularComponent> cellular_decomposition(const BinomialIdeal& I, bool prune = true);

/// True when every listed ideal is proper cellular and their intersection
/// equals I.
bool verify_cellular_decomposition(const BinomialIdeal& I,
                                   const std::vector<BinomialIdeal>& comps);

}  // namespace binomdec

#endif
