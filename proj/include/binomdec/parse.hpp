#ifndef BINOMDEC_PARSE_HPP
#define BINOMDEC_PARSE_HPP

#include <map>
#include <string>
#include <vector>

#include "binomdec/bideal.hpp"

namespace binomdec {

/// Frozen results a problem file may carry for regression checking.
struct Expectation {
  enum class Kind { Flag, Indices, Ideals };
  Kind kind;
  bool flag = false;
  std::vector<int> indices;                // e.g. the cellular variables
  std::vector<std::vector<Poly>> ideals;   // one generator list per component
};

/// Parsed .bid file: field, ring, ideal, optional expectations.
struct ProblemFile {
  FieldCtx field;
  Ring ring;
  BinomialIdeal ideal;
  std::map<std::string, Expectation> expect;
};

// "GF(7)", "GF(2^4)", "GF(3^2; modulus=2,0,1)"
FieldCtx parse_field(const std::string& text);

// polynomial in the grammar shared with problem files:
//   3*x1^2*x3 - x2, x3*(x1 - x2), (x1 - x2)^2
Poly parse_poly(const Ring& R, const std::string& text);

ProblemFile parse_problem(const std::string& text);
ProblemFile parse_problem_file(const std::string& path);

}  // namespace binomdec

#endif
