#ifndef BINOMDEC_ERRORS_HPP
#define BINOMDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace binomdec {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what = "division by zero in finite field")
      : std::domain_error(what) {}
};

struct FieldMismatch : std::invalid_argument {
  explicit FieldMismatch(const std::string& what = "elements belong to different field contexts")
      : std::invalid_argument(what) {}
};

struct ZeroArgument : std::invalid_argument {
  explicit ZeroArgument(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidField : std::invalid_argument {
  explicit InvalidField(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidPrime : std::invalid_argument {
  explicit InvalidPrime(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotASublattice : std::invalid_argument {
  explicit NotASublattice(const std::string& what = "lattice is not contained in the given super-lattice")
      : std::invalid_argument(what) {}
};

struct InfiniteQuotient : std::invalid_argument {
  explicit InfiniteQuotient(const std::string& what = "lattice quotient is infinite (ranks differ)")
      : std::invalid_argument(what) {}
};

struct NotInLattice : std::invalid_argument {
  explicit NotInLattice(const std::string& what = "vector does not lie in the character's lattice")
      : std::invalid_argument(what) {}
};

// Thrown when a character extension needs roots the current field lacks.
// needed_degree is the extension degree (over the current field) that would fix it.
struct MissingRoots : std::runtime_error {
  long needed_degree;
  explicit MissingRoots(long deg)
      : std::runtime_error("field lacks required roots; extension of degree " +
                           std::to_string(deg) + " needed"),
        needed_degree(deg) {}
};

struct RingMismatch : std::invalid_argument {
  explicit RingMismatch(const std::string& what = "operands live in different polynomial rings")
      : std::invalid_argument(what) {}
};

struct NotAFrobeniusPower : std::invalid_argument {
  explicit NotAFrobeniusPower(const std::string& what) : std::invalid_argument(what) {}
};

struct NotNilpotent : std::invalid_argument {
  explicit NotNilpotent(const std::string& what) : std::invalid_argument(what) {}
};

struct UnitIdeal : std::invalid_argument {
  explicit UnitIdeal(const std::string& what = "ideal is the unit ideal")
      : std::invalid_argument(what) {}
};

struct NotCellular : std::invalid_argument {
  explicit NotCellular(const std::string& what = "ideal is not cellular with respect to the given variables")
      : std::invalid_argument(what) {}
};

struct InconsistentCharacter : std::logic_error {
  explicit InconsistentCharacter(const std::string& what = "eliminated basis does not define a character (engine bug)")
      : std::logic_error(what) {}
};

struct SyntaxError : std::runtime_error {
  int line, col;
  SyntaxError(int line_, int col_, const std::string& what)
      : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + what),
        line(line_), col(col_) {}
};

struct NonBinomialGenerator : std::runtime_error {
  explicit NonBinomialGenerator(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace binomdec

#endif
