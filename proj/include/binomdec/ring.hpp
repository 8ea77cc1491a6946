#ifndef BINOMDEC_RING_HPP
#define BINOMDEC_RING_HPP

#include <string>
#include <vector>

#include "binomdec/field.hpp"

namespace binomdec {

/// Polynomial ring kk[x_1, ..., x_n]. Variables are addressed 1-based
/// everywhere in the public interface.
class Ring {
 public:
  Ring() = default;  // invalid placeholder
  Ring(FieldCtx field, std::vector<std::string> vars);
  Ring(FieldCtx field, int n);  // names x1..xn

  const FieldCtx& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::string& var(int i) const { return vars_.at(i - 1); }
  const std::vector<std::string>& vars() const { return vars_; }
  // 1-based index of a variable name, 0 when absent
  int var_index(const std::string& name) const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string str() const;  // "GF(7)[x1,x2,x3]"

 private:
  FieldCtx field_;
  std::vector<std::string> vars_;
};

}  // namespace binomdec

#endif
