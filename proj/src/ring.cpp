#include "binomdec/ring.hpp"

#include <set>
#include <stdexcept>

namespace binomdec {

Ring::Ring(FieldCtx field, std::vector<std::string> vars)
    : field_(std::move(field)), vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  }
}

Ring::Ring(FieldCtx field, int n) : field_(std::move(field)) {
  if (n < 1) throw std::invalid_argument("ring needs at least one variable");
  vars_.reserve(n);
  for (int i = 1; i <= n; ++i) vars_.push_back("x" + std::to_string(i));
}

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
    if (vars_[i] == name) return i + 1;
  return 0;
}

bool Ring::operator==(const Ring& o) const {
  return field_ == o.field_ && vars_ == o.vars_;
}

std::string Ring::str() const {
  std::string s = field_.str() + "[";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  return s + "]";
}

}  // namespace binomdec
