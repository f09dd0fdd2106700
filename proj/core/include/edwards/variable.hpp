#ifndef EDWARDS_VARIABLE_HPP
#define EDWARDS_VARIABLE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edwards {

// Interned symbol.  Identity is the name; the total order used by any given
// computation is data (a variable sequence), not a property of the symbol.
class Variable {
 public:
  static Variable of(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Variable a, Variable b) { return a.id_ == b.id_; }
  friend bool operator!=(Variable a, Variable b) { return a.id_ != b.id_; }
  // Arbitrary but stable; use a variable sequence for semantic order.
  friend bool operator<(Variable a, Variable b) { return a.id_ < b.id_; }

 private:
  explicit Variable(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// An ordered variable universe.  Exponent vectors of polynomials are indexed
// by position in this list; the list also serves as the default (lex) order.
class Ring {
 public:
  static RingPtr make(std::vector<Variable> vars);
  static RingPtr make(std::initializer_list<std::string_view> names);

  std::size_t size() const { return vars_.size(); }
  Variable var(std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(Variable v) const;
  bool same_universe(const Ring& other) const { return vars_ == other.vars_; }

 private:
  explicit Ring(std::vector<Variable> vars) : vars_(std::move(vars)) {}
  std::vector<Variable> vars_;
};

}  // namespace edwards

#endif
