#include "edwards/variable.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace edwards {

namespace {
struct Interner {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;
};
Interner& interner() {
  static Interner* t = new Interner;
  return *t;
}
}  // namespace

Variable Variable::of(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  auto& t = interner();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return Variable(it->second);
  std::uint32_t id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(t.names.back(), id);
  return Variable(id);
}

const std::string& Variable::name() const {
  auto& t = interner();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names[id_];
}

RingPtr Ring::make(std::vector<Variable> vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw std::invalid_argument("duplicate variable in ring: " +
                                    vars[i].name());
  return RingPtr(new Ring(std::move(vars)));
}

RingPtr Ring::make(std::initializer_list<std::string_view> names) {
  std::vector<Variable> vs;
  vs.reserve(names.size());
  for (auto n : names) vs.push_back(Variable::of(n));
  return make(std::move(vs));
}

std::optional<std::size_t> Ring::index_of(Variable v) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return i;
  return std::nullopt;
}

}  // namespace edwards
