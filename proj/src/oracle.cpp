#include "fdinfer/oracle.hpp"

#include <algorithm>
#include <string>

#include "fdinfer/error.hpp"

namespace fdinfer::oracle {

AttrSet attribute_closure(std::span<const Dependency> rules, const AttrSet& x) {
  AttrSet closure = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (is_subset(r.determinant, closure) && !is_subset(r.dependent, closure)) {
        closure = set_union(closure, r.dependent);
        changed = true;
      }
    }
  }
  return closure;
}

bool implies(std::span<const Dependency> rules, const AttrSet& determinant, const AttrSet& dependent) {
  return is_subset(dependent, attribute_closure(rules, determinant));
}

namespace {

std::vector<AttrSet> nonempty_subsets(const AttrSet& s) {
  const auto& m = s.members();
  std::vector<AttrSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m.size()); ++mask) {
    std::vector<Attribute> pick;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (mask & (std::size_t{1} << i)) pick.push_back(m[i]);
    }
    out.push_back(AttrSet::from_attributes(std::move(pick)));
  }
  return out;
}

}  // namespace

std::vector<Dependency> semantic_fd_set(std::span<const Dependency> rules, const AttrSet& universe,
                                        std::size_t cap) {
  if (universe.size() > cap) {
    throw ValidationError("semantic FD enumeration is capped at " + std::to_string(cap) +
                          " attributes; universe has " + std::to_string(universe.size()));
  }
  std::vector<Dependency> out;
  for (const auto& x : nonempty_subsets(universe)) {
    for (auto& y : nonempty_subsets(attribute_closure(rules, x))) {
      out.push_back({x, std::move(y)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fdinfer::oracle
