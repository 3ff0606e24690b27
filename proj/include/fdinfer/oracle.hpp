#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fdinfer/attrset.hpp"

namespace fdinfer::oracle {

/// Semantic ground truth via the classical attribute-closure algorithm.
/// Deliberately naive: repeat a full pass over the rules until nothing changes.

AttrSet attribute_closure(std::span<const Dependency> rules, const AttrSet& x);

/// dependent is contained in the closure of determinant.
bool implies(std::span<const Dependency> rules, const AttrSet& determinant, const AttrSet& dependent);

inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// Every X -> Y with nonempty X over the universe and nonempty Y inside
/// closure(X), sorted. Throws ValidationError when the universe exceeds `cap`.
std::vector<Dependency> semantic_fd_set(std::span<const Dependency> rules, const AttrSet& universe,
                                        std::size_t cap = kDefaultEnumerationCap);

}  // namespace fdinfer::oracle
