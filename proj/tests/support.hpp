#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fdinfer/attrset.hpp"
#include "fdinfer/rule_store.hpp"

namespace fdtest {

using fdinfer::AttrSet;
using fdinfer::Dependency;
using fdinfer::Universe;

// "A D" or "AD" -> {A, D}; single-letter names only.
inline AttrSet attrs(std::string_view letters) {
  std::vector<std::string> names;
  for (char c : letters) {
    if (c != ' ') names.emplace_back(1, c);
  }
  return AttrSet::from_names(names);
}

inline Dependency fd(std::string_view lhs, std::string_view rhs) { return {attrs(lhs), attrs(rhs)}; }

inline Universe letters(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('A' + i);
  return Universe(attrs(s));
}

inline std::vector<Dependency> case_study_rules() {
  return {fd("A", "BC"), fd("B", "E"), fd("CD", "EF")};
}

inline Universe case_study_universe() { return letters(6); }

struct Instance {
  Universe universe;
  std::vector<Dependency> rules;
};

inline AttrSet random_subset(std::mt19937_64& rng, const Universe& u) {
  std::uniform_int_distribution<fdinfer::AttrBits> pick(1, u.all());
  return u.set_of(pick(rng));
}

inline Dependency random_fd(std::mt19937_64& rng, const Universe& u) {
  return {random_subset(rng, u), random_subset(rng, u)};
}

// Universe of 2..max_attrs letters with 1..max_rules distinct random rules.
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_attrs = 5,
                                std::size_t max_rules = 4) {
  std::uniform_int_distribution<std::size_t> n_attrs(2, max_attrs);
  std::uniform_int_distribution<std::size_t> n_rules(1, max_rules);
  Instance inst{letters(n_attrs(rng)), {}};
  std::size_t want = n_rules(rng);
  while (inst.rules.size() < want) {
    auto r = random_fd(rng, inst.universe);
    if (std::find(inst.rules.begin(), inst.rules.end(), r) == inst.rules.end()) {
      inst.rules.push_back(r);
    }
  }
  return inst;
}

}  // namespace fdtest
