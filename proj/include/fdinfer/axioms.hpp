#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fdinfer/attrset.hpp"
#include "fdinfer/rule_store.hpp"

namespace fdinfer {

/// A derivable rule not yet inserted into the store.
struct Candidate {
  AttrBits lhs = 0;
  AttrBits rhs = 0;
  Axiom axiom = Axiom::IN;
  std::uint8_t parent_count = 0;
  std::array<RuleId, 2> parents{};

  std::span<const RuleId> parent_ids() const noexcept { return {parents.data(), parent_count}; }
};

/// Output of one generator pass. Entries are unique and absent from the
/// snapshot they were computed against; order is the generator's fixed
/// enumeration order (ascending rule id, then ascending attribute).
struct GenBatch {
  std::vector<Candidate> produced;

  bool changed() const noexcept { return !produced.empty(); }
};

// Generators. Each reads the store as a frozen snapshot and never mutates it.
// Rules are visited by ascending id; pair generators visit i < j.

/// {a} -> {a} for every universe attribute a.
GenBatch gen_selfdet(const RuleStore& snapshot);
/// X -> Y  gives  X+a -> Y+a  for every universe attribute a.
GenBatch gen_aug(const RuleStore& snapshot);
/// X1 -> Y1, X2 -> Y2 with Y1 = X2 gives X1 -> Y2; otherwise with Y2 = X1 gives X2 -> Y1.
GenBatch gen_trans(const RuleStore& snapshot);
/// X -> Y with |Y| >= 2 gives X -> head(Y) and X -> tail(Y).
GenBatch gen_decomp(const RuleStore& snapshot);
/// Equal determinants: X -> Y1 + Y2.
GenBatch gen_union(const RuleStore& snapshot);
/// X1 + X2 -> Y1 + Y2.
GenBatch gen_comp(const RuleStore& snapshot);
/// X1 + (X2 - Y1) -> Y1 + Y2 for each direction whose difference is nonempty.
GenBatch gen_genuni(const RuleStore& snapshot);

/// Dispatches to the generator for `axiom`. Throws ValidationError for IN.
GenBatch generate(Axiom axiom, const RuleStore& snapshot);

enum class DecompositionCheck {
  HeadOrTail,  // exactly inverts gen_decomp
  AnySubset,   // any nonempty subset of the parent dependent
};

/// True iff `conclusion` follows from `parents` (in provenance order) by a
/// single application of `axiom`. Works on AttrSet values, independently of
/// the bitmask code the generators use.
///
/// Throws ValidationError for IN or when the parent count does not match
/// the axiom's arity.
bool check_step(Axiom axiom, std::span<const Dependency> parents, const Dependency& conclusion,
                const Universe& universe,
                DecompositionCheck decomposition = DecompositionCheck::HeadOrTail);

}  // namespace fdinfer
