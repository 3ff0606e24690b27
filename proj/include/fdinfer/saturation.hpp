#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fdinfer/attrset.hpp"
#include "fdinfer/rule_store.hpp"

namespace fdinfer {

inline constexpr std::array<Axiom, 6> kDefaultGeneratorOrder = {Axiom::AU, Axiom::GE, Axiom::CO,
                                                                Axiom::UN, Axiom::DE, Axiom::TR};

struct SaturationConfig {
  /// A permutation of AU, GE, CO, UN, DE, TR.
  std::vector<Axiom> generator_order{kDefaultGeneratorOrder.begin(), kDefaultGeneratorOrder.end()};
  std::size_t max_rounds = 32;
  std::size_t max_rules = 200000;
  /// Unset means "stop early iff a target was supplied".
  std::optional<bool> early_exit;

  /// Throws ValidationError if the order is not a permutation of the six
  /// generator tags or a limit is zero.
  void validate() const;
};

/// Parses "AU,GE,CO,UN,DE,TR" style lists. Throws ValidationError.
std::vector<Axiom> parse_generator_order(std::string_view text);

enum class SaturationStatus { Fixpoint, TargetFound, RoundLimit, RuleLimit };

std::string_view status_name(SaturationStatus s) noexcept;

struct StageRecord {
  std::size_t round = 0;  // 0 for the one-off self-determination stage
  Axiom generator = Axiom::SE;
  std::size_t new_rules = 0;
  std::size_t total_rules = 0;
};

struct SaturationResult {
  RuleStore store;
  SaturationStatus status = SaturationStatus::Fixpoint;
  std::optional<RuleId> target_id;
  std::vector<StageRecord> trace;
};

/// Runs one generator against a frozen snapshot of `store`, then inserts the
/// batch in order. Insertion stops once the store holds `max_rules` rules.
/// Returns the number of rules inserted.
std::size_t run_stage(RuleStore& store, Axiom generator,
                      std::size_t max_rules = static_cast<std::size_t>(-1));

/// Loads `initial` as IN rules (ids 1..n), runs self-determination once, then
/// repeats passes over the configured generator order until a pass inserts
/// nothing, the target appears (when early exit is on), or a limit is hit.
SaturationResult saturate(std::span<const Dependency> initial, const Universe& universe,
                          const SaturationConfig& config = {},
                          const std::optional<Dependency>& target = std::nullopt);

std::optional<RuleId> find_target(const RuleStore& store, const Dependency& target);

}  // namespace fdinfer
