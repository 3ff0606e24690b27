#include "fdinfer/saturation.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fdinfer/axioms.hpp"
#include "fdinfer/error.hpp"

namespace fdinfer {

void SaturationConfig::validate() const {
  auto sorted = generator_order;
  std::sort(sorted.begin(), sorted.end());
  auto expected = std::vector<Axiom>(kDefaultGeneratorOrder.begin(), kDefaultGeneratorOrder.end());
  std::sort(expected.begin(), expected.end());
  if (sorted != expected) {
    throw ValidationError("generator order must be a permutation of AU,GE,CO,UN,DE,TR");
  }
  if (max_rounds == 0) throw ValidationError("max rounds must be positive");
  if (max_rules == 0) throw ValidationError("max rules must be positive");
}

std::vector<Axiom> parse_generator_order(std::string_view text) {
  std::vector<Axiom> order;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    auto axiom = axiom_from_tag(tok);
    if (!axiom) throw ValidationError("unknown generator tag '" + std::string(tok) + "'");
    order.push_back(*axiom);
    pos = comma + 1;
  }
  SaturationConfig probe;
  probe.generator_order = order;
  probe.validate();
  return order;
}

std::string_view status_name(SaturationStatus s) noexcept {
  switch (s) {
    case SaturationStatus::Fixpoint: return "FIXPOINT";
    case SaturationStatus::TargetFound: return "TARGET_FOUND";
    case SaturationStatus::RoundLimit: return "ROUND_LIMIT";
    case SaturationStatus::RuleLimit: return "RULE_LIMIT";
  }
  return "?";
}

namespace {

struct StageOutcome {
  std::size_t inserted = 0;
  bool truncated = false;
};

StageOutcome apply_stage(RuleStore& store, Axiom generator, std::size_t max_rules) {
  GenBatch batch = generate(generator, store);
  StageOutcome out;
  for (const auto& c : batch.produced) {
    if (store.size() >= max_rules) {
      out.truncated = true;
      break;
    }
    if (store.insert(c.lhs, c.rhs, c.axiom, c.parent_ids()).inserted) ++out.inserted;
  }
  return out;
}

}  // namespace

std::size_t run_stage(RuleStore& store, Axiom generator, std::size_t max_rules) {
  return apply_stage(store, generator, max_rules).inserted;
}

std::optional<RuleId> find_target(const RuleStore& store, const Dependency& target) {
  return store.find(target.determinant, target.dependent);
}

SaturationResult saturate(std::span<const Dependency> initial, const Universe& universe,
                          const SaturationConfig& config, const std::optional<Dependency>& target) {
  config.validate();
  if (target) {
    require_nonempty(*target);
    universe.bits_of(target->determinant);
    universe.bits_of(target->dependent);
  }

  SaturationResult result{RuleStore(universe), SaturationStatus::Fixpoint, std::nullopt, {}};
  RuleStore& store = result.store;
  for (const auto& fd : initial) {
    require_nonempty(fd);
    if (!store.insert(fd.determinant, fd.dependent, Provenance{}).inserted) {
      throw ValidationError("duplicate initial rule " + join(fd.determinant, " ") + " -> " +
                            join(fd.dependent, " "));
    }
  }

  const bool early_exit = config.early_exit.value_or(target.has_value());
  auto target_reached = [&] {
    if (!early_exit || !target) return false;
    result.target_id = find_target(store, *target);
    return result.target_id.has_value();
  };
  auto finish = [&](SaturationStatus status) {
    result.status = status;
    if (target && !result.target_id) result.target_id = find_target(store, *target);
    return std::move(result);
  };

  if (target_reached()) return finish(SaturationStatus::TargetFound);

  bool truncated = false;
  auto stage = [&](std::size_t round, Axiom gen) {
    auto outcome = apply_stage(store, gen, config.max_rules);
    truncated = outcome.truncated;
    result.trace.push_back({round, gen, outcome.inserted, store.size()});
    return outcome.inserted;
  };

  stage(0, Axiom::SE);
  if (target_reached()) return finish(SaturationStatus::TargetFound);
  if (truncated) return finish(SaturationStatus::RuleLimit);

  for (std::size_t round = 1; round <= config.max_rounds; ++round) {
    std::size_t added_this_round = 0;
    for (Axiom gen : config.generator_order) {
      added_this_round += stage(round, gen);
      if (target_reached()) return finish(SaturationStatus::TargetFound);
      if (truncated) return finish(SaturationStatus::RuleLimit);
    }
    if (added_this_round == 0) return finish(SaturationStatus::Fixpoint);
  }
  return finish(SaturationStatus::RoundLimit);
}

}  // namespace fdinfer
