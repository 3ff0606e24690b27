#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fdinfer/attrset.hpp"

namespace fdinfer {

/// Derivation tags. IN marks an initial rule; the rest are the
/// self-determination identity and the six two-sided axioms.
enum class Axiom : std::uint8_t { IN, SE, AU, GE, CO, UN, DE, TR };

inline constexpr std::array<Axiom, 8> kAllAxioms = {Axiom::IN, Axiom::SE, Axiom::AU, Axiom::GE,
                                                     Axiom::CO, Axiom::UN, Axiom::DE, Axiom::TR};

/// Two-letter tag, e.g. "AU".
std::string_view axiom_tag(Axiom a) noexcept;
/// Display name, e.g. "Augmentation"; IN renders as "Initial FD".
std::string_view axiom_name(Axiom a) noexcept;
std::optional<Axiom> axiom_from_tag(std::string_view tag) noexcept;
std::optional<Axiom> axiom_from_name(std::string_view name) noexcept;
/// Number of parent rules: 0 for IN/SE, 1 for AU/DE, 2 otherwise.
std::size_t axiom_arity(Axiom a) noexcept;

/// 1-based, dense, assigned in insertion order.
using RuleId = std::uint32_t;

struct Provenance {
  Axiom axiom = Axiom::IN;
  std::vector<RuleId> parents;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Materialized rule record.
struct FD {
  RuleId id = 0;
  AttrSet determinant;
  AttrSet dependent;
  Provenance provenance;
};

/// Compact in-store form of a rule: sides as universe bitmasks.
struct RuleRecord {
  AttrBits lhs = 0;
  AttrBits rhs = 0;
  Axiom axiom = Axiom::IN;
  std::uint8_t parent_count = 0;
  std::array<RuleId, 2> parents{};

  std::span<const RuleId> parent_ids() const noexcept { return {parents.data(), parent_count}; }
};

struct RuleKey {
  AttrBits lhs;
  AttrBits rhs;
  friend bool operator==(const RuleKey&, const RuleKey&) = default;
};

struct RuleKeyHash {
  std::size_t operator()(const RuleKey& k) const noexcept {
    // splitmix-style mixing of both halves
    std::uint64_t x = k.lhs * 0x9E3779B97F4A7C15ULL ^ (k.rhs + 0x632BE59BD9B4E019ULL + (k.lhs << 6));
    x ^= x >> 31;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
};

struct InsertResult {
  RuleId id;
  bool inserted;
};

/// Append-only arena of FDs over a fixed universe, deduplicated on
/// (determinant, dependent). The first provenance recorded for a pair is kept.
class RuleStore {
 public:
  RuleStore() = default;
  explicit RuleStore(Universe universe);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }

  InsertResult insert(const AttrSet& determinant, const AttrSet& dependent, const Provenance& prov);
  InsertResult insert(AttrBits lhs, AttrBits rhs, Axiom axiom, std::span<const RuleId> parents);

  std::optional<RuleId> find(const AttrSet& determinant, const AttrSet& dependent) const;
  std::optional<RuleId> find(AttrBits lhs, AttrBits rhs) const;
  bool contains(AttrBits lhs, AttrBits rhs) const { return index_.contains(RuleKey{lhs, rhs}); }

  /// Throws LookupError for ids outside 1..size().
  FD get(RuleId id) const;
  const RuleRecord& record(RuleId id) const;
  Dependency dependency(RuleId id) const;

  /// Records in id order; element k holds rule k+1.
  std::span<const RuleRecord> records() const noexcept { return rules_; }

  std::size_t index_size() const noexcept { return index_.size(); }

 private:
  Universe universe_;
  std::vector<RuleRecord> rules_;
  std::unordered_map<RuleKey, RuleId, RuleKeyHash> index_;
};

}  // namespace fdinfer
