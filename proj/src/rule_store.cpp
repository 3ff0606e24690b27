#include "fdinfer/rule_store.hpp"

#include "fdinfer/error.hpp"

namespace fdinfer {

namespace {

struct AxiomInfo {
  Axiom axiom;
  std::string_view tag;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<AxiomInfo, 8> kAxiomInfo = {{
    {Axiom::IN, "IN", "Initial FD", 0},
    {Axiom::SE, "SE", "Self-determination", 0},
    {Axiom::AU, "AU", "Augmentation", 1},
    {Axiom::GE, "GE", "General Unification", 2},
    {Axiom::CO, "CO", "Composition", 2},
    {Axiom::UN, "UN", "Union", 2},
    {Axiom::DE, "DE", "Decomposition", 1},
    {Axiom::TR, "TR", "Transitivity", 2},
}};

const AxiomInfo& info(Axiom a) noexcept { return kAxiomInfo[static_cast<std::size_t>(a)]; }

}  // namespace

std::string_view axiom_tag(Axiom a) noexcept { return info(a).tag; }
std::string_view axiom_name(Axiom a) noexcept { return info(a).name; }
std::size_t axiom_arity(Axiom a) noexcept { return info(a).arity; }

std::optional<Axiom> axiom_from_tag(std::string_view tag) noexcept {
  for (const auto& i : kAxiomInfo) {
    if (i.tag == tag) return i.axiom;
  }
  return std::nullopt;
}

std::optional<Axiom> axiom_from_name(std::string_view name) noexcept {
  for (const auto& i : kAxiomInfo) {
    if (i.name == name) return i.axiom;
  }
  return std::nullopt;
}

RuleStore::RuleStore(Universe universe) : universe_(std::move(universe)) {}

InsertResult RuleStore::insert(const AttrSet& determinant, const AttrSet& dependent,
                               const Provenance& prov) {
  if (determinant.empty()) throw ValidationError("empty determinant");
  if (dependent.empty()) throw ValidationError("empty dependent");
  return insert(universe_.bits_of(determinant), universe_.bits_of(dependent), prov.axiom,
                prov.parents);
}

InsertResult RuleStore::insert(AttrBits lhs, AttrBits rhs, Axiom axiom,
                               std::span<const RuleId> parents) {
  if (lhs == 0) throw ValidationError("empty determinant");
  if (rhs == 0) throw ValidationError("empty dependent");
  if (((lhs | rhs) & ~universe_.all()) != 0) {
    throw ValidationError("rule mentions attributes outside the universe");
  }
  if (parents.size() != axiom_arity(axiom)) {
    throw IntegrityError(std::string(axiom_tag(axiom)) + " expects " +
                         std::to_string(axiom_arity(axiom)) + " parent(s), got " +
                         std::to_string(parents.size()));
  }
  for (RuleId p : parents) {
    if (p == 0 || p > rules_.size()) {
      throw IntegrityError("dangling parent rule id " + std::to_string(p));
    }
  }

  auto [it, fresh] = index_.try_emplace(RuleKey{lhs, rhs}, static_cast<RuleId>(rules_.size() + 1));
  if (!fresh) return {it->second, false};

  RuleRecord rec;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.axiom = axiom;
  rec.parent_count = static_cast<std::uint8_t>(parents.size());
  for (std::size_t i = 0; i < parents.size(); ++i) rec.parents[i] = parents[i];
  rules_.push_back(rec);
  return {it->second, true};
}

std::optional<RuleId> RuleStore::find(const AttrSet& determinant, const AttrSet& dependent) const {
  if (!universe_.covers(determinant) || !universe_.covers(dependent)) return std::nullopt;
  return find(universe_.bits_of(determinant), universe_.bits_of(dependent));
}

std::optional<RuleId> RuleStore::find(AttrBits lhs, AttrBits rhs) const {
  auto it = index_.find(RuleKey{lhs, rhs});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const RuleRecord& RuleStore::record(RuleId id) const {
  if (id == 0 || id > rules_.size()) {
    throw LookupError("unknown rule id " + std::to_string(id));
  }
  return rules_[id - 1];
}

Dependency RuleStore::dependency(RuleId id) const {
  const auto& r = record(id);
  return {universe_.set_of(r.lhs), universe_.set_of(r.rhs)};
}

FD RuleStore::get(RuleId id) const {
  const auto& r = record(id);
  FD fd;
  fd.id = id;
  fd.determinant = universe_.set_of(r.lhs);
  fd.dependent = universe_.set_of(r.rhs);
  fd.provenance.axiom = r.axiom;
  fd.provenance.parents.assign(r.parent_ids().begin(), r.parent_ids().end());
  return fd;
}

}  // namespace fdinfer
