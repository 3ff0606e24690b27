#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdinfer/attrset.hpp"
#include "fdinfer/axioms.hpp"
#include "fdinfer/rule_store.hpp"

namespace fdinfer {

/// Derivation tree. Leaves are IN or SE; children follow provenance order.
struct ProofTree {
  Dependency conclusion;
  Axiom axiom = Axiom::IN;
  std::vector<ProofTree> children;
  RuleId source_id = 0;  // 0 when the tree was not extracted from a store

  friend bool operator==(const ProofTree&, const ProofTree&) = default;
};

/// Expands provenance from `id` down to IN/SE leaves.
/// Throws LookupError for an unknown id, IntegrityError for a parent id that
/// does not precede its child.
ProofTree extract_proof(const RuleStore& store, RuleId id);

struct ProofCheck {
  bool valid = true;
  std::string reason;  // empty when valid

  explicit operator bool() const noexcept { return valid; }
};

/// Checks every node: IN leaves must be initial rules, SE leaves universe
/// identities, and internal nodes must pass check_step.
ProofCheck validate_proof(const ProofTree& tree, std::span<const Dependency> initial,
                          const Universe& universe,
                          DecompositionCheck decomposition = DecompositionCheck::HeadOrTail);

enum class ProofFormat { Paper, Steps, Graph };

std::optional<ProofFormat> proof_format_from_string(std::string_view s) noexcept;

/// `Paper` is the nested-brace form
///   proof  := fdtext | "{" [proof ("," proof)*] "(" AxiomName ") => " fdtext "}"
///   fdtext := attrs "-->" attrs
/// where attrs concatenates names when every attribute in the tree is a
/// single character and separates them with a space otherwise.
/// `Steps` is one numbered line per distinct FD in dependency order.
/// `Graph` is a dot digraph with edges from premise to conclusion.
std::string render(const ProofTree& tree, ProofFormat format);

/// Parses the `Paper` form. Names are resolved against the universe: a token
/// that is a declared name is taken whole, otherwise it is split into
/// single-character names. Throws ParseError or ValidationError.
ProofTree parse_paper_proof(std::string_view text, const Universe& universe);

/// Axiom of every internal node, in post-order with repeated FDs counted once.
std::vector<Axiom> derivation_steps(const ProofTree& tree);

}  // namespace fdinfer
