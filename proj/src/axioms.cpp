#include "fdinfer/axioms.hpp"

#include <unordered_set>

#include "fdinfer/error.hpp"

namespace fdinfer {

namespace {

// Collects candidates, skipping those already in the snapshot or the batch.
class BatchBuilder {
 public:
  explicit BatchBuilder(const RuleStore& snapshot) : snapshot_(snapshot) {}

  void add(AttrBits lhs, AttrBits rhs, Axiom axiom, RuleId p1 = 0, RuleId p2 = 0) {
    if (snapshot_.contains(lhs, rhs)) return;
    if (!seen_.insert(RuleKey{lhs, rhs}).second) return;
    Candidate c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.axiom = axiom;
    c.parent_count = static_cast<std::uint8_t>(axiom_arity(axiom));
    c.parents = {p1, p2};
    batch_.produced.push_back(c);
  }

  GenBatch finish() && { return std::move(batch_); }

 private:
  const RuleStore& snapshot_;
  std::unordered_set<RuleKey, RuleKeyHash> seen_;
  GenBatch batch_;
};

RuleId id_of(std::size_t index) { return static_cast<RuleId>(index + 1); }

template <typename PairFn>
GenBatch for_each_pair(const RuleStore& snapshot, PairFn&& fn) {
  BatchBuilder out(snapshot);
  auto rules = snapshot.records();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      fn(out, rules[i], id_of(i), rules[j], id_of(j));
    }
  }
  return std::move(out).finish();
}

}  // namespace

GenBatch gen_selfdet(const RuleStore& snapshot) {
  BatchBuilder out(snapshot);
  for (std::size_t a = 0; a < snapshot.universe().size(); ++a) {
    AttrBits bit = AttrBits{1} << a;
    out.add(bit, bit, Axiom::SE);
  }
  return std::move(out).finish();
}

GenBatch gen_aug(const RuleStore& snapshot) {
  BatchBuilder out(snapshot);
  auto rules = snapshot.records();
  std::size_t n_attrs = snapshot.universe().size();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t a = 0; a < n_attrs; ++a) {
      AttrBits bit = AttrBits{1} << a;
      out.add(rules[i].lhs | bit, rules[i].rhs | bit, Axiom::AU, id_of(i));
    }
  }
  return std::move(out).finish();
}

GenBatch gen_trans(const RuleStore& snapshot) {
  return for_each_pair(snapshot, [](BatchBuilder& out, const RuleRecord& f1, RuleId i,
                                    const RuleRecord& f2, RuleId j) {
    if (f1.rhs == f2.lhs) {
      out.add(f1.lhs, f2.rhs, Axiom::TR, i, j);
    } else if (f2.rhs == f1.lhs) {
      out.add(f2.lhs, f1.rhs, Axiom::TR, i, j);
    }
  });
}

GenBatch gen_decomp(const RuleStore& snapshot) {
  BatchBuilder out(snapshot);
  auto rules = snapshot.records();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    AttrBits rhs = rules[i].rhs;
    AttrBits tail = rhs & (rhs - 1);
    if (tail == 0) continue;
    AttrBits head = rhs & ~tail;
    out.add(rules[i].lhs, head, Axiom::DE, id_of(i));
    out.add(rules[i].lhs, tail, Axiom::DE, id_of(i));
  }
  return std::move(out).finish();
}

GenBatch gen_union(const RuleStore& snapshot) {
  return for_each_pair(snapshot, [](BatchBuilder& out, const RuleRecord& f1, RuleId i,
                                    const RuleRecord& f2, RuleId j) {
    if (f1.lhs == f2.lhs) out.add(f1.lhs, f1.rhs | f2.rhs, Axiom::UN, i, j);
  });
}

GenBatch gen_comp(const RuleStore& snapshot) {
  return for_each_pair(snapshot, [](BatchBuilder& out, const RuleRecord& f1, RuleId i,
                                    const RuleRecord& f2, RuleId j) {
    out.add(f1.lhs | f2.lhs, f1.rhs | f2.rhs, Axiom::CO, i, j);
  });
}

GenBatch gen_genuni(const RuleStore& snapshot) {
  return for_each_pair(snapshot, [](BatchBuilder& out, const RuleRecord& f1, RuleId i,
                                    const RuleRecord& f2, RuleId j) {
    AttrBits dependent = f1.rhs | f2.rhs;
    if (AttrBits d21 = f2.lhs & ~f1.rhs; d21 != 0) {
      out.add(f1.lhs | d21, dependent, Axiom::GE, i, j);
    }
    if (AttrBits d12 = f1.lhs & ~f2.rhs; d12 != 0) {
      out.add(f2.lhs | d12, dependent, Axiom::GE, j, i);
    }
  });
}

GenBatch generate(Axiom axiom, const RuleStore& snapshot) {
  switch (axiom) {
    case Axiom::SE: return gen_selfdet(snapshot);
    case Axiom::AU: return gen_aug(snapshot);
    case Axiom::GE: return gen_genuni(snapshot);
    case Axiom::CO: return gen_comp(snapshot);
    case Axiom::UN: return gen_union(snapshot);
    case Axiom::DE: return gen_decomp(snapshot);
    case Axiom::TR: return gen_trans(snapshot);
    case Axiom::IN: break;
  }
  throw ValidationError("IN has no generator");
}

bool check_step(Axiom axiom, std::span<const Dependency> parents, const Dependency& conclusion,
                const Universe& universe, DecompositionCheck decomposition) {
  if (axiom == Axiom::IN) throw ValidationError("initial rules are not derivation steps");
  if (parents.size() != axiom_arity(axiom)) {
    throw ValidationError(std::string(axiom_tag(axiom)) + " takes " +
                          std::to_string(axiom_arity(axiom)) + " parent(s), got " +
                          std::to_string(parents.size()));
  }
  const auto& [cx, cy] = conclusion;

  switch (axiom) {
    case Axiom::SE:
      return cx.size() == 1 && cx == cy && universe.covers(cx);

    case Axiom::AU: {
      const auto& [x, y] = parents[0];
      for (const auto& a : universe.attrs()) {
        if (set_insert(x, a) == cx && set_insert(y, a) == cy) return true;
      }
      return false;
    }

    case Axiom::DE: {
      const auto& [x, y] = parents[0];
      if (x != cx || y.size() < 2) return false;
      if (decomposition == DecompositionCheck::AnySubset) {
        return !cy.empty() && is_subset(cy, y);
      }
      const auto& head = y.members().front();
      return cy == AttrSet::from_attributes({head}) ||
             cy == set_difference(y, AttrSet::from_attributes({head}));
    }

    case Axiom::TR: {
      const auto& [x1, y1] = parents[0];
      const auto& [x2, y2] = parents[1];
      if (y1 == x2 && cx == x1 && cy == y2) return true;
      return y2 == x1 && cx == x2 && cy == y1;
    }

    case Axiom::UN: {
      const auto& [x1, y1] = parents[0];
      const auto& [x2, y2] = parents[1];
      return x1 == x2 && cx == x1 && cy == set_union(y1, y2);
    }

    case Axiom::CO: {
      const auto& [x1, y1] = parents[0];
      const auto& [x2, y2] = parents[1];
      return cx == set_union(x1, x2) && cy == set_union(y1, y2);
    }

    case Axiom::GE: {
      const auto& [x1, y1] = parents[0];
      const auto& [x2, y2] = parents[1];
      AttrSet diff = set_difference(x2, y1);
      return !diff.empty() && cx == set_union(x1, diff) && cy == set_union(y1, y2);
    }

    case Axiom::IN:
      break;
  }
  return false;
}

}  // namespace fdinfer
