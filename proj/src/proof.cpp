#include "fdinfer/proof.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "fdinfer/error.hpp"

namespace fdinfer {

namespace {

ProofTree expand(const RuleStore& store, RuleId id) {
  const RuleRecord& rec = store.record(id);
  ProofTree node;
  node.conclusion = store.dependency(id);
  node.axiom = rec.axiom;
  node.source_id = id;
  for (RuleId parent : rec.parent_ids()) {
    if (parent >= id) {
      throw IntegrityError("rule " + std::to_string(id) + " cites parent " +
                           std::to_string(parent) + " that does not precede it");
    }
    node.children.push_back(expand(store, parent));
  }
  return node;
}

bool is_leaf_axiom(Axiom a) { return a == Axiom::IN || a == Axiom::SE; }

bool compact_names(const ProofTree& t) {
  if (!all_single_char(t.conclusion.determinant) || !all_single_char(t.conclusion.dependent)) {
    return false;
  }
  return std::all_of(t.children.begin(), t.children.end(), compact_names);
}

std::string attrs_text(const AttrSet& s, bool compact) { return join(s, compact ? "" : " "); }

std::string fd_text(const Dependency& fd, bool compact, std::string_view arrow = "-->") {
  return attrs_text(fd.determinant, compact) + std::string(arrow) + attrs_text(fd.dependent, compact);
}

std::string describe(const Dependency& fd) { return fd_text(fd, false, " -> "); }

ProofCheck check_node(const ProofTree& node, std::span<const Dependency> initial,
                      const Universe& universe, DecompositionCheck decomposition) {
  const auto& c = node.conclusion;
  auto fail = [&](std::string why) {
    return ProofCheck{false, "at " + describe(c) + " (" + std::string(axiom_name(node.axiom)) +
                                 "): " + std::move(why)};
  };
  if (c.determinant.empty() || c.dependent.empty()) return fail("empty side");
  if (!universe.covers(c.determinant) || !universe.covers(c.dependent)) {
    return fail("attribute outside the universe");
  }

  if (node.axiom == Axiom::IN) {
    if (!node.children.empty()) return fail("initial rule has premises");
    if (std::find(initial.begin(), initial.end(), c) == initial.end()) {
      return fail("not an initial rule");
    }
    return {};
  }

  std::vector<Dependency> premises;
  premises.reserve(node.children.size());
  for (const auto& child : node.children) premises.push_back(child.conclusion);
  try {
    if (!check_step(node.axiom, premises, c, universe, decomposition)) {
      return fail("step does not follow from its premises");
    }
  } catch (const ValidationError& e) {
    return fail(e.what());
  }

  for (const auto& child : node.children) {
    if (auto r = check_node(child, initial, universe, decomposition); !r) return r;
  }
  return {};
}

// Post-order numbering of distinct conclusions.
struct Numbering {
  std::vector<const ProofTree*> order;
  std::map<Dependency, std::size_t> number;

  void visit(const ProofTree& t) {
    if (number.contains(t.conclusion)) return;
    for (const auto& child : t.children) visit(child);
    order.push_back(&t);
    number.emplace(t.conclusion, order.size());
  }
};

void render_paper(const ProofTree& t, bool compact, std::string& out) {
  if (t.axiom == Axiom::IN) {
    out += fd_text(t.conclusion, compact);
    return;
  }
  out += '{';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ',';
    render_paper(t.children[i], compact, out);
  }
  out += '(';
  out += axiom_name(t.axiom);
  out += ") => ";
  out += fd_text(t.conclusion, compact);
  out += '}';
}

std::string render_steps(const ProofTree& tree, bool compact) {
  Numbering n;
  n.visit(tree);
  std::string out;
  for (std::size_t k = 0; k < n.order.size(); ++k) {
    const ProofTree& t = *n.order[k];
    out += std::to_string(k + 1) + ". " + fd_text(t.conclusion, compact, " -> ") + "   [";
    if (t.axiom == Axiom::IN) {
      out += "initial";
    } else {
      out += axiom_name(t.axiom);
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        out += i == 0 ? " from " : ", ";
        out += std::to_string(n.number.at(t.children[i].conclusion));
      }
    }
    out += "]\n";
  }
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string render_graph(const ProofTree& tree, bool compact) {
  Numbering n;
  n.visit(tree);
  std::string out = "digraph proof {\n";
  for (std::size_t k = 0; k < n.order.size(); ++k) {
    const ProofTree& t = *n.order[k];
    out += "  n" + std::to_string(k + 1) + " [label=\"" + dot_escape(fd_text(t.conclusion, compact)) +
           "\"];\n";
  }
  for (std::size_t k = 0; k < n.order.size(); ++k) {
    const ProofTree& t = *n.order[k];
    std::vector<std::size_t> seen;
    for (const auto& child : t.children) {
      std::size_t from = n.number.at(child.conclusion);
      if (std::find(seen.begin(), seen.end(), from) != seen.end()) continue;
      seen.push_back(from);
      out += "  n" + std::to_string(from) + " -> n" + std::to_string(k + 1) + " [label=\"" +
             std::string(axiom_name(t.axiom)) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

class PaperParser {
 public:
  PaperParser(std::string_view text, const Universe& universe) : text_(text), universe_(universe) {}

  ProofTree parse() {
    ProofTree t = proof();
    skip_ws();
    if (pos_ != text_.size()) error("trailing input");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) error("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  AttrSet attrs() {
    skip_ws();
    std::vector<Attribute> out;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && ident_char(peek())) ++pos_;
      resolve(text_.substr(start, pos_ - start), out);
      std::size_t save = pos_;
      skip_ws();
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        break;
      }
    }
    if (out.empty()) error("expected attribute names");
    return AttrSet::from_attributes(std::move(out));
  }

  void resolve(std::string_view token, std::vector<Attribute>& out) {
    Attribute whole{std::string(token)};
    if (universe_.contains(whole)) {
      out.push_back(std::move(whole));
      return;
    }
    for (char c : token) {
      std::string name(1, c);
      if (!is_valid_identifier(name) || !universe_.contains(Attribute{name})) {
        error("undeclared attribute '" + std::string(token) + "'");
      }
      out.emplace_back(std::move(name));
    }
  }

  Dependency fdtext() {
    Dependency fd;
    fd.determinant = attrs();
    expect("-->");
    fd.dependent = attrs();
    return fd;
  }

  ProofTree proof() {
    skip_ws();
    if (peek() != '{') {
      ProofTree leaf;
      leaf.conclusion = fdtext();
      leaf.axiom = Axiom::IN;
      return leaf;
    }
    ++pos_;
    ProofTree node;
    skip_ws();
    if (peek() != '(') {
      node.children.push_back(proof());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        node.children.push_back(proof());
        skip_ws();
      }
    }
    expect("(");
    std::size_t close = text_.find(')', pos_);
    if (close == std::string_view::npos) error("unterminated axiom name");
    std::string_view name = text_.substr(pos_, close - pos_);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
    auto axiom = axiom_from_name(name);
    if (!axiom || *axiom == Axiom::IN) error("unknown axiom name '" + std::string(name) + "'");
    node.axiom = *axiom;
    pos_ = close + 1;
    expect("=>");
    node.conclusion = fdtext();
    expect("}");
    return node;
  }

  std::string_view text_;
  const Universe& universe_;
  std::size_t pos_ = 0;
};

void collect_steps(const ProofTree& t, std::map<Dependency, bool>& seen, std::vector<Axiom>& out) {
  if (seen.contains(t.conclusion)) return;
  for (const auto& child : t.children) collect_steps(child, seen, out);
  seen.emplace(t.conclusion, true);
  if (!is_leaf_axiom(t.axiom)) out.push_back(t.axiom);
}

}  // namespace

ProofTree extract_proof(const RuleStore& store, RuleId id) { return expand(store, id); }

ProofCheck validate_proof(const ProofTree& tree, std::span<const Dependency> initial,
                          const Universe& universe, DecompositionCheck decomposition) {
  return check_node(tree, initial, universe, decomposition);
}

std::optional<ProofFormat> proof_format_from_string(std::string_view s) noexcept {
  if (s == "paper") return ProofFormat::Paper;
  if (s == "steps") return ProofFormat::Steps;
  if (s == "graph") return ProofFormat::Graph;
  return std::nullopt;
}

std::string render(const ProofTree& tree, ProofFormat format) {
  bool compact = compact_names(tree);
  switch (format) {
    case ProofFormat::Paper: {
      std::string out;
      render_paper(tree, compact, out);
      return out;
    }
    case ProofFormat::Steps: return render_steps(tree, compact);
    case ProofFormat::Graph: return render_graph(tree, compact);
  }
  return {};
}

ProofTree parse_paper_proof(std::string_view text, const Universe& universe) {
  return PaperParser(text, universe).parse();
}

std::vector<Axiom> derivation_steps(const ProofTree& tree) {
  std::map<Dependency, bool> seen;
  std::vector<Axiom> out;
  collect_steps(tree, seen, out);
  return out;
}

}  // namespace fdinfer
