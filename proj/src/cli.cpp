#include "fdinfer/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fdinfer/error.hpp"
#include "fdinfer/oracle.hpp"
#include "fdinfer/proof.hpp"
#include "fdinfer/rules_file.hpp"
#include "fdinfer/saturation.hpp"

namespace fdinfer::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RulesDocument load_rules(const std::string& path) {
  try {
    return parse_rules_file(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what(), e.line(), e.column());
  }
}

// Parses an FD or attribute list given on the command line and checks it
// against the universe.
Dependency checked_fd(const std::string& text, const Universe& universe) {
  Dependency fd = parse_fd_expr(text);
  universe.bits_of(fd.determinant);
  universe.bits_of(fd.dependent);
  return fd;
}

json names_json(const AttrSet& s) {
  json arr = json::array();
  for (const auto& a : s) arr.push_back(a.name());
  return arr;
}

json rule_json(const FD& fd) {
  return json{{"id", fd.id},
              {"lhs", names_json(fd.determinant)},
              {"rhs", names_json(fd.dependent)},
              {"axiom", std::string(axiom_tag(fd.provenance.axiom))},
              {"parents", fd.provenance.parents}};
}

json stage_json(const StageRecord& s) {
  return json{{"round", s.round},
              {"generator", std::string(axiom_tag(s.generator))},
              {"new", s.new_rules},
              {"total", s.total_rules}};
}

// Pretty-prints with one element of each top-level array per line.
std::string json_document(const std::vector<std::pair<std::string, json>>& fields) {
  std::string out = "{\n";
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const auto& [key, value] = fields[f];
    out += "  " + json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += f + 1 < fields.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

std::string trace_line(const StageRecord& s) {
  return "# round " + std::to_string(s.round) + " " + std::string(axiom_tag(s.generator)) + ": +" +
         std::to_string(s.new_rules) + " (total " + std::to_string(s.total_rules) + ")";
}

struct EngineFlags {
  std::string order;
  std::size_t max_rounds = SaturationConfig{}.max_rounds;
  std::size_t max_rules = SaturationConfig{}.max_rules;
  bool trace = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--order", order, "Generator order, a permutation of AU,GE,CO,UN,DE,TR");
    cmd->add_option("--max-rounds", max_rounds, "Maximum number of full generator passes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-rules", max_rules, "Maximum number of rules in the store")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--trace", trace, "Report per-stage rule counts");
  }

  SaturationConfig config() const {
    SaturationConfig c;
    if (!order.empty()) c.generator_order = parse_generator_order(order);
    c.max_rounds = max_rounds;
    c.max_rules = max_rules;
    return c;
  }
};

bool hit_limit(SaturationStatus s) {
  return s == SaturationStatus::RoundLimit || s == SaturationStatus::RuleLimit;
}

std::string limit_message(const SaturationResult& r) {
  return "resource limit: " + std::string(status_name(r.status)) + " with " +
         std::to_string(r.store.size()) + " rules";
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

int cmd_prove(const std::string& rules_path, const std::string& target_text,
              const std::string& format, const EngineFlags& flags, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  RulesDocument doc = load_rules(rules_path);
  Dependency target = checked_fd(target_text, doc.universe);
  SaturationConfig config = flags.config();
  config.early_exit = true;
  auto initial = doc.dependencies();
  SaturationResult result = saturate(initial, doc.universe, config, target);

  if (flags.trace) {
    for (const auto& s : result.trace) err << trace_line(s) << '\n';
  }
  if (result.status == SaturationStatus::Fixpoint) {
    out << "not derivable\n";
    return kNegative;
  }
  if (hit_limit(result.status)) {
    err << limit_message(result) << '\n';
    return kLimit;
  }

  ProofTree tree = extract_proof(result.store, *result.target_id);
  if (auto check = validate_proof(tree, initial, doc.universe); !check) {
    err << "internal error: extracted proof does not validate: " << check.reason << '\n';
    return kNegative;
  }

  std::string text;
  if (format == "json") {
    std::vector<json> rules;
    std::vector<RuleId> seen;
    auto visit = [&](auto&& self, const ProofTree& t) -> void {
      if (std::find(seen.begin(), seen.end(), t.source_id) != seen.end()) return;
      for (const auto& c : t.children) self(self, c);
      seen.push_back(t.source_id);
      rules.push_back(rule_json(result.store.get(t.source_id)));
    };
    visit(visit, tree);
    text = json_document({{"target", json(format_rule(target))},
                          {"status", std::string(status_name(result.status))},
                          {"rules", rules}});
  } else {
    text = render(tree, *proof_format_from_string(format));
    if (text.empty() || text.back() != '\n') text += '\n';
  }
  write_output(text, out_path, out);
  return kSuccess;
}

int cmd_closure(const std::string& rules_path, const std::string& of, std::ostream& out) {
  RulesDocument doc = load_rules(rules_path);
  AttrSet x = parse_attr_list(of);
  doc.universe.bits_of(x);
  auto initial = doc.dependencies();
  out << join(oracle::attribute_closure(initial, x), " ") << '\n';
  return kSuccess;
}

int cmd_saturate(const std::string& rules_path, const std::string& format, const EngineFlags& flags,
                 std::ostream& out, std::ostream& err) {
  RulesDocument doc = load_rules(rules_path);
  SaturationConfig config = flags.config();
  config.early_exit = false;
  auto initial = doc.dependencies();
  SaturationResult result = saturate(initial, doc.universe, config);
  const RuleStore& store = result.store;

  if (format == "json") {
    std::vector<json> rules;
    rules.reserve(store.size());
    for (RuleId id = 1; id <= store.size(); ++id) rules.push_back(rule_json(store.get(id)));
    std::vector<std::pair<std::string, json>> fields = {
        {"attributes", names_json(doc.universe.attrs())},
        {"status", std::string(status_name(result.status))},
        {"rules", rules}};
    if (flags.trace) {
      std::vector<json> trace;
      for (const auto& s : result.trace) trace.push_back(stage_json(s));
      fields.emplace_back("trace", trace);
    }
    out << json_document(fields);
  } else {
    out << "attributes: " << join(doc.universe.attrs(), " ") << '\n';
    for (RuleId id = 1; id <= store.size(); ++id) {
      FD fd = store.get(id);
      out << id << ": " << format_rule({fd.determinant, fd.dependent}) << "   # "
          << axiom_tag(fd.provenance.axiom);
      for (RuleId p : fd.provenance.parents) out << ' ' << p;
      out << '\n';
    }
    if (flags.trace) {
      for (const auto& s : result.trace) out << trace_line(s) << '\n';
    }
    out << "# status: " << status_name(result.status) << '\n';
  }

  if (hit_limit(result.status)) {
    err << limit_message(result) << '\n';
    return kLimit;
  }
  return kSuccess;
}

int cmd_check_proof(const std::string& rules_path, const std::string& proof_path, std::ostream& out) {
  RulesDocument doc = load_rules(rules_path);
  std::string text = read_file(proof_path);
  ProofTree tree;
  try {
    tree = parse_paper_proof(text, doc.universe);
  } catch (const ParseError& e) {
    throw ParseError(proof_path + ":" + e.what(), e.line(), e.column());
  }
  auto initial = doc.dependencies();
  if (auto check = validate_proof(tree, initial, doc.universe); !check) {
    out << "invalid: " << check.reason << '\n';
    return kNegative;
  }
  out << "valid: " << format_rule(tree.conclusion) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Functional-dependency inference with Armstrong's axioms", "fdinfer"};
  app.require_subcommand(1);

  std::string rules_path, target, format, out_path, of, proof_path;
  EngineFlags prove_flags, saturate_flags;

  auto* prove = app.add_subcommand("prove", "Derive a target FD and print its proof");
  prove->add_option("--rules", rules_path, "Rules file")->required();
  prove->add_option("--target", target, "Target FD, e.g. \"A D -> F\"")->required();
  prove->add_option("--format", format, "paper, steps, graph or json")
      ->check(CLI::IsMember({"paper", "steps", "graph", "json"}))
      ->default_str("paper");
  prove->add_option("--out", out_path, "Write the proof to this file instead of stdout");
  prove_flags.attach(prove);

  auto* closure = app.add_subcommand("closure", "Print the attribute closure of a set");
  closure->add_option("--rules", rules_path, "Rules file")->required();
  closure->add_option("--of", of, "Attributes, e.g. \"A D\"")->required();

  auto* sat = app.add_subcommand("saturate", "Saturate to fixpoint and print every rule");
  sat->add_option("--rules", rules_path, "Rules file")->required();
  sat->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
  saturate_flags.attach(sat);

  auto* check = app.add_subcommand("check-proof", "Validate a paper-format proof file");
  check->add_option("--rules", rules_path, "Rules file")->required();
  check->add_option("--proof", proof_path, "Proof file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (prove->parsed()) {
      if (format.empty()) format = "paper";
      return cmd_prove(rules_path, target, format, prove_flags, out_path, out, err);
    }
    if (closure->parsed()) return cmd_closure(rules_path, of, out);
    if (sat->parsed()) {
      if (format.empty()) format = "text";
      return cmd_saturate(rules_path, format, saturate_flags, out, err);
    }
    if (check->parsed()) return cmd_check_proof(rules_path, proof_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fdinfer::cli
