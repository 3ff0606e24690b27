#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "fdinfer/cli.hpp"
#include "fdinfer/oracle.hpp"
#include "fdinfer/rules_file.hpp"
#include "support.hpp"

using namespace fdinfer;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("fdinfer_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = path / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
};

const char* kCaseStudy = "attributes: A B C D E F\n1: A -> B C\n2: B -> E\n3: C D -> E F\n";

}  // namespace

TEST_CASE("prove prints the proof") {
  TempDir dir;
  auto rules = dir.write("case.fd", kCaseStudy);
  auto r = run({"prove", "--rules", rules, "--target", "A D -> F"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out ==
        "{{A-->BC(Augmentation) => AD-->BCD},{{B-->E,CD-->EF(General Unification) => BCD-->EF}"
        "(Decomposition) => BCD-->F}(Transitivity) => AD-->F}\n");

  auto steps = run({"prove", "--rules", rules, "--target", "A D -> F", "--format", "steps"});
  CHECK(steps.code == 0);
  CHECK(std::count(steps.out.begin(), steps.out.end(), '\n') == 7);
  CHECK(steps.out.find("[Transitivity from 2, 6]") != std::string::npos);

  auto graph = run({"prove", "--rules", rules, "--target", "A D -> F", "--format", "graph"});
  CHECK(graph.out.rfind("digraph proof {", 0) == 0);
}

TEST_CASE("prove --out writes the file and json mirrors the records") {
  TempDir dir;
  auto rules = dir.write("case.fd", kCaseStudy);
  auto out_path = (dir.path / "Proof.txt").string();
  auto r = run({"prove", "--rules", rules, "--target", "A D -> F", "--out", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  std::string text((std::istreambuf_iterator<char>(f)), {});
  CHECK(text.find("(Transitivity) => AD-->F}\n") != std::string::npos);

  auto json = run({"prove", "--rules", rules, "--target", "A D -> F", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find(R"({"axiom":"TR","id":)") != std::string::npos);
  CHECK(json.out.find(R"("lhs":["A","D"],"parents":[)") != std::string::npos);
  CHECK(json.out.find(R"("target": "A D -> F")") != std::string::npos);
}

TEST_CASE("prove reports non-derivable targets and limits") {
  TempDir dir;
  auto rules = dir.write("case.fd", kCaseStudy);
  auto no = run({"prove", "--rules", rules, "--target", "E -> A"});
  CHECK(no.code == cli::kNegative);
  CHECK(no.out == "not derivable\n");

  auto limit = run({"prove", "--rules", rules, "--target", "A D -> F", "--max-rules", "50"});
  CHECK(limit.code == cli::kLimit);
  CHECK(limit.err.find("RULE_LIMIT") != std::string::npos);

  auto rounds = run({"prove", "--rules", rules, "--target", "E -> A", "--max-rounds", "1"});
  CHECK(rounds.code == cli::kLimit);

  auto traced = run({"prove", "--rules", rules, "--target", "A D -> F", "--trace"});
  CHECK(traced.err.rfind("# round 0 SE: +6 (total 9)\n", 0) == 0);

  auto ordered = run({"prove", "--rules", rules, "--target", "A D -> F", "--order",
                      "TR,DE,UN,CO,GE,AU", "--format", "steps"});
  CHECK(ordered.code == 0);
}

TEST_CASE("usage and parse errors exit 2") {
  TempDir dir;
  auto rules = dir.write("case.fd", kCaseStudy);
  auto bad = dir.write("bad.fd", "attributes: A B\n1: A -> C\n");
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"prove", "--rules", rules}).code == cli::kUsage);
  CHECK(run({"prove", "--rules", rules, "--target", "-> F"}).code == cli::kUsage);
  CHECK(run({"prove", "--rules", rules, "--target", "A -> Z"}).code == cli::kUsage);
  CHECK(run({"prove", "--rules", rules, "--target", "A -> B", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"prove", "--rules", rules, "--target", "A -> B", "--order", "AU,GE"}).code ==
        cli::kUsage);
  CHECK(run({"prove", "--rules", (dir.path / "missing.fd").string(), "--target", "A -> B"}).code ==
        cli::kUsage);
  auto parse = run({"closure", "--rules", bad, "--of", "A"});
  CHECK(parse.code == cli::kUsage);
  CHECK(parse.err.find("bad.fd:2:9: undeclared attribute 'C'") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("closure") {
  TempDir dir;
  auto rules = dir.write("case.fd", kCaseStudy);
  auto r = run({"closure", "--rules", rules, "--of", "B"});
  CHECK(r.code == 0);
  CHECK(r.out == "B E\n");
  CHECK(run({"closure", "--rules", rules, "--of", "D A"}).out == "A B C D E F\n");
  CHECK(run({"closure", "--rules", rules, "--of", "Q"}).code == cli::kUsage);
}

TEST_CASE("saturate output re-parses to a fixpoint") {
  TempDir dir;
  auto rules = dir.write("case.fd", kCaseStudy);
  auto r = run({"saturate", "--rules", rules});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("attributes: A B C D E F\n1: A -> B C   # IN\n", 0) == 0);
  CHECK(r.out.find("# status: FIXPOINT\n") != std::string::npos);

  auto doc = parse_rules_file(r.out);
  CHECK(doc.rules.size() == 1701);

  auto again_path = dir.write("saturated.fd", r.out);
  auto again = run({"saturate", "--rules", again_path, "--format", "json", "--trace"});
  CHECK(again.code == 0);
  // SE plus one full pass, all empty.
  CHECK(again.out.find(R"("new":0,"round":0)") != std::string::npos);
  CHECK(again.out.find(R"("new":1)") == std::string::npos);
  CHECK(again.out.find(R"("total":1701})") != std::string::npos);
  for (char c = '1'; c <= '9'; ++c) {
    CHECK(again.out.find(std::string(R"("new":)") + c) == std::string::npos);
  }
}

TEST_CASE("saturate limits exit 3") {
  TempDir dir;
  auto rules = dir.write("case.fd", kCaseStudy);
  auto r = run({"saturate", "--rules", rules, "--max-rounds", "1"});
  CHECK(r.code == cli::kLimit);
  CHECK(r.out.find("# status: ROUND_LIMIT") != std::string::npos);
}

TEST_CASE("check-proof") {
  TempDir dir;
  auto rules = dir.write("case.fd", kCaseStudy);
  auto proof_path = (dir.path / "Proof.txt").string();
  REQUIRE(run({"prove", "--rules", rules, "--target", "A D -> F", "--out", proof_path}).code == 0);
  auto ok = run({"check-proof", "--rules", rules, "--proof", proof_path});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid: A D -> F\n");

  auto tampered = dir.write("bad.txt",
                            "{{A-->BC(Augmentation) => AD-->BCD},{{B-->E,CD-->EF(General "
                            "Unification) => BCD-->EF}(Decomposition) => BCD-->F}(Transitivity) "
                            "=> AD-->E}");
  auto bad = run({"check-proof", "--rules", rules, "--proof", tampered});
  CHECK(bad.code == cli::kNegative);
  CHECK(bad.out.rfind("invalid: at A D -> E (Transitivity)", 0) == 0);

  auto garbage = dir.write("garbage.txt", "{A-->B");
  CHECK(run({"check-proof", "--rules", rules, "--proof", garbage}).code == cli::kUsage);
}

TEST_CASE("prove exit status agrees with the oracle") {
  TempDir dir;
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = fdtest::random_instance(rng, 4, 3);
    std::string text = "attributes: " + join(inst.universe.attrs(), " ") + "\n";
    for (const auto& r : inst.rules) text += format_rule(r) + "\n";
    auto path = dir.write("r" + std::to_string(trial) + ".fd", text);
    for (int k = 0; k < 5; ++k) {
      auto target = fdtest::random_fd(rng, inst.universe);
      auto r = run({"prove", "--rules", path, "--target", format_rule(target)});
      bool implied = oracle::implies(inst.rules, target.determinant, target.dependent);
      CHECK(r.code == (implied ? cli::kSuccess : cli::kNegative));
    }
  }
}
