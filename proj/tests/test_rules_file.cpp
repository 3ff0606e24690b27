#include <doctest.h>

#include "fdinfer/error.hpp"
#include "fdinfer/rules_file.hpp"
#include "support.hpp"

using namespace fdinfer;
using fdtest::attrs;
using fdtest::fd;

TEST_CASE("parse the case study file") {
  auto doc = parse_rules_file("attributes: A B C D E F\n1: A -> B C\n2: B -> E\n3: C D -> E F\n");
  CHECK(doc.universe == fdtest::case_study_universe());
  CHECK(doc.dependencies() == fdtest::case_study_rules());
  CHECK(doc.rules[2].label == 3u);
  CHECK(doc.rules[2].line == 4);
}

TEST_CASE("comments, blank lines and unlabeled rules") {
  auto doc = parse_rules_file(
      "# header comment\n\n"
      "attributes: A   # trailing\n"
      "  1: A -> A\r\n");
  CHECK(doc.dependencies() == std::vector<Dependency>{fd("A", "A")});

  auto unlabeled = parse_rules_file("attributes: emp dept\nemp -> dept\n");
  CHECK_FALSE(unlabeled.rules[0].label.has_value());
  CHECK(unlabeled.rules[0].fd.dependent == AttrSet{"dept"});
}

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_rules_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected ParseError for: " << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("rules file errors carry line and column") {
  auto undeclared = parse_error("attributes: A B\n1: A -> C\n");
  CHECK(undeclared.line() == 2);
  CHECK(undeclared.column() == 9);
  CHECK(std::string(undeclared.what()).find("'C'") != std::string::npos);

  auto dup = parse_error("attributes: A B\nA -> B\nB A -> B\nA -> B\n");
  CHECK(dup.line() == 4);
  CHECK(std::string(dup.what()).find("duplicate") != std::string::npos);

  auto label = parse_error("attributes: A B\n1: A -> B\n3: B -> A\n");
  CHECK(label.line() == 3);
  CHECK(std::string(label.what()).find("position 2") != std::string::npos);

  CHECK(parse_error("1: A -> B\n").line() == 1);
  CHECK(parse_error("").line() == 1);
  CHECK(parse_error("attributes:\n").line() == 1);
  CHECK(parse_error("attributes: A A\n").column() == 15);
  CHECK(parse_error("attributes: A B\nA B\n").line() == 2);
  CHECK(parse_error("attributes: A B\nA -> \n").line() == 2);
  CHECK(parse_error("attributes: A B\n -> B\n").line() == 2);
  CHECK(parse_error("attributes: A B\nA => B\n").line() == 2);
  CHECK(parse_error("attributes: A B\n0: A -> B\n").line() == 2);
  CHECK(parse_error("attributes: A 2B\n").column() == 15);
}

TEST_CASE("parse_fd_expr") {
  CHECK(parse_fd_expr("A D -> F") == fd("AD", "F"));
  CHECK(parse_fd_expr("A->A") == fd("A", "A"));
  CHECK(parse_fd_expr("  D A  ->  F  ") == fd("AD", "F"));
  CHECK_THROWS_AS(parse_fd_expr("-> F"), ParseError);
  CHECK_THROWS_AS(parse_fd_expr("A ->"), ParseError);
  CHECK_THROWS_AS(parse_fd_expr("A B"), ParseError);
  CHECK_THROWS_AS(parse_fd_expr("A -> B -> C"), ParseError);
  CHECK_THROWS_AS(parse_fd_expr("A, B -> C"), ParseError);
}

TEST_CASE("parse_attr_list and format_rule") {
  CHECK(parse_attr_list("B") == attrs("B"));
  CHECK(parse_attr_list("D A") == attrs("AD"));
  CHECK_THROWS_AS(parse_attr_list(""), ParseError);
  CHECK_THROWS_AS(parse_attr_list("A -> B"), ParseError);
  CHECK(format_rule(fd("AD", "BCD")) == "A D -> B C D");
}
