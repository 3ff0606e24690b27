#include <doctest.h>

#include <random>

#include "fdinfer/error.hpp"
#include "fdinfer/oracle.hpp"
#include "support.hpp"

using namespace fdinfer;
using fdtest::attrs;
using fdtest::fd;

TEST_CASE("attribute_closure on the case study") {
  auto rules = fdtest::case_study_rules();
  CHECK(oracle::attribute_closure(rules, attrs("AD")) == attrs("ABCDEF"));
  CHECK(oracle::attribute_closure(rules, attrs("B")) == attrs("BE"));
  CHECK(oracle::attribute_closure(rules, attrs("E")) == attrs("E"));
}

TEST_CASE("implies") {
  auto rules = fdtest::case_study_rules();
  CHECK(oracle::implies(rules, attrs("AD"), attrs("F")));
  CHECK_FALSE(oracle::implies(rules, attrs("E"), attrs("A")));
  CHECK(oracle::implies({}, attrs("XY"), attrs("XY")));
}

TEST_CASE("semantic_fd_set") {
  std::vector<Dependency> aa{fd("A", "A")};
  CHECK(oracle::semantic_fd_set(aa, attrs("A")) == std::vector<Dependency>{fd("A", "A")});

  std::vector<Dependency> ab{fd("A", "B")};
  auto set = oracle::semantic_fd_set(ab, attrs("AB"));
  std::vector<Dependency> expected{fd("A", "A"),  fd("A", "AB"), fd("A", "B"),  fd("AB", "A"),
                                   fd("AB", "AB"), fd("AB", "B"), fd("B", "B")};
  std::sort(expected.begin(), expected.end());
  CHECK(set == expected);

  // Sum over the 63 nonempty determinants of 2^|closure| - 1; computed
  // independently by brute force outside this code base.
  CHECK(oracle::semantic_fd_set(fdtest::case_study_rules(), attrs("ABCDEF")).size() == 1701);

  CHECK_THROWS_AS(oracle::semantic_fd_set(ab, attrs("ABCDEFGHIJK")), ValidationError);
}

TEST_CASE("closure is extensive, idempotent and monotone") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = fdtest::random_instance(rng, 6, 4);
    auto x = fdtest::random_subset(rng, inst.universe);
    auto y = set_union(x, fdtest::random_subset(rng, inst.universe));
    auto cx = oracle::attribute_closure(inst.rules, x);
    CHECK(is_subset(x, cx));
    CHECK(oracle::attribute_closure(inst.rules, cx) == cx);
    CHECK(is_subset(cx, oracle::attribute_closure(inst.rules, y)));
  }
}
