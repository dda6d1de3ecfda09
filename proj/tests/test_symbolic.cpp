#include <doctest.h>

#include "wfloer/symbolic.hpp"

using namespace wfloer;

TEST_CASE("every expansion reduces to zero") {
  for (const auto& cfg : default_suite(3, {0, 1, 2}, 1)) {
    auto cert = certify(cfg);
    CAPTURE(cert.render().size());
    CHECK(cert.nonzero() == 0);
    CHECK_FALSE(cert.lines.empty());
  }
}

TEST_CASE("weight two inputs") {
  for (const auto& cfg : default_suite(2, {0, 1}, 2)) CHECK(certify(cfg).nonzero() == 0);
}

TEST_CASE("worked relations agree") {
  for (int a = 0; a <= 3; ++a) {
    CHECK(compare_displayed({{a}, 1}).empty());
    for (int b = 0; b <= 3; ++b) CHECK(compare_displayed({{a, b}, 1}).empty());
  }
}

TEST_CASE("d = 1, F = {1} relation") {
  auto u = build_universe({{0}, 1});
  auto rel = relation(u, {1}, u.output(1));
  CHECK(rel.size() == 2);
  long sum = 0;
  for (const auto& [p, c] : rel) sum += c;
  CHECK(sum == 0);
}

TEST_CASE("single-summand sign mutations are detected") {
  auto suite = default_suite(3, {0, 1, 2}, 1);
  auto ms = single_summand_mutations();
  CHECK(ms.size() == 8);
  for (const auto& m : ms) {
    auto r = run_mutation(m, suite);
    CAPTURE(m.name);
    CHECK(r.detected());
  }
}

TEST_CASE("relation terms are pinned") {
  CHECK(undetected_term_flips({{0, 1}, 1}, {1, 2}) == 0);
  CHECK(undetected_term_flips({{1, 1}, 1}, {1}) == 0);
  // a one-term relation survives negation
  CHECK(undetected_term_flips({{0}, 1}, {}) > 0);
}

TEST_CASE("arity limit") {
  CHECK_THROWS(build_universe({{0, 0, 0, 0, 0}, 1}));
}
