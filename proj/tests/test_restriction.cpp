#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "wfloer/restriction.hpp"

using namespace wfloer;
using fixtures::chord;
using fixtures::Q;

namespace {

ActionProfile profile(std::initializer_list<std::tuple<const char*, int, Location, mpq_class>> rows) {
  ActionProfile p;
  for (const auto& [id, w, loc, a] : rows) p.entries[id] = {a, loc, w};
  return p;
}

constexpr auto in = Location::inside;
constexpr auto out = Location::outside;

}  // namespace

TEST_CASE("top energy and feasibility") {
  auto p = profile({{"x0", 2, in, 5}, {"x1", 1, in, 2}, {"x2", 1, out, 3}, {"x3", 2, in, 5}});
  CHECK(e_top(p, "x0", {"x1", "x2"}) == 0);
  CHECK(feasible(p, "x0", {"x1", "x2"}).feasible);
  CHECK(e_top(p, "x0", {"x1"}) == 3);
  CHECK_FALSE(feasible(p, "x1", {"x0"}).feasible);
  auto t = feasible(p, "x0", {"x0"});
  CHECK(t.feasible);
  CHECK(t.trivial_only);
  CHECK_FALSE(feasible(p, "x3", {"x0"}).trivial_only);
  ActionProfile missing;
  missing.entries["y"] = {std::nullopt, in, 1};
  CHECK_THROWS_AS(e_top(missing, "y", {}), MissingAction);
}

TEST_CASE("profiles from chords") {
  ChordSet cs;
  auto a = chord("a", 1, 0, Location::inside);
  cs.add(a);
  auto b = chord("b", 1, 0, Location::outside);
  b.action = mpq_class(-1);
  cs.add(b);
  auto p = ActionProfile::from_chords(cs);
  CHECK(p.action("b") == -1);
  CHECK_THROWS_AS(p.action("a"), MissingAction);
  ChordSet bad;
  bad.add(chord("c", 1, 0, Location::outside));
  CHECK_THROWS_AS(ActionProfile::from_chords(bad), MissingAction);
  ChordSet noloc;
  noloc.add(chord("c", 1, 0));
  CHECK_THROWS(ActionProfile::from_chords(noloc));
}

TEST_CASE("rescaling") {
  auto p = profile({{"i", 1, in, 6}, {"o", 1, out, 4}});
  auto r = rescale_action(p, mpq_class(1, 2));
  CHECK(r.action("i") == 3);
  CHECK(r.action("o") == 4);
  CHECK(rescale_action(p, 1).action("i") == 6);
  CHECK_THROWS_AS(rescale_action(p, 0), std::domain_error);
  CHECK_THROWS_AS(rescale_action(p, mpq_class(3, 2)), std::domain_error);
  CHECK_THROWS_AS(rescale_action(p, -1), std::domain_error);
  auto twice = rescale_action(rescale_action(p, mpq_class(1, 3)), mpq_class(3, 4));
  CHECK(twice.action("i") == rescale_action(p, mpq_class(1, 4)).action("i"));
}

TEST_CASE("nu threshold") {
  auto p = profile({{"a", 1, out, 2}, {"b", 2, out, -1}, {"c", 3, out, 5}});
  CHECK(nu_threshold(p) == 3);
  auto q = profile({{"a", 1, out, 2}, {"b", 2, out, 1}});
  CHECK(nu_threshold(q) == 1);
  auto z = profile({{"a", 1, out, 1}, {"b", 2, out, 0}});
  CHECK_THROWS_AS(nu_threshold(z), std::domain_error);
  auto inside_only = profile({{"a", 4, in, -3}});
  CHECK(nu_threshold(inside_only) == 1);
}

TEST_CASE("rho threshold examples") {
  // single input: rho* = S_out / (A0 - S_in)
  auto p = profile({{"x0", 1, in, 4}, {"o", 1, out, 1}, {"i", 1, in, 1}});
  CHECK(rho_threshold(p, 1, {}, {1, 1}, "x0") == mpq_class(1, 4));
  auto p2 = profile({{"x0", 2, in, 10}, {"o", 1, out, 2}, {"i", 1, in, 4}});
  // tuples with an outside entry: (o,o): 4/10; (o,i), (i,o): 2/6
  CHECK(rho_threshold(p2, 2, {}, {2, 1, 1}, "x0") == mpq_class(1, 3));
  // nothing outside can reach x0: rho* = 1
  auto p3 = profile({{"x0", 1, in, 1}, {"o", 1, out, 5}});
  CHECK(rho_threshold(p3, 1, {}, {1, 1}, "x0") == 1);
  CHECK_THROWS_AS(rho_threshold(p3, 1, {}, {2, 1}, "x0"), std::invalid_argument);
  CHECK_THROWS_AS(rho_threshold(p3, 1, {}, {1, 1}, "o"), std::invalid_argument);
  auto neg = profile({{"x0", 1, in, 1}, {"o", 1, out, -1}});
  CHECK_THROWS_AS(rho_threshold(neg, 1, {}, {1, 1}, "x0"), std::domain_error);
  // flavoured weight law
  auto p4 = profile({{"x0", 2, in, 3}, {"o", 1, out, 1}});
  CHECK(rho_threshold(p4, 1, {1}, {2, 1}, "x0") == mpq_class(1, 3));
}

TEST_CASE("rho threshold against brute force") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> act(1, 9), loc(0, 1), n(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    ActionProfile p;
    p.entries["x0"] = {mpq_class(act(rng) + 5), in, 2};
    int k = n(rng);
    for (int j = 0; j < k; ++j) {
      bool o = j == 0 || loc(rng);
      p.entries["y" + std::to_string(j)] = {mpq_class(act(rng)), o ? out : in, 1};
    }
    const mpq_class rho = rho_threshold(p, 2, {}, {2, 1, 1}, "x0");
    CAPTURE(trial);
    REQUIRE(rho > 0);
    REQUIRE(rho <= 1);
    // brute force: energy rho*A0 - rho*S_in - S_out over tuples with an outside entry
    auto max_energy = [&](const mpq_class& r) {
      mpq_class best = -1000;
      for (const auto& [a, ea] : p.entries)
        for (const auto& [b, eb] : p.entries) {
          if (ea.weight != 1 || eb.weight != 1) continue;
          if (ea.location == in && eb.location == in) continue;
          mpq_class e = r * p.action("x0");
          for (const auto* x : {&ea, &eb}) e -= x->location == in ? mpq_class(r * *x->action) : *x->action;
          best = std::max(best, e);
        }
      return best;
    };
    CHECK(max_energy(rho * mpq_class(99, 100)) < 0);
    if (rho < 1) CHECK(max_energy(rho) >= 0);
    // monotone: a smaller rho stays below zero
    CHECK(max_energy(rho / 2) < 0);
  }
}

TEST_CASE("cascade relations hold on the worked data") {
  auto r = fixtures::restriction_data();
  CHECK(validate_q(r.q, r.source, r.target).valid());
  auto rep = check_q_relations(r.m, r.source, r.m_in, r.target, r.q);
  CHECK(rep.ok());
  CHECK(rep.evaluated == 18);
  AInfinityAlgebra src(r.source, r.m), tgt(r.target, r.m_in);
  CHECK(check_ainfty(src).ok());
  CHECK(check_ainfty(tgt).ok());
  CheckOptions opt;
  opt.max_d = 1;
  auto f = assemble_F(r.q, r.source, r.target);
  auto h = check_homomorphism(src, tgt, f, opt);
  CHECK(h.ok());
  CHECK(h.tuples_checked == 12);
}

TEST_CASE("perturbed cascade data fails") {
  auto r = fixtures::restriction_data(Q(3));
  auto rep = check_q_relations(r.m, r.source, r.m_in, r.target, r.q);
  REQUIRE_FALSE(rep.ok());
  bool q0 = false;
  for (const auto& line : rep.lines())
    if (line.rfind("q0 w=1", 0) == 0) q0 = true;
  CHECK(q0);
  auto s = fixtures::restriction_data(Q(2), Q(1));
  CHECK_FALSE(check_q_relations(s.m, s.source, s.m_in, s.target, s.q).ok());
}

TEST_CASE("formal points only") {
  auto r = fixtures::restriction_data();
  QConstantsTable bare;
  bare.formal_points = r.q.formal_points;
  CHECK(bare.formal_points == std::set<std::string>{"a1", "a2", "c1", "c2"});
  auto eff = bare.effective(r.source);
  CHECK(eff.entries.size() == 4);
  CHECK_FALSE(check_q_relations(r.m, r.source, r.m_in, r.target, bare).ok());
  QConstantsTable wrong = r.q;
  wrong.formal_points.insert("b1");
  auto v = validate_q(wrong, r.source, r.target);
  REQUIRE_FALSE(v.valid());
  CHECK(v.violations[0].kind == "formal-point");
  CHECK_THROWS_AS(assemble_F(wrong, r.source, r.target), InvalidTable);
}

TEST_CASE("annulus obstruction") {
  CHECK_FALSE(annulus_obstruction({1, 2}, {1, 2}).obstruction);
  auto a = annulus_obstruction({1, 3}, {1, 2});
  CHECK(a.obstruction);
  REQUIRE(a.mismatches.size() == 1);
  CHECK(a.mismatches[0] == "corner 2: 9 != 4");
  CHECK(annulus_obstruction({1}, {1, 1}).obstruction);
  CHECK_THROWS_AS(annulus_obstruction({0}, {1}), std::invalid_argument);
}
