#include <doctest.h>

#include "fixtures.hpp"
#include "wfloer/ainfty.hpp"

using namespace wfloer;
using fixtures::chord;
using fixtures::Q;

namespace {

Scalar coeff(const CWElement& e, std::size_t chord, bool q) {
  auto it = e.find({chord, q});
  return it == e.end() ? Q(0) : it->second;
}

bool has_kind(const ValidationReport& r, const std::string& kind) {
  for (const auto& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("mu^2 on q-monomials") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      ChordSet cs;
      cs.add(chord("x1", 1, a));
      cs.add(chord("x2", 1, b));
      cs.add(chord("x0", 2, a + b));
      cs.add(chord("y1", 3, a + b - 1));
      cs.add(chord("y2", 3, a + b - 1));
      cs.add(chord("z", 4, a + b - 2));
      ConstantsTable t;
      const Scalar al = Q(2), be = Q(3), ga = Q(5), ep = Q(7);
      t.set({2, {}, {2, 1, 1}, {"x1", "x2"}, "x0"}, al);
      t.set({2, {1}, {3, 1, 1}, {"x1", "x2"}, "y1"}, be);
      t.set({2, {2}, {3, 1, 1}, {"x1", "x2"}, "y2"}, ga);
      t.set({2, {1, 2}, {4, 1, 1}, {"x1", "x2"}, "z"}, ep);
      AInfinityAlgebra mu(cs, t);
      const std::size_t x1 = 0, x2 = 1, x0 = 2, y1 = 3, y2 = 4, z = 5;
      const Scalar s1 = Scalar::sign(t.field, a % 2 != 0);
      const Scalar s2 = Scalar::sign(t.field, (a + b - 1) % 2 != 0);
      CAPTURE(a);
      CAPTURE(b);
      auto e = mu.mu(std::vector<CWGenerator>{{x1, false}, {x2, false}});
      CHECK(coeff(e, x0, false) == s1 * al);
      CHECK(e.size() == 1);
      e = mu.mu(std::vector<CWGenerator>{{x1, false}, {x2, true}});
      CHECK(coeff(e, x0, true) == s1 * al);
      CHECK(coeff(e, y2, false) == s1 * ga);
      CHECK(e.size() == 2);
      e = mu.mu(std::vector<CWGenerator>{{x1, true}, {x2, false}});
      CHECK(coeff(e, x0, true) == s2 * al);
      CHECK(coeff(e, y1, false) == s2 * be);
      CHECK(e.size() == 2);
      e = mu.mu(std::vector<CWGenerator>{{x1, true}, {x2, true}});
      CHECK(coeff(e, y2, true) == -(s2 * ga));
      CHECK(coeff(e, y1, true) == s2 * be);
      CHECK(coeff(e, z, false) == s2 * ep);
      CHECK(e.size() == 3);
    }
}

TEST_CASE("wrapped differential") {
  auto r = fixtures::restriction_data();
  AInfinityAlgebra mu(r.source, r.m);
  const std::size_t a1 = r.source.index("a1"), b1 = r.source.index("b1"), c1 = r.source.index("c1");
  const std::size_t a2 = r.source.index("a2"), b2 = r.source.index("b2"), c2 = r.source.index("c2");
  // mu(a) = (-1)^deg(a) delta(a), deg a = 0.
  auto e = mu.mu(std::vector<CWGenerator>{{a1, false}});
  CHECK(coeff(e, b1, false) == Q(1));
  CHECK(coeff(e, c1, false) == Q(1));
  // mu(q a) = q delta a + kappa a - a.
  e = mu.mu(std::vector<CWGenerator>{{a1, true}});
  CHECK(coeff(e, b1, true) == Q(1));
  CHECK(coeff(e, c1, true) == Q(1));
  CHECK(coeff(e, a2, false) == Q(1));
  CHECK(coeff(e, a1, false) == Q(-1));
  // deg b = 1: mu(q b) = -(kappa b - b).
  e = mu.mu(std::vector<CWGenerator>{{b1, true}});
  CHECK(coeff(e, b2, false) == Q(-1));
  CHECK(coeff(e, b1, false) == Q(1));
  (void)c2;
  CHECK(check_ainfty(mu).ok());
}

TEST_CASE("associative algebra oracle") {
  auto a = fixtures::poly_algebra();
  AInfinityAlgebra mu(a.chords, a.table);
  CheckOptions opt;
  opt.max_d = 4;
  auto rep = check_ainfty(mu, opt);
  CHECK(rep.ok());
  CHECK(rep.tuples_checked > 0);
  opt.exhaustive = true;
  CHECK(check_ainfty(mu, opt).ok());
  CHECK(check_boundary_relation(a.table, a.chords, 3, {}, {3, 1, 1, 1}, {"t1", "t1", "t1"}, "t3").is_zero());
}

TEST_CASE("non-associative perturbation is caught at d = 3") {
  auto a = fixtures::poly_algebra(2);
  AInfinityAlgebra mu(a.chords, a.table);
  auto rep = check_ainfty(mu);
  REQUIRE_FALSE(rep.ok());
  bool witness = false;
  for (const auto& r : rep.residuals) {
    CHECK(r.inputs.size() == 3);
    if (describe(a.chords, r.inputs) == "(t1,t1,t1)" && describe(a.chords, r.output) == "t3") witness = true;
  }
  CHECK(witness);
  CHECK_FALSE(check_boundary_relation(a.table, a.chords, 3, {}, {3, 1, 1, 1}, {"t1", "t1", "t1"}, "t3").is_zero());
  CHECK_THROWS(check_boundary_relation(a.table, a.chords, 3, {}, {3, 1, 1, 1}, {"t1", "t1", "t1"}, "t2"));
}

TEST_CASE("validation") {
  ChordSet cs;
  cs.add(chord("x", 1, 0));
  cs.add(chord("y", 2, 1));
  cs.add(chord("z", 3, 0));
  ConstantsTable t;
  t.set({1, {1, 1}, {3, 1}, {"x"}, "z"}, Q(1));
  CHECK(has_kind(validate(t, cs), "non-injective"));
  ConstantsTable w;
  w.set({1, {}, {1, 1}, {"x"}, "y"}, Q(1));
  CHECK(has_kind(validate(w, cs), "weight-mismatch"));
  ConstantsTable r;
  r.set({1, {1}, {2, 1}, {"x"}, "y"}, Q(1));
  CHECK(has_kind(validate(r, cs), "rigidity"));
  ConstantsTable ok;
  ok.set({1, {1}, {2, 1}, {"x"}, "y"}, Q(1));
  cs.add(chord("y0", 2, 0));
  ConstantsTable good;
  good.set({1, {1}, {2, 1}, {"x"}, "y0"}, Q(1));
  CHECK(validate(good, cs).valid());
  ConstantsTable missing;
  missing.set({1, {}, {1, 1}, {"x"}, "nope"}, Q(1));
  CHECK_THROWS_AS(validate(missing, cs), UnresolvedChord);
  CHECK_THROWS_AS(AInfinityAlgebra(cs, t), InvalidTable);
  ConstantsTable range;
  range.set({1, {2}, {2, 1}, {"x"}, "y0"}, Q(1));
  CHECK(has_kind(validate(range, cs), "flavour-range"));
}

TEST_CASE("composability and winding") {
  ChordSet cs;
  Chord x = chord("x", 1, 0), y = chord("y", 1, 1);
  x.from = "L0";
  x.to = "L1";
  y.from = "L1";
  y.to = "L0";
  x.winding = 1;
  y.winding = 2;
  cs.add(x);
  cs.add(y);
  ConstantsTable t;
  t.set({1, {}, {1, 1}, {"x"}, "y"}, Q(1));
  auto r = validate(t, cs);
  CHECK(has_kind(r, "composability"));
  CHECK(has_kind(r, "winding"));
}

TEST_CASE("identity homomorphism and a broken one") {
  auto a = fixtures::poly_algebra();
  ChordSet cs;
  for (const auto& c : a.chords.chords()) cs.add(chord(c.id, c.weight, c.degree, Location::inside));
  AInfinityAlgebra mu(cs, a.table);
  ConstantsTable id;
  for (const auto& c : cs.chords()) id.set({1, {}, {c.weight, c.weight}, {c.id}, c.id}, Q(1));
  AInfinityMorphism f(cs, cs, id);
  CheckOptions opt;
  opt.max_d = 3;
  CHECK(check_homomorphism(mu, mu, f, opt).ok());
  ConstantsTable scaled = id;
  scaled.set({1, {}, {1, 1}, {"t1"}, "t1"}, Q(2));
  AInfinityMorphism g(cs, cs, scaled);
  CHECK_FALSE(check_homomorphism(mu, mu, g, opt).ok());
}

TEST_CASE("boundary terms match the cut count") {
  auto a = fixtures::poly_algebra();
  auto terms = boundary_terms(a.chords, 3, {}, {3, 1, 1, 1}, {"t1", "t1", "t1"}, "t3");
  // Associativity: two ways to bracket three inputs, each through t2.
  CHECK(terms.size() == 2);
}
