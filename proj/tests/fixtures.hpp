#pragma once

#include <random>
#include <string>
#include <vector>

#include "wfloer/ainfty.hpp"
#include "wfloer/restriction.hpp"
#include "wfloer/telescope.hpp"

namespace fixtures {

using namespace wfloer;

inline Scalar Q(long n, long d = 1) { return Scalar(Field::rationals(), mpq_class(n, d)); }

inline Chord chord(const std::string& id, int w, int deg, std::optional<Location> loc = std::nullopt) {
  Chord c;
  c.id = id;
  c.weight = w;
  c.degree = deg;
  c.location = loc;
  return c;
}

// Truncated polynomial algebra t, t^2, t^3 with deg t = 1, weight = power.
// m(x0; x1, x2) is the coefficient of x0 in x2 * x1.
struct PolyAlgebra {
  ChordSet chords;
  ConstantsTable table;
};

inline PolyAlgebra poly_algebra(long perturb = 1) {
  PolyAlgebra a;
  for (int k = 1; k <= 3; ++k) a.chords.add(chord("t" + std::to_string(k), k, k));
  auto name = [](int k) { return "t" + std::to_string(k); };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; i + j <= 3; ++j) {
      long v = (i == 1 && j == 2) ? perturb : 1;
      a.table.set({2, {}, {i + j, i, j}, {name(i), name(j)}, name(i + j)}, Q(v));
    }
  return a;
}

// Three chords per weight w in {1,2}: a (inside, deg 0), b (outside, deg 1),
// c (inside, deg 1), with q-data solving both relations.
struct RestrictionData {
  ChordSet source, target;
  ConstantsTable m, m_in;
  QConstantsTable q;
};

inline RestrictionData restriction_data(const Scalar& t1 = Q(2), const Scalar& s_b = Q(-2, 15),
                                        const Scalar& s_c = Q(2, 15)) {
  RestrictionData r;
  for (int w : {1, 2}) {
    std::string s = std::to_string(w);
    r.source.add(chord("a" + s, w, 0, Location::inside));
    r.source.add(chord("b" + s, w, 1, Location::outside));
    r.source.add(chord("c" + s, w, 1, Location::inside));
    r.target.add(chord("a" + s, w, 0, Location::inside));
    r.target.add(chord("c" + s, w, 1, Location::inside));
    r.m.set({1, {}, {w, w}, {"a" + s}, "b" + s}, Q(1));
    r.m.set({1, {}, {w, w}, {"a" + s}, "c" + s}, Q(1));
    r.m_in.set({1, {}, {w, w}, {"a" + s}, "c" + s}, Q(w == 1 ? 3 : 5));
  }
  for (const char* x : {"a", "b", "c"}) r.m.set({1, {1}, {2, 1}, {std::string(x) + "1"}, std::string(x) + "2"}, Q(1));
  r.m_in.set({1, {1}, {2, 1}, {"a1"}, "a2"}, Q(1));
  r.m_in.set({1, {1}, {2, 1}, {"c1"}, "c2"}, Q(5, 3));
  r.q.table.set({1, {}, {1, 1}, {"b1"}, "c1"}, t1);
  r.q.table.set({1, {}, {2, 2}, {"b2"}, "c2"}, Q(4));
  r.q.table.set({1, {1}, {2, 1}, {"b1"}, "a2"}, s_b);
  r.q.table.set({1, {1}, {2, 1}, {"c1"}, "a2"}, s_c);
  r.q.formal_points = QConstantsTable::all_formal_points(r.source, r.target);
  return r;
}

// One generator per weight in degree 0, delta = 0, kappa = identity.
inline TelescopeData identity_model(int W, Field f = Field::rationals()) {
  TelescopeData t;
  t.field = f;
  for (int w = 1; w <= W; ++w) {
    t.cf.push_back(GradedModule({{"g" + std::to_string(w), 0}}));
    t.delta.emplace_back(f, 1, 1, 1);
  }
  for (int w = 1; w < W; ++w) {
    SparseMap k(f, 1, 1, 0);
    k.add(0, 0, Scalar::one(f));
    t.kappa.push_back(k);
  }
  return t;
}

// Random element of {X : rows x cols, constraints(X) = 0}, where each
// constraint is a list of (row, col, coefficient) triples.
using Constraint = std::vector<std::tuple<std::size_t, std::size_t, Scalar>>;

inline std::vector<Scalar> random_solution(Field f, std::size_t rows, std::size_t cols,
                                           const std::vector<Constraint>& constraints, std::mt19937& rng) {
  const std::size_t n = rows * cols;
  SparseMap sys(f, std::max<std::size_t>(constraints.size(), 1), n, 0);
  for (std::size_t r = 0; r < constraints.size(); ++r)
    for (const auto& [i, j, c] : constraints[r]) sys.add(r, i * cols + j, c);
  auto basis = kernel_basis(sys);
  std::vector<Scalar> x(n, Scalar::zero(f));
  std::uniform_int_distribution<int> coin(0, 1);
  for (const auto& v : basis) {
    if (!coin(rng)) continue;
    for (const auto& [i, s] : v) x[i] += s;
  }
  return x;
}

// Random complexes CF(1..W) over F_2 with generators in degrees 0..2 and a
// random chain map kappa between consecutive weights.
inline TelescopeData random_model(std::mt19937& rng, int W, int max_gens) {
  const Field f = Field::prime(2);
  TelescopeData t;
  t.field = f;
  std::uniform_int_distribution<int> count(1, max_gens), degree(0, 2);
  for (int w = 1; w <= W; ++w) {
    int n = count(rng);
    std::vector<Generator> gens;
    for (int k = 0; k < n; ++k) gens.push_back({"w" + std::to_string(w) + "g" + std::to_string(k), degree(rng)});
    GradedModule m(gens);
    // delta with delta^2 = 0 and degree +1.
    std::vector<Constraint> cons;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m[i].degree != m[j].degree + 1) cons.push_back({{i, j, Scalar::one(f)}});
    auto lin = random_solution(f, m.size(), m.size(), cons, rng);
    // Keep the degree 0 -> 1 part, then pick the 1 -> 2 part killing its image.
    SparseMap d0(f, m.size(), m.size(), 1);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m[j].degree == 0 && !lin[i * m.size() + j].is_zero()) d0.add(i, j, lin[i * m.size() + j]);
    std::vector<Constraint> c2;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m[i].degree != 2 || m[j].degree != 1) c2.push_back({{i, j, Scalar::one(f)}});
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t a = 0; a < m.size(); ++a) {
        Constraint c;
        for (std::size_t b = 0; b < m.size(); ++b)
          if (!d0.at(b, a).is_zero()) c.push_back({i, b, d0.at(b, a)});
        if (!c.empty()) c2.push_back(c);
      }
    auto x1 = random_solution(f, m.size(), m.size(), c2, rng);
    SparseMap d = d0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (!x1[i * m.size() + j].is_zero()) d.add(i, j, x1[i * m.size() + j]);
    t.cf.push_back(m);
    t.delta.push_back(d);
  }
  for (int w = 1; w < W; ++w) {
    const auto &A = t.cf[w - 1], &B = t.cf[w];
    const auto &dA = t.delta[w - 1], &dB = t.delta[w];
    // kappa: B x A, degree 0, dB kappa = kappa dA.
    std::vector<Constraint> cons;
    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = 0; j < A.size(); ++j)
        if (B[i].degree != A[j].degree) cons.push_back({{i, j, Scalar::one(f)}});
    for (std::size_t z = 0; z < B.size(); ++z)
      for (std::size_t x = 0; x < A.size(); ++x) {
        Constraint c;
        for (std::size_t y = 0; y < B.size(); ++y)
          if (!dB.at(z, y).is_zero()) c.push_back({y, x, dB.at(z, y)});
        for (std::size_t y = 0; y < A.size(); ++y)
          if (!dA.at(y, x).is_zero()) c.push_back({z, y, -dA.at(y, x)});
        if (!c.empty()) cons.push_back(c);
      }
    auto k = random_solution(f, B.size(), A.size(), cons, rng);
    SparseMap kappa(f, B.size(), A.size(), 0);
    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = 0; j < A.size(); ++j)
        if (!k[i * A.size() + j].is_zero()) kappa.add(i, j, k[i * A.size() + j]);
    t.kappa.push_back(kappa);
  }
  return t;
}

}  // namespace fixtures
