#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "wfloer/popsicle.hpp"
#include "wfloer/trees.hpp"

using namespace wfloer;

namespace {

// Faces of the associahedron by codimension, via non-crossing diagonal sets
// of an (n)-gon.
std::vector<std::size_t> dissection_counts(int n) {
  std::vector<std::pair<int, int>> diags;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) diags.push_back({i, j});
  auto cross = [](std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
  };
  std::vector<std::size_t> counts(n - 2, 0);
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == diags.size()) {
      ++counts[chosen.size()];
      return;
    }
    rec(k + 1);
    for (int c : chosen)
      if (cross(diags[c], diags[k])) return;
    chosen.push_back(static_cast<int>(k));
    rec(k + 1);
    chosen.pop_back();
  };
  rec(0);
  return counts;
}

std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<std::vector<int>> all_flavours(int d, int nf) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(nf, 1);
  std::function<void(int)> rec = [&](int k) {
    if (k == nf) {
      out.push_back(p);
      return;
    }
    for (int v = 1; v <= d; ++v) {
      p[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("hexagon and pentagon") {
  CHECK(f_vector(Flavour::make(2, {1, 1})) == std::vector<std::size_t>{1, 6, 6});
  CHECK(f_vector(Flavour::make(2, {1, 2})) == std::vector<std::size_t>{1, 5, 5});
  CHECK(popsicle_dimension(Flavour::make(2, {1, 1})) == 2);
}

TEST_CASE("hexagon reflection") {
  Flavour fl = Flavour::make(2, {1, 1});
  auto strata = enumerate_strata(fl);
  auto group = symmetry_group(fl);
  CHECK(group.size() == 2);
  std::map<int, std::map<std::size_t, int>> sizes;
  for (const auto& o : orbits(strata, group)) ++sizes[strata[o[0]].codim()][o.size()];
  // Codimension one: two swapped pairs plus the two edges where both sprinkles share a vertex.
  CHECK(sizes[1][2] == 2);
  CHECK(sizes[1][1] == 2);
  CHECK(sizes[2][2] == 3);
  CHECK(sizes[2][1] == 0);
}

TEST_CASE("pentagon edge with internal symmetry") {
  Flavour fl = Flavour::make(2, {1, 2});
  CHECK(symmetry_group(fl).size() == 1);
  int symmetric_vertices = 0;
  for (const auto& s : enumerate_strata(fl)) {
    if (s.codim() != 1) continue;
    for (const auto& vf : induce_flavours(s))
      if (!vf.flavour.injective()) ++symmetric_vertices;
  }
  CHECK(symmetric_vertices == 1);
}

TEST_CASE("associahedron against polygon dissections") {
  for (int d = 2; d <= 6; ++d) {
    auto got = f_vector(Flavour::make(d, {}));
    auto want = dissection_counts(d + 1);
    CHECK(got == want);
    if (d >= 3) CHECK(got.back() == catalan(d - 1));
  }
}

TEST_CASE("euler characteristic of every small space is one") {
  for (int d = 1; d <= 5; ++d)
    for (int nf = 0; nf <= 2; ++nf) {
      if (d + nf < 2) continue;
      for (const auto& p : all_flavours(d, nf)) {
        Flavour fl = Flavour::make(d, p);
        CAPTURE(fl.to_string());
        CHECK(euler_characteristic(enumerate_strata(fl)) == 1);
      }
    }
}

TEST_CASE("face poset intervals of length two are diamonds") {
  for (int d = 1; d <= 4; ++d)
    for (int nf = 0; nf <= 2; ++nf) {
      if (d + nf < 2) continue;
      for (const auto& p : all_flavours(d, nf)) {
        Flavour fl = Flavour::make(d, p);
        auto poset = face_poset(fl);
        std::map<std::size_t, std::set<std::size_t>> up;
        for (const auto& [a, b] : poset.covers) up[a].insert(b);
        std::map<std::pair<std::size_t, std::size_t>, int> middle;
        for (const auto& [a, bs] : up)
          for (auto b : bs)
            for (auto c : up[b]) ++middle[{a, c}];
        CAPTURE(fl.to_string());
        for (const auto& [ac, n] : middle) CHECK(n == 2);
      }
    }
}

TEST_CASE("covers are faces and differ by one codimension") {
  auto poset = face_poset(Flavour::make(3, {1, 3}));
  for (const auto& [a, b] : poset.covers) {
    CHECK(poset.strata[a].codim() == poset.strata[b].codim() + 1);
    CHECK(is_face(poset.strata[a], poset.strata[b]));
  }
  CHECK(poset.to_dot().rfind("digraph", 0) == 0);
}

TEST_CASE("small spaces") {
  CHECK(f_vector(Flavour::make(1, {1})) == std::vector<std::size_t>{1});
  CHECK(f_vector(Flavour::make(1, {1, 1})) == std::vector<std::size_t>{1, 2});
  CHECK_THROWS(enumerate_strata(Flavour::make(1, {})));
  CHECK_THROWS(Flavour::make(2, {3}));
}

TEST_CASE("stability and compatibility of enumerated strata") {
  for (const auto& s : enumerate_strata(Flavour::make(3, {1, 2}))) {
    CHECK(s.stable());
    CHECK(s.compatible());
    CHECK(FDecomposition::from_shape(s.shape(), s.flavour()) == s);
  }
}

TEST_CASE("weights propagate from the leaves") {
  auto strata = enumerate_strata(Flavour::make(2, {1, 2}));
  for (const auto& s : strata) {
    auto w = propagate_weights(s, {5, 1, 2});
    CHECK(w[0][0] == 5);
  }
  CHECK_THROWS(propagate_weights(strata[0], {4, 1, 2}));
}

TEST_CASE("isotropy") {
  Flavour fl = Flavour::make(2, {1, 1});
  auto strata = enumerate_strata(fl);
  SymPartition whole{{{0, 1}}};
  whole.validate(fl);
  CHECK(fixed_strata(strata, whole).size() == 3);  // interior and the two invariant edges
  SymPartition bad{{{0}}};
  CHECK_THROWS(bad.validate(fl));
}
