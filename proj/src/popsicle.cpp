#include "wfloer/popsicle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wfloer {

int popsicle_dimension(const Flavour& flavour) {
  return flavour.d - 2 + static_cast<int>(flavour.size());
}

std::vector<FDecomposition> enumerate_strata(const Flavour& flavour) {
  return enumerate_stable_decompositions(flavour);
}

std::vector<std::size_t> f_vector(const std::vector<FDecomposition>& strata) {
  std::vector<std::size_t> f;
  for (const auto& s : strata) {
    if (static_cast<int>(f.size()) <= s.codim()) f.resize(s.codim() + 1, 0);
    f[s.codim()]++;
  }
  return f;
}

std::vector<std::size_t> f_vector(const Flavour& flavour) { return f_vector(enumerate_strata(flavour)); }

long euler_characteristic(const std::vector<FDecomposition>& strata) {
  long chi = 0;
  for (const auto& s : strata) {
    int dim = popsicle_dimension(s.flavour()) - s.codim();
    chi += (dim % 2 == 0) ? 1 : -1;
  }
  return chi;
}

bool is_face(const FDecomposition& face, const FDecomposition& stratum) {
  if (!(face.flavour() == stratum.flavour())) return false;
  int k = face.codim() - stratum.codim();
  if (k < 0) return false;
  auto edges = face.tree().finite_edges();
  const int n = static_cast<int>(edges.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> sel;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sel.push_back(edges[i]);
    if (contract(face, sel) == stratum) return true;
  }
  return false;
}

FacePoset face_poset(const Flavour& flavour) {
  FacePoset P;
  P.strata = enumerate_strata(flavour);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < P.strata.size(); ++i) index[P.strata[i].encode()] = i;
  for (std::size_t i = 0; i < P.strata.size(); ++i) {
    std::set<std::size_t> up;
    for (int e : P.strata[i].tree().finite_edges()) {
      auto c = contract(P.strata[i], {e});
      auto it = index.find(c.encode());
      if (it == index.end()) throw std::logic_error("contraction left the stratum set: " + c.encode());
      up.insert(it->second);
    }
    for (auto j : up) P.covers.push_back({i, j});
  }
  return P;
}

std::string FacePoset::to_dot() const {
  std::string out = "digraph strata {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < strata.size(); ++i)
    out += "  s" + std::to_string(i) + " [label=\"" + strata[i].encode() + "\\ncodim " +
           std::to_string(strata[i].codim()) + "\"];\n";
  for (const auto& [a, b] : covers) out += "  s" + std::to_string(a) + " -> s" + std::to_string(b) + ";\n";
  return out + "}\n";
}

std::vector<std::vector<int>> symmetry_group(const Flavour& flavour) {
  std::vector<int> perm(flavour.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t f = 0; f < perm.size(); ++f) ok = ok && flavour.labels[perm[f]] == flavour.labels[f];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FDecomposition sym_act(const FDecomposition& dec, const std::vector<int>& perm) {
  return relabel_sprinkles(dec, perm);
}

std::vector<std::vector<std::size_t>> orbits(const std::vector<FDecomposition>& strata,
                                             const std::vector<std::vector<int>>& group) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < strata.size(); ++i) index[strata[i].encode()] = i;
  std::vector<bool> done(strata.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    if (done[i]) continue;
    std::set<std::size_t> orbit;
    for (const auto& g : group) {
      auto it = index.find(sym_act(strata[i], g).encode());
      if (it == index.end()) throw std::logic_error("group action left the stratum set");
      orbit.insert(it->second);
    }
    for (auto j : orbit) done[j] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

void SymPartition::validate(const Flavour& flavour) const {
  std::vector<int> seen(flavour.size(), 0);
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part in partition");
    for (int f : part) {
      if (f < 0 || f >= static_cast<int>(flavour.size())) throw std::invalid_argument("unknown sprinkle in partition");
      if (seen[f]++) throw std::invalid_argument("sprinkle in two parts");
      if (flavour.labels[f] != flavour.labels[part[0]]) throw std::invalid_argument("p is not constant on a part");
    }
  }
  for (int c : seen)
    if (!c) throw std::invalid_argument("partition does not cover F");
}

int isotropy_codim(const SymPartition& P) {
  int c = 0;
  for (const auto& part : P.parts) c += static_cast<int>(part.size()) - 1;
  return c;
}

std::vector<std::size_t> fixed_strata(const std::vector<FDecomposition>& strata, const SymPartition& P) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    P.validate(strata[i].flavour());
    bool fixed = true;
    for (const auto& part : P.parts)
      for (std::size_t a = 1; a < part.size() && fixed; ++a) {
        std::vector<int> perm(strata[i].flavour().size());
        for (std::size_t f = 0; f < perm.size(); ++f) perm[f] = static_cast<int>(f);
        std::swap(perm[part[0]], perm[part[a]]);
        fixed = sym_act(strata[i], perm) == strata[i];
      }
    if (fixed) out.push_back(i);
  }
  return out;
}

int vdim(const Flavour& flavour, int deg0, const std::vector<int>& degs) {
  if (static_cast<int>(degs.size()) != flavour.d) throw std::invalid_argument("need d input degrees");
  int s = popsicle_dimension(flavour) + deg0;
  for (int x : degs) s -= x;
  return s;
}

}  // namespace wfloer
