#include "wfloer/cascade.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wfloer {

int cascade_dimension(const Flavour& flavour) { return flavour.d - 1 + static_cast<int>(flavour.size()); }

std::vector<FDecomposition> enumerate_components(const Flavour& flavour) {
  if (flavour.d + static_cast<int>(flavour.size()) < 2) return {};
  return enumerate_stable_decompositions(flavour);
}

std::string CascadeStratum::encode() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  return component.encode() + " E=" + list(E) + " Ebar=" + list(Ebar);
}

std::vector<CascadeStratum> enumerate_cascade_strata(const Flavour& flavour, int max_codim) {
  std::vector<CascadeStratum> out;
  for (const auto& comp : enumerate_components(flavour)) {
    auto edges = comp.tree().finite_edges();
    const int n = static_cast<int>(edges.size());
    for (int e = 0; e < (1 << n); ++e) {
      if (__builtin_popcount(e) > max_codim) continue;
      for (int b = e;; b = (b - 1) & e) {
        CascadeStratum s{comp, {}, {}};
        for (int i = 0; i < n; ++i) {
          if (e >> i & 1) s.E.push_back(edges[i]);
          if (b >> i & 1) s.Ebar.push_back(edges[i]);
        }
        out.push_back(std::move(s));
        if (b == 0) break;
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.codim() != b.codim()) return a.codim() < b.codim();
    return a.encode() < b.encode();
  });
  return out;
}

FDecomposition collapse(const CascadeStratum& s) { return contract(s.component, s.Ebar); }

CascadeStratum partner(const CascadeStratum& s) {
  if (s.E.size() != 1) throw std::invalid_argument("partner is defined on codimension one strata");
  CascadeStratum p = s;
  p.Ebar = s.Ebar.empty() ? s.E : std::vector<int>{};
  return p;
}

std::vector<CausalRelation> causal_chain(const CascadeStratum& s) {
  std::set<int> E(s.E.begin(), s.E.end());
  for (int e : s.Ebar)
    if (!E.count(e)) throw std::invalid_argument("Ebar must be contained in E");
  std::vector<CausalRelation> out;
  for (int v : s.component.tree().finite_edges())
    out.push_back({s.component.tree().parent(v), v, E.count(v) > 0});
  return out;
}

namespace {

int find(std::vector<int>& uf, int x) { return uf[x] == x ? x : uf[x] = find(uf, uf[x]); }

}  // namespace

std::vector<OrderFace> order_polytope_faces(const FDecomposition& component) {
  const auto& t = component.tree();
  const int n = t.num_vertices();
  const int top = n;
  std::vector<std::pair<int, int>> hasse;  // (smaller, larger)
  for (int v = 1; v < n; ++v) hasse.push_back({t.parent(v), v});
  for (int v = 0; v < n; ++v) {
    bool has_vertex_child = false;
    for (const auto& c : t.children(v)) has_vertex_child = has_vertex_child || !c.leaf;
    if (!has_vertex_child) hasse.push_back({v, top});
  }
  const int m = static_cast<int>(hasse.size());
  std::set<std::vector<int>> seen;
  std::vector<OrderFace> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> uf(n + 1);
    std::iota(uf.begin(), uf.end(), 0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) uf[find(uf, hasse[i].first)] = find(uf, hasse[i].second);
    std::map<int, int> label;
    std::vector<int> block(n + 1);
    for (int x = 0; x <= n; ++x) {
      int r = find(uf, x);
      if (!label.count(r)) label[r] = static_cast<int>(label.size());
      block[x] = label[r];
    }
    if (seen.count(block)) continue;
    const int nb = static_cast<int>(label.size());
    std::vector<std::set<int>> adj(nb);
    for (const auto& [a, b] : hasse)
      if (block[a] != block[b]) adj[block[a]].insert(block[b]);
    std::vector<int> state(nb, 0);
    std::function<bool(int)> cyclic = [&](int x) {
      state[x] = 1;
      for (int y : adj[x])
        if (state[y] == 1 || (state[y] == 0 && cyclic(y))) return true;
      state[x] = 2;
      return false;
    };
    bool bad = false;
    for (int x = 0; x < nb && !bad; ++x)
      if (state[x] == 0) bad = cyclic(x);
    if (bad) continue;
    seen.insert(block);
    out.push_back({block, n + 1 - nb});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.codim < b.codim; });
  return out;
}

std::vector<std::size_t> order_polytope_face_counts(const FDecomposition& component) {
  std::vector<std::size_t> counts;
  for (const auto& f : order_polytope_faces(component)) {
    if (static_cast<int>(counts.size()) <= f.codim) counts.resize(f.codim + 1, 0);
    counts[f.codim]++;
  }
  return counts;
}

bool EndPattern::symmetric() const {
  if (!outer.flavour.injective()) return true;
  for (const auto& f : inner)
    if (!f.flavour.injective()) return true;
  return false;
}

std::string EndPattern::describe() const {
  auto factor = [](const EndFactor& f, const char* name) {
    std::string s = std::string(name) + "^{" + std::to_string(f.flavour.d) + ",{";
    for (std::size_t i = 0; i < f.sprinkles.size(); ++i)
      s += (i ? "," : "") + std::string("f") + std::to_string(f.sprinkles[i] + 1) + "->" +
           std::to_string(f.flavour.labels[i]);
    s += "},w=(";
    for (std::size_t i = 0; i < f.weights.size(); ++i) s += (i ? "," : "") + std::to_string(f.weights[i]);
    return s + ")}";
  };
  std::string s;
  if (kind == Kind::breaking) {
    s = "breaking " + factor(outer, "R");
    for (const auto& f : inner) s += " x " + factor(f, "Q");
  } else {
    s = "rho=1 " + factor(outer, "Q") + " x " + factor(inner.at(0), "R") + " at " + std::to_string(first_input);
  }
  return s;
}

std::vector<EndPattern> classify_ends(const Flavour& flavour, const std::vector<int>& w) {
  const int d = flavour.d;
  const int nf = static_cast<int>(flavour.size());
  if (static_cast<int>(w.size()) != d + 1) throw std::invalid_argument("weights must have d + 1 entries");
  if (w[0] != std::accumulate(w.begin() + 1, w.end(), 0) + nf) throw std::invalid_argument("weight law violated");
  std::vector<EndPattern> out;

  // Breaking: compositions of d into blocks; each sprinkle goes to the outer
  // popsicle (labelled by its block) or to the cascade of its block.
  std::function<void(int, std::vector<int>&)> comps = [&](int start, std::vector<int>& blocks) {
    if (start > d) {
      const int l = static_cast<int>(blocks.size());
      std::vector<int> block_of(d + 1);
      {
        int k = 1;
        for (int j = 0; j < l; ++j)
          for (int c = 0; c < blocks[j]; ++c) block_of[k++] = j;
      }
      for (int mask = 0; mask < (1 << nf); ++mask) {
        EndPattern p{EndPattern::Kind::breaking, {}, {}, 1};
        std::vector<int> outer_labels, outer_sprinkles;
        std::vector<std::vector<int>> in_labels(l), in_sprinkles(l);
        std::vector<int> first(l);
        {
          int k = 1;
          for (int j = 0; j < l; ++j) {
            first[j] = k;
            k += blocks[j];
          }
        }
        for (int f = 0; f < nf; ++f) {
          int j = block_of[flavour.labels[f]];
          if (mask >> f & 1) {
            outer_sprinkles.push_back(f);
            outer_labels.push_back(j + 1);
          } else {
            in_sprinkles[j].push_back(f);
            in_labels[j].push_back(flavour.labels[f] - first[j] + 1);
          }
        }
        std::vector<int> outer_w{w[0]};
        for (int j = 0; j < l; ++j) {
          EndFactor q;
          q.flavour = Flavour::make(blocks[j], in_labels[j]);
          q.sprinkles = in_sprinkles[j];
          int w0 = static_cast<int>(in_sprinkles[j].size());
          q.weights.push_back(0);
          for (int c = 0; c < blocks[j]; ++c) {
            q.weights.push_back(w[first[j] + c]);
            w0 += w[first[j] + c];
          }
          q.weights[0] = w0;
          outer_w.push_back(w0);
          p.inner.push_back(std::move(q));
        }
        p.outer.flavour = Flavour::make(l, outer_labels);
        p.outer.sprinkles = outer_sprinkles;
        p.outer.weights = outer_w;
        out.push_back(std::move(p));
      }
      return;
    }
    for (int len = 1; start + len - 1 <= d; ++len) {
      blocks.push_back(len);
      comps(start + len, blocks);
      blocks.pop_back();
    }
  };
  std::vector<int> blocks;
  comps(1, blocks);

  // Parameter one: a popsicle on inputs i..i+dm-1; sprinkles pointing into
  // that range may sit on it.
  for (int dm = 1; dm <= d; ++dm) {
    for (int i = 1; i + dm - 1 <= d; ++i) {
      std::vector<int> eligible;
      for (int f = 0; f < nf; ++f)
        if (flavour.labels[f] >= i && flavour.labels[f] <= i + dm - 1) eligible.push_back(f);
      const int ne = static_cast<int>(eligible.size());
      for (int mask = 0; mask < (1 << ne); ++mask) {
        std::set<int> lower;
        for (int k = 0; k < ne; ++k)
          if (mask >> k & 1) lower.insert(eligible[k]);
        EndPattern p{EndPattern::Kind::parameter_one, {}, {}, i};
        EndFactor r, q;
        std::vector<int> rl, ql;
        for (int f = 0; f < nf; ++f) {
          int pf = flavour.labels[f];
          if (lower.count(f)) {
            r.sprinkles.push_back(f);
            rl.push_back(pf - i + 1);
          } else {
            q.sprinkles.push_back(f);
            ql.push_back(pf < i ? pf : (pf <= i + dm - 1 ? i : pf - dm + 1));
          }
        }
        r.flavour = Flavour::make(dm, rl);
        q.flavour = Flavour::make(d - dm + 1, ql);
        int wnew = static_cast<int>(r.sprinkles.size());
        r.weights.push_back(0);
        for (int k = i; k <= i + dm - 1; ++k) {
          r.weights.push_back(w[k]);
          wnew += w[k];
        }
        r.weights[0] = wnew;
        q.weights.push_back(w[0]);
        for (int k = 1; k < i; ++k) q.weights.push_back(w[k]);
        q.weights.push_back(wnew);
        for (int k = i + dm; k <= d; ++k) q.weights.push_back(w[k]);
        p.outer = std::move(q);
        p.inner.push_back(std::move(r));
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace wfloer
