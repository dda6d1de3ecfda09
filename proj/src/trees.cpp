#include "wfloer/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace wfloer {

Flavour Flavour::make(int d, std::vector<int> labels) {
  if (d < 1) throw std::invalid_argument("flavour needs d >= 1");
  for (int p : labels)
    if (p < 1 || p > d) throw std::invalid_argument("sprinkle label " + std::to_string(p) + " outside 1.." + std::to_string(d));
  return Flavour{d, std::move(labels)};
}

Flavour Flavour::from_set(int d, const std::vector<int>& F) {
  std::vector<int> s = F;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("repeated element in F");
  return make(d, s);
}

bool Flavour::injective() const {
  std::set<int> s(labels.begin(), labels.end());
  return s.size() == labels.size();
}

std::string Flavour::to_string() const {
  std::string out = "d=" + std::to_string(d) + " p=(";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
  return out + ")";
}

RibbonTree RibbonTree::from_shape(const Shape& s) {
  if (s.is_leaf()) throw std::invalid_argument("a ribbon tree needs at least one vertex");
  RibbonTree t;
  std::function<int(const Shape&, int)> walk = [&](const Shape& v, int parent) {
    int id = static_cast<int>(t.children_.size());
    t.children_.emplace_back();
    t.parent_.push_back(parent);
    if (v.kids.empty()) throw std::invalid_argument("vertex without positive flags");
    for (const auto& k : v.kids) {
      if (k.is_leaf()) {
        t.children_[id].push_back({true, k.leaf});
        ++t.leaves_;
        if (k.leaf != t.leaves_) throw std::invalid_argument("leaves must be labelled 1..d in planar order");
        t.leaf_parent_.resize(k.leaf + 1, -1);
        t.leaf_parent_[k.leaf] = id;
      } else {
        int c = walk(k, id);
        t.children_[id].push_back({false, c});
      }
    }
    return id;
  };
  walk(s, -1);
  return t;
}

std::vector<int> RibbonTree::finite_edges() const {
  std::vector<int> e;
  for (int v = 1; v < num_vertices(); ++v) e.push_back(v);
  return e;
}

std::vector<int> RibbonTree::leaves_below(int v) const {
  std::vector<int> out;
  for (const auto& c : children_.at(v)) {
    if (c.leaf) {
      out.push_back(c.index);
    } else {
      auto sub = leaves_below(c.index);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

std::vector<int> RibbonTree::path_to_leaf(int leaf) const {
  if (leaf < 1 || leaf > leaves_) throw std::out_of_range("no leaf " + std::to_string(leaf));
  std::vector<int> path;
  for (int v = leaf_parent_[leaf]; v >= 0; v = parent_[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

int RibbonTree::slot_towards_leaf(int v, int leaf) const {
  const auto& ch = children_.at(v);
  for (std::size_t k = 0; k < ch.size(); ++k) {
    if (ch[k].leaf && ch[k].index == leaf) return static_cast<int>(k) + 1;
    if (!ch[k].leaf) {
      auto below = leaves_below(ch[k].index);
      if (std::find(below.begin(), below.end(), leaf) != below.end()) return static_cast<int>(k) + 1;
    }
  }
  throw std::invalid_argument("leaf " + std::to_string(leaf) + " is not above vertex " + std::to_string(v));
}

namespace {

std::string encode_shape(const Shape& s) {
  if (s.is_leaf()) return std::to_string(s.leaf);
  std::string out = "(";
  if (!s.part.empty()) {
    out += "{";
    for (std::size_t i = 0; i < s.part.size(); ++i) out += (i ? "," : "") + std::string("f") + std::to_string(s.part[i] + 1);
    out += "}";
  }
  for (std::size_t i = 0; i < s.kids.size(); ++i) out += (i ? " " : "") + encode_shape(s.kids[i]);
  return out + ")";
}

}  // namespace

FDecomposition::FDecomposition(RibbonTree tree, Flavour flavour, std::vector<std::vector<int>> parts)
    : tree_(std::move(tree)), flavour_(std::move(flavour)), parts_(std::move(parts)) {
  if (static_cast<int>(parts_.size()) != tree_.num_vertices()) throw std::invalid_argument("one part per vertex required");
  if (tree_.num_leaves() != flavour_.d) throw std::invalid_argument("tree leaves differ from flavour d");
  std::vector<int> seen(flavour_.size(), 0);
  for (auto& p : parts_) {
    std::sort(p.begin(), p.end());
    for (int f : p) {
      if (f < 0 || f >= static_cast<int>(flavour_.size())) throw std::invalid_argument("unknown sprinkle");
      if (seen[f]++) throw std::invalid_argument("sprinkle assigned twice");
    }
  }
  for (int c : seen)
    if (!c) throw std::invalid_argument("sprinkle not assigned");
  code_ = encode_shape(shape());
}

FDecomposition FDecomposition::from_shape(const Shape& s, const Flavour& flavour) {
  RibbonTree t = RibbonTree::from_shape(s);
  std::vector<std::vector<int>> parts;
  std::function<void(const Shape&)> walk = [&](const Shape& v) {
    parts.push_back(v.part);
    for (const auto& k : v.kids)
      if (!k.is_leaf()) walk(k);
  };
  walk(s);
  return FDecomposition(std::move(t), flavour, std::move(parts));
}

Shape FDecomposition::shape() const {
  std::function<Shape(int)> build = [&](int v) {
    Shape s;
    s.part = parts_[v];
    for (const auto& c : tree_.children(v)) {
      if (c.leaf) {
        Shape l;
        l.leaf = c.index;
        s.kids.push_back(l);
      } else {
        s.kids.push_back(build(c.index));
      }
    }
    return s;
  };
  return build(0);
}

bool FDecomposition::compatible() const {
  for (int v = 0; v < tree_.num_vertices(); ++v)
    for (int f : parts_[v]) {
      auto path = tree_.path_to_leaf(flavour_.labels[f]);
      if (std::find(path.begin(), path.end(), v) == path.end()) return false;
    }
  return true;
}

bool FDecomposition::stable() const {
  for (int v = 0; v < tree_.num_vertices(); ++v)
    if (tree_.valency(v) < 3 && parts_[v].empty()) return false;
  return true;
}

namespace {

using ShapeList = std::vector<std::pair<Shape, int>>;  // shape, unary vertices used

ShapeList vertex_shapes(int a, int b, int budget);

ShapeList item_shapes(int a, int b, int budget) {
  ShapeList out;
  if (a == b) {
    Shape l;
    l.leaf = a;
    out.push_back({l, 0});
  }
  auto vs = vertex_shapes(a, b, budget);
  out.insert(out.end(), vs.begin(), vs.end());
  return out;
}

// Sequences of at least `min_items` items covering [a, b].
std::vector<std::pair<std::vector<Shape>, int>> sequences(int a, int b, int budget, int min_items) {
  std::vector<std::pair<std::vector<Shape>, int>> out;
  if (a > b) {
    if (min_items <= 0) out.push_back({{}, 0});
    return out;
  }
  for (int e = a; e <= b; ++e) {
    if (e == b && min_items > 1) break;
    for (auto& [first, used] : item_shapes(a, e, budget)) {
      for (auto& [rest, used2] : sequences(e + 1, b, budget - used, min_items - 1)) {
        if (e == b && !rest.empty()) continue;
        std::vector<Shape> seq{first};
        seq.insert(seq.end(), rest.begin(), rest.end());
        out.push_back({std::move(seq), used + used2});
      }
    }
  }
  return out;
}

ShapeList vertex_shapes(int a, int b, int budget) {
  ShapeList out;
  for (auto& [seq, used] : sequences(a, b, budget, 2)) {
    Shape s;
    s.kids = std::move(seq);
    out.push_back({std::move(s), used});
  }
  if (budget >= 1) {
    for (auto& [item, used] : item_shapes(a, b, budget - 1)) {
      Shape s;
      s.kids.push_back(std::move(item));
      out.push_back({std::move(s), used + 1});
    }
  }
  return out;
}

}  // namespace

std::vector<FDecomposition> enumerate_stable_decompositions(const Flavour& flavour) {
  const int n = static_cast<int>(flavour.size());
  if (flavour.d + n < 2) throw std::invalid_argument("unstable: d + |F| < 2");
  std::vector<FDecomposition> out;
  for (auto& [shape, used] : vertex_shapes(1, flavour.d, n)) {
    (void)used;
    RibbonTree t = RibbonTree::from_shape(shape);
    std::vector<std::vector<int>> paths;
    for (int f = 0; f < n; ++f) paths.push_back(t.path_to_leaf(flavour.labels[f]));
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      std::vector<std::vector<int>> parts(t.num_vertices());
      for (int f = 0; f < n; ++f) parts[paths[f][choice[f]]].push_back(f);
      FDecomposition dec(t, flavour, parts);
      if (dec.stable()) out.push_back(std::move(dec));
      int k = 0;
      while (k < n && ++choice[k] == paths[k].size()) choice[k++] = 0;
      if (k == n) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexFlavour> induce_flavours(const FDecomposition& dec) {
  const auto& t = dec.tree();
  std::vector<VertexFlavour> out;
  for (int v = 0; v < t.num_vertices(); ++v) {
    VertexFlavour vf;
    vf.sprinkles = dec.part(v);
    std::vector<int> labels;
    for (int f : vf.sprinkles) labels.push_back(t.slot_towards_leaf(v, dec.flavour().labels[f]));
    vf.flavour = Flavour::make(static_cast<int>(t.children(v).size()), labels);
    out.push_back(std::move(vf));
  }
  return out;
}

std::vector<std::vector<int>> propagate_weights(const FDecomposition& dec, const std::vector<int>& w) {
  const auto& t = dec.tree();
  if (static_cast<int>(w.size()) != t.num_leaves() + 1) throw std::invalid_argument("weight vector must have d + 1 entries");
  std::vector<std::vector<int>> out(t.num_vertices());
  std::function<int(int)> walk = [&](int v) {
    std::vector<int> ws{0};
    int total = static_cast<int>(dec.part(v).size());
    for (const auto& c : t.children(v)) {
      int x = c.leaf ? w[c.index] : walk(c.index);
      ws.push_back(x);
      total += x;
    }
    ws[0] = total;
    out[v] = ws;
    return total;
  };
  int root = walk(0);
  if (root != w[0])
    throw std::invalid_argument("weight law violated: w^0 = " + std::to_string(w[0]) + " but leaves force " + std::to_string(root));
  return out;
}

FDecomposition contract(const FDecomposition& dec, const std::vector<int>& edges) {
  std::set<int> cut(edges.begin(), edges.end());
  for (int e : cut)
    if (e <= 0 || e >= dec.tree().num_vertices()) throw std::invalid_argument("not a finite edge: " + std::to_string(e));
  const auto& t = dec.tree();
  // Returns the items this vertex contributes to its parent.
  std::function<std::vector<Shape>(int, std::vector<int>&)> build = [&](int v, std::vector<int>& absorbed) {
    Shape s;
    s.part = dec.part(v);
    for (const auto& c : t.children(v)) {
      if (c.leaf) {
        Shape l;
        l.leaf = c.index;
        s.kids.push_back(l);
        continue;
      }
      std::vector<int> sub_part;
      auto items = build(c.index, sub_part);
      s.kids.insert(s.kids.end(), items.begin(), items.end());
      s.part.insert(s.part.end(), sub_part.begin(), sub_part.end());
    }
    if (v != 0 && cut.count(v)) {
      absorbed.insert(absorbed.end(), s.part.begin(), s.part.end());
      return s.kids;
    }
    return std::vector<Shape>{s};
  };
  std::vector<int> none;
  auto root = build(0, none);
  std::sort(root[0].part.begin(), root[0].part.end());
  return FDecomposition::from_shape(root[0], dec.flavour());
}

FDecomposition relabel_sprinkles(const FDecomposition& dec, const std::vector<int>& perm) {
  const auto& fl = dec.flavour();
  if (perm.size() != fl.size()) throw std::invalid_argument("permutation size differs from |F|");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != static_cast<int>(i)) throw std::invalid_argument("not a permutation");
  for (std::size_t f = 0; f < perm.size(); ++f)
    if (fl.labels[perm[f]] != fl.labels[f]) throw std::invalid_argument("permutation does not preserve the flavour");
  std::vector<std::vector<int>> parts;
  for (int v = 0; v < dec.tree().num_vertices(); ++v) {
    std::vector<int> p;
    for (int f : dec.part(v)) p.push_back(perm[f]);
    parts.push_back(p);
  }
  return FDecomposition(dec.tree(), fl, parts);
}

}  // namespace wfloer
