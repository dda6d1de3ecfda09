#pragma once

#include <compare>
#include <string>
#include <vector>

namespace wfloer {

// Assignment f -> p_f of sprinkles to positive ends. Sprinkle ids are 0-based,
// leaf labels 1-based.
struct Flavour {
  int d = 0;
  std::vector<int> labels;

  static Flavour make(int d, std::vector<int> labels);
  static Flavour from_set(int d, const std::vector<int>& F);  // injective, p_f = f-th element
  std::size_t size() const { return labels.size(); }
  bool injective() const;
  std::string to_string() const;
  friend auto operator<=>(const Flavour&, const Flavour&) = default;
};

// Planar rooted tree with nested children; leaves carry their label.
struct Shape {
  int leaf = 0;  // > 0 for a leaf
  std::vector<Shape> kids;
  std::vector<int> part;  // sprinkles attached to this vertex
  bool is_leaf() const { return leaf > 0; }
};

class RibbonTree {
 public:
  struct Child {
    bool leaf;
    int index;  // leaf label, or vertex id
    friend auto operator<=>(const Child&, const Child&) = default;
  };

  // Vertices are numbered in preorder; vertex 0 carries the root stub.
  static RibbonTree from_shape(const Shape& s);

  int num_vertices() const { return static_cast<int>(children_.size()); }
  int num_leaves() const { return leaves_; }
  int parent(int v) const { return parent_.at(v); }
  const std::vector<Child>& children(int v) const { return children_.at(v); }
  int valency(int v) const { return 1 + static_cast<int>(children_.at(v).size()); }
  // Finite edges are named by their far endpoint.
  std::vector<int> finite_edges() const;
  std::vector<int> leaves_below(int v) const;
  std::vector<int> path_to_leaf(int leaf) const;
  // 1-based positive flag of v leading towards the leaf.
  int slot_towards_leaf(int v, int leaf) const;

  friend bool operator==(const RibbonTree&, const RibbonTree&) = default;

 private:
  int leaves_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<Child>> children_;
  std::vector<int> leaf_parent_;  // indexed by label
};

struct VertexFlavour {
  std::vector<int> sprinkles;
  Flavour flavour;
};

class FDecomposition {
 public:
  FDecomposition(RibbonTree tree, Flavour flavour, std::vector<std::vector<int>> parts);
  static FDecomposition from_shape(const Shape& s, const Flavour& flavour);

  const RibbonTree& tree() const { return tree_; }
  const Flavour& flavour() const { return flavour_; }
  const std::vector<int>& part(int v) const { return parts_.at(v); }
  int codim() const { return tree_.num_vertices() - 1; }

  bool compatible() const;
  bool stable() const;
  Shape shape() const;
  // Canonical planar bracket encoding, e.g. "({f2}({f1}1 2))".
  const std::string& encode() const { return code_; }

  friend bool operator==(const FDecomposition& a, const FDecomposition& b) { return a.code_ == b.code_; }
  friend auto operator<=>(const FDecomposition& a, const FDecomposition& b) {
    if (auto c = a.codim() <=> b.codim(); c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  RibbonTree tree_;
  Flavour flavour_;
  std::vector<std::vector<int>> parts_;
  std::string code_;
};

// All stable compatible decompositions, sorted by codimension then encoding.
std::vector<FDecomposition> enumerate_stable_decompositions(const Flavour& flavour);

std::vector<VertexFlavour> induce_flavours(const FDecomposition& dec);

// Per vertex, the weights (w^0, w^1, ...) of its flags. w has size d + 1.
std::vector<std::vector<int>> propagate_weights(const FDecomposition& dec, const std::vector<int>& w);

// Contracts the listed finite edges, merging sprinkle parts.
FDecomposition contract(const FDecomposition& dec, const std::vector<int>& edges);

// Renames sprinkle f to perm[f].
FDecomposition relabel_sprinkles(const FDecomposition& dec, const std::vector<int>& perm);

}  // namespace wfloer
