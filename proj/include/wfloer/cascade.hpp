#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wfloer/trees.hpp"

namespace wfloer {

int cascade_dimension(const Flavour& flavour);

// Components of Q^{d,p}, one per stable decomposition.
std::vector<FDecomposition> enumerate_components(const Flavour& flavour);

// Edges in E carry equal parameters on both ends; those in Ebar (a subset of E)
// are additionally collapsed.
struct CascadeStratum {
  FDecomposition component;
  std::vector<int> E;
  std::vector<int> Ebar;

  int codim() const { return static_cast<int>(E.size()); }
  std::string encode() const;
  friend bool operator==(const CascadeStratum& a, const CascadeStratum& b) {
    return a.component == b.component && a.E == b.E && a.Ebar == b.Ebar;
  }
};

std::vector<CascadeStratum> enumerate_cascade_strata(const Flavour& flavour, int max_codim);

// The decomposition obtained by contracting Ebar.
FDecomposition collapse(const CascadeStratum& s);

// Codimension one strata come in pairs differing only in Ebar.
CascadeStratum partner(const CascadeStratum& s);

struct CausalRelation {
  int lower;  // vertex nearer the root
  int upper;
  bool equal;
};

// rho_lower <= rho_upper along each finite edge; equality exactly on E.
std::vector<CausalRelation> causal_chain(const CascadeStratum& s);

// Faces of {0 < rho_root, rho_parent <= rho_child, rho <= 1}: partitions of the
// vertices plus a top node (rho = 1) into blocks of equal value.
struct OrderFace {
  std::vector<int> block_of;  // size num_vertices + 1, last entry is the top node
  int codim = 0;
};

std::vector<OrderFace> order_polytope_faces(const FDecomposition& component);
std::vector<std::size_t> order_polytope_face_counts(const FDecomposition& component);

struct EndFactor {
  Flavour flavour;
  std::vector<int> sprinkles;  // ambient sprinkle ids in the order of flavour.labels
  std::vector<int> weights;    // w^0, w^1, ..., w^d
  bool formal_identity() const { return flavour.d == 1 && flavour.labels.empty(); }
};

struct EndPattern {
  // breaking: a popsicle at the output fed by one cascade per block of inputs.
  // parameter_one: a cascade with one popsicle inserted at inputs i..i+d_- - 1.
  enum class Kind { breaking, parameter_one } kind;
  EndFactor outer;
  std::vector<EndFactor> inner;
  int first_input = 1;
  bool symmetric() const;  // some factor has a non-injective flavour
  std::string describe() const;
};

// Boundary strata of the one-dimensional cascade moduli spaces for (d, p, w).
std::vector<EndPattern> classify_ends(const Flavour& flavour, const std::vector<int>& weights);

}  // namespace wfloer
