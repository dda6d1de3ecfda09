#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wfloer/trees.hpp"

namespace wfloer {

// Dimension of the popsicle moduli space R^{d,p}.
int popsicle_dimension(const Flavour& flavour);

std::vector<FDecomposition> enumerate_strata(const Flavour& flavour);

// Number of strata in each codimension.
std::vector<std::size_t> f_vector(const Flavour& flavour);
std::vector<std::size_t> f_vector(const std::vector<FDecomposition>& strata);

// Alternating count of strata by dimension; 1 for a ball.
long euler_characteristic(const std::vector<FDecomposition>& strata);

struct FacePoset {
  std::vector<FDecomposition> strata;
  // (face, coface) pairs differing by one contracted edge.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::string to_dot() const;
};

FacePoset face_poset(const Flavour& flavour);

// True if `face` lies in the closure of `stratum`.
bool is_face(const FDecomposition& face, const FDecomposition& stratum);

// Permutations of sprinkles preserving the labels, i.e. Sym^p.
std::vector<std::vector<int>> symmetry_group(const Flavour& flavour);

FDecomposition sym_act(const FDecomposition& dec, const std::vector<int>& perm);

// Orbits (as sorted index lists into `strata`) of the group action.
std::vector<std::vector<std::size_t>> orbits(const std::vector<FDecomposition>& strata,
                                             const std::vector<std::vector<int>>& group);

// Partition of F refining the fibres of p; indexes isotropy subgroups.
struct SymPartition {
  std::vector<std::vector<int>> parts;
  void validate(const Flavour& flavour) const;
};

int isotropy_codim(const SymPartition& P);

// Strata fixed by every permutation preserving the parts of P.
std::vector<std::size_t> fixed_strata(const std::vector<FDecomposition>& strata, const SymPartition& P);

int vdim(const Flavour& flavour, int deg0, const std::vector<int>& degs);

}  // namespace wfloer
