#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wfloer/ainfty.hpp"
#include "wfloer/field.hpp"

namespace wfloer {

// Per-weight Floer complexes CF(w), w = 1..W, with differentials delta_w and
// continuation maps kappa_w : CF(w) -> CF(w+1).
struct TelescopeData {
  Field field = Field::rationals();
  std::vector<GradedModule> cf;     // cf[w-1]
  std::vector<SparseMap> delta;     // delta[w-1], degree +1
  std::vector<SparseMap> kappa;     // kappa[w-1], degree 0; at least W-1 entries

  int W() const { return static_cast<int>(cf.size()); }
  // Throws on delta^2 != 0 or on kappa failing to be a chain map.
  void validate() const;
};

// Reads delta (d=1, F={}) and kappa (d=1, F={1}) constants from a table.
TelescopeData telescope_data_from_table(const ChordSet& chords, const ConstantsTable& table, int W);

class NotAChainMap : public std::runtime_error {
 public:
  NotAChainMap(int w, const std::string& witness)
      : std::runtime_error("kappa_" + std::to_string(w) + " is not a chain map at " + witness) {}
};

enum class TelescopeMode { full, truncated };  // truncated: the top weight has no q part

class TelescopeComplex {
 public:
  TelescopeComplex(const TelescopeData& data, int lo, int hi, TelescopeMode mode);

  const GradedModule& module() const { return module_; }
  const SparseMap& differential() const { return d_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  TelescopeMode mode() const { return mode_; }
  std::optional<std::size_t> index(int w, std::size_t gen, bool q) const;
  // Generators of weight >= nu.
  std::vector<std::size_t> filtration(int nu) const;
  std::map<int, std::size_t> homology() const;

 private:
  int lo_, hi_;
  TelescopeMode mode_;
  GradedModule module_;
  SparseMap d_;
  std::map<std::tuple<int, std::size_t, bool>, std::size_t> index_;
};

TelescopeComplex build_telescope(const TelescopeData& data, int W, TelescopeMode mode);

struct DegreeComparison {
  std::size_t h_sub = 0, h_total = 0, induced_rank = 0;
  bool iso() const { return h_sub == h_total && induced_rank == h_total; }
};

// Homology of the subcomplex spanned by `sub` against the whole complex, and
// the rank of the induced map, degree by degree.
std::map<int, DegreeComparison> compare_inclusion(const GradedModule& module, const SparseMap& d,
                                                  const std::vector<std::size_t>& sub);

struct LemmaReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// Inclusion of the weight >= nu part into the window [1..W] in the given mode.
LemmaReport check_partial_forget(const TelescopeData& data, int W, int nu, TelescopeMode mode = TelescopeMode::truncated);
// Each C^nu / C^{nu+1} (the cone of the identity of CF(nu)) is acyclic.
LemmaReport check_quotients_acyclic(const TelescopeData& data, int W);
// (a) CF(w) into C_w is a quasi-isomorphism for w <= W; (b) the homotopy
// a -> (-1)^deg(a) q a realizes kappa ~ inclusion exactly.
LemmaReport check_homotopy_limit(const TelescopeData& data, int W);

struct WindingRestriction {
  ChordSet chords;
  ConstantsTable table;
  std::vector<ConstantKey> non_conserving;
  std::vector<ConstantKey> escaping;  // inputs in the span, output outside
  bool closed() const { return non_conserving.empty() && escaping.empty(); }
};

WindingRestriction winding_subcomplex(const ChordSet& chords, const ConstantsTable& table, int label = 0);

}  // namespace wfloer
