#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfloer/ainfty.hpp"

namespace wfloer {

class MissingAction : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct ActionEntry {
  std::optional<mpq_class> action;
  Location location = Location::inside;
  int weight = 1;
};

struct ActionProfile {
  std::map<std::string, ActionEntry> entries;

  // Chords without a location are rejected; outside chords need an action.
  static ActionProfile from_chords(const ChordSet& chords);
  const mpq_class& action(const std::string& id) const;  // throws MissingAction
  const ActionEntry& at(const std::string& id) const;
};

mpq_class e_top(const ActionProfile& profile, const std::string& x0, const std::vector<std::string>& inputs);

struct Feasibility {
  bool feasible = false;
  bool trivial_only = false;  // x^0 equals the single input: only the constant solution
};

Feasibility feasible(const ActionProfile& profile, const std::string& x0, const std::vector<std::string>& inputs);

ActionProfile rescale_action(const ActionProfile& profile, const mpq_class& rho);

// Smallest nu in [1, max weight] such that every outside chord of weight >= nu
// has positive action.
int nu_threshold(const ActionProfile& profile);

// Largest rho* <= 1 below which every tuple of chords with the given input
// weights and at least one outside entry has negative rescaled energy.
// weights = (w^0, ..., w^d) must satisfy the weight law for F.
mpq_class rho_threshold(const ActionProfile& profile, int d, const std::vector<int>& F, const std::vector<int>& weights,
                        const std::string& x0);

// Cascade constants plus the formal points (identity terms) at inside chords.
struct QConstantsTable {
  ConstantsTable table;
  std::set<std::string> formal_points;

  // One formal point per inside chord of the target that also exists in the source.
  static std::set<std::string> all_formal_points(const ChordSet& source, const ChordSet& target);
  ConstantsTable effective(const ChordSet& source) const;
};

ValidationReport validate_q(const QConstantsTable& q, const ChordSet& source, const ChordSet& target);

AInfinityMorphism assemble_F(const QConstantsTable& q, const ChordSet& source, const ChordSet& target,
                             int min_weight = 1);

struct QResidual {
  std::string relation;  // "q0" or "q1"
  int weight = 0;
  std::string x0, x1;
  Scalar value;
};

struct QRelationReport {
  std::vector<QResidual> residuals;
  std::size_t evaluated = 0;
  bool ok() const { return residuals.empty(); }
  std::vector<std::string> lines() const;
};

QRelationReport check_q_relations(const ConstantsTable& m, const ChordSet& source, const ConstantsTable& m_in,
                                  const ChordSet& target, const QConstantsTable& q);

struct AnnulusReport {
  bool obstruction = false;
  std::vector<std::string> mismatches;
};

AnnulusReport annulus_obstruction(const std::vector<int>& blocks_in, const std::vector<int>& blocks_out);

}  // namespace wfloer
