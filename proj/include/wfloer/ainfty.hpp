#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfloer/field.hpp"
#include "wfloer/signs.hpp"

namespace wfloer {

enum class Location { inside, outside };

struct Chord {
  std::string id;
  int weight = 1;
  int degree = 0;
  std::optional<mpq_class> action;
  std::optional<std::string> from, to;
  std::optional<int> winding;
  std::optional<Location> location;
};

class UnresolvedChord : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ChordSet {
 public:
  ChordSet() = default;
  explicit ChordSet(std::vector<Chord> chords);

  std::size_t add(Chord c);
  std::size_t size() const { return chords_.size(); }
  const Chord& operator[](std::size_t i) const { return chords_[i]; }
  const std::vector<Chord>& chords() const { return chords_; }
  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t index(const std::string& id) const;  // throws UnresolvedChord

 private:
  std::vector<Chord> chords_;
  std::map<std::string, std::size_t> index_;
};

// Key of a structure constant m^{d,F,w}(x^0; x^1, ..., x^d). F lists elements of
// 1..d; inputs[k-1] = x^k.
struct ConstantKey {
  int d = 0;
  std::vector<int> F;
  std::vector<int> weights;
  std::vector<std::string> inputs;
  std::string output;

  std::string to_string() const;
  friend auto operator<=>(const ConstantKey&, const ConstantKey&) = default;
};

struct ConstantsTable {
  Field field = Field::rationals();
  std::map<ConstantKey, Scalar> entries;

  void set(const ConstantKey& key, const Scalar& value);
  Scalar get(const ConstantKey& key) const;
};

struct Violation {
  ConstantKey key;
  std::string kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// rigidity_offset is 2 for the m-data and 1 for cascade q-data:
// deg(x^0) = sum deg(x^k) + offset - d - |F|.
ValidationReport validate(const ConstantsTable& table, const ChordSet& inputs, const ChordSet& outputs,
                          int rigidity_offset);
ValidationReport validate(const ConstantsTable& table, const ChordSet& chords);

class InvalidTable : public std::runtime_error {
 public:
  explicit InvalidTable(ValidationReport r);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Basis element of CF(w)[q]: a chord, possibly multiplied by q.
struct CWGenerator {
  std::size_t chord = 0;
  bool q = false;
  friend auto operator<=>(const CWGenerator&, const CWGenerator&) = default;
};

using CWElement = std::map<CWGenerator, Scalar>;

void add_to(CWElement& target, const Scalar& coeff, const CWElement& x);

struct StoredConstant {
  ConstantKey key;
  std::vector<std::size_t> inputs;
  std::size_t output = 0;
  std::uint32_t fmask = 0;  // bit k-1 set iff k in F
  Scalar value;
};

// One summand of an assembled operation: sign * constant * output, where a
// missing constant stands for the bare qb -> b term of mu^1.
struct OpTerm {
  CWGenerator output;
  Parity sign;
  std::optional<std::size_t> constant;
};

// Shared bookkeeping for operations assembled from a constants table.
class AssembledFamily {
 public:
  AssembledFamily(ChordSet inputs, ChordSet outputs, const ConstantsTable& table, int rigidity_offset);

  const ChordSet& input_chords() const { return inputs_; }
  const ChordSet& output_chords() const { return outputs_; }
  Field field() const { return field_; }
  const std::vector<StoredConstant>& constants() const { return constants_; }
  int max_arity() const;
  // Chord tuples (x^1..x^d) carrying at least one constant, in deterministic order.
  std::vector<std::vector<std::size_t>> keyed_tuples(int d) const;
  int degree(const CWGenerator& g) const { return inputs_[g.chord].degree - (g.q ? 1 : 0); }
  Scalar value(const OpTerm& t) const;

 protected:
  // first_summand(F, degs) gives the sign on the q^F input.
  std::vector<OpTerm> extended_terms(const std::vector<CWGenerator>& in, bool morphism, const SignConvention& conv) const;

  ChordSet inputs_, outputs_;
  Field field_;
  std::vector<StoredConstant> constants_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_inputs_;
};

class AInfinityAlgebra : public AssembledFamily {
 public:
  AInfinityAlgebra(ChordSet chords, const ConstantsTable& table, SignConvention conv = {});

  const ChordSet& chords() const { return inputs_; }
  const SignConvention& convention() const { return conv_; }
  // inputs[k-1] = c^k, i.e. the rightmost argument comes first.
  std::vector<OpTerm> mu_terms(const std::vector<CWGenerator>& inputs) const;
  CWElement mu(const std::vector<CWGenerator>& inputs) const;
  CWElement mu(const std::vector<CWElement>& inputs) const;

 private:
  SignConvention conv_;
};

class AInfinityMorphism : public AssembledFamily {
 public:
  // Inputs of weight below min_weight are sent to zero.
  AInfinityMorphism(ChordSet source, ChordSet target, const ConstantsTable& qtable, int min_weight = 1);

  int min_weight() const { return min_weight_; }
  std::vector<OpTerm> f_terms(const std::vector<CWGenerator>& inputs) const;
  CWElement apply(const std::vector<CWGenerator>& inputs) const;
  CWElement apply(const std::vector<CWElement>& inputs) const;

 private:
  int min_weight_;
};

// A composite mu^{d_+}(..., mu^{d_-}(...), ...) summand of the A-infinity equation.
struct CompositeTerm {
  CWGenerator output;
  Parity sign;
  std::optional<std::size_t> outer, inner;
  int slot = 0;
  int d_minus = 0;
};

std::vector<CompositeTerm> ainfty_terms(const AInfinityAlgebra& mu, const std::vector<CWGenerator>& tuple);

struct Residual {
  std::vector<CWGenerator> inputs;
  CWGenerator output;
  Scalar value;
};

struct CheckOptions {
  int max_d = 4;
  std::size_t max_generators = 64;
  // Iterate over every basis tuple instead of the tuples that can contribute.
  bool exhaustive = false;
};

struct ResidualReport {
  std::vector<Residual> residuals;
  std::size_t tuples_checked = 0;
  bool ok() const { return residuals.empty(); }
};

std::string describe(const ChordSet& chords, const std::vector<CWGenerator>& tuple);
std::string describe(const ChordSet& chords, const CWGenerator& g);

ResidualReport check_ainfty(const AInfinityAlgebra& mu, const CheckOptions& options = {});

// One term sign * m_+(outer) * m_-(inner) of the boundary relation for a cut.
struct BoundaryTerm {
  Cut cut;
  ConstantKey outer, inner;
  Parity sign;
};

// All cut/x^new patterns for the configuration; x^new ranges over chords of the
// right weight and degree.
std::vector<BoundaryTerm> boundary_terms(const ChordSet& chords, int d, const std::vector<int>& F,
                                         const std::vector<int>& weights, const std::vector<std::string>& inputs,
                                         const std::string& output, const SignConvention& conv = {});

Scalar check_boundary_relation(const ConstantsTable& table, const ChordSet& chords, int d, const std::vector<int>& F,
                               const std::vector<int>& weights, const std::vector<std::string>& inputs,
                               const std::string& output);

ResidualReport check_homomorphism(const AInfinityAlgebra& source, const AInfinityAlgebra& target,
                                  const AInfinityMorphism& F, const CheckOptions& options = {});

}  // namespace wfloer
