#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wfloer/ainfty.hpp"
#include "wfloer/signs.hpp"

namespace wfloer {

// A composite m_+ o m_- evaluated at `slot`. Terms with a single constant (the
// other factor being the bare qb -> b term) use inner = "-" and slot 0.
struct Pattern {
  std::string outer, inner;
  int slot = 0;
  int d_minus = 0;

  std::string to_string() const;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

using FormalSum = std::map<Pattern, long>;

std::string to_string(const FormalSum& s);

struct SymbolicConfig {
  std::vector<int> degrees;  // deg(x^1), ..., deg(x^d)
  int nu = 1;                 // every input has weight nu

  int d() const { return static_cast<int>(degrees.size()); }
};

// Inputs x1..xd, one chord per (weight, degree) an intermediate or output can
// take, and every rigid constant on those chords set to 1.
struct SymbolicUniverse {
  SymbolicConfig config;
  ChordSet chords;
  ConstantsTable table;
  std::vector<std::string> inputs;

  // The virtual dimension one output for |F| = nf.
  std::string output(int nf) const;
  std::vector<int> weights(int nf) const;
};

constexpr int kSymbolicMaxD = 4;

SymbolicUniverse build_universe(const SymbolicConfig& config);

// Expansion of the A-infinity equation on the input x^d ... x^1 carrying q at the
// positions in q_mask (bit k-1 for x^k), grouped by output generator.
std::map<CWGenerator, FormalSum> expand_as(const SymbolicUniverse& u, std::uint32_t q_mask,
                                           const SignConvention& conv = {});

// The boundary relation for (d, F) with output x0.
FormalSum relation(const SymbolicUniverse& u, const std::vector<int>& F, const std::string& x0,
                   const SignConvention& conv = {});

// One relation per F' subset of q_mask and virtual dimension one output.
std::vector<FormalSum> relation_basis(const SymbolicUniverse& u, std::uint32_t q_mask, const SignConvention& conv = {});

FormalSum reduce(const FormalSum& expansion, const std::vector<FormalSum>& basis);

struct CertificateLine {
  std::string config;
  std::string output;
  std::size_t support = 0;
  FormalSum residual;
};

struct Certificate {
  std::vector<CertificateLine> lines;
  std::size_t nonzero() const;
  std::vector<std::string> render() const;
};

// Every q pattern of the configuration, reduced output by output.
Certificate certify(const SymbolicConfig& config, const SignConvention& expand_conv = {},
                    const SignConvention& relation_conv = {});
// Only the q pattern F.
Certificate certify(const SymbolicConfig& config, const std::vector<int>& F, const SignConvention& expand_conv = {},
                    const SignConvention& relation_conv = {});

// Relation signs read off for the two worked configurations:
// d = 1, F = {1} and d = 2, F = {1,2}, keyed by "outer|inner|slot".
std::map<std::string, int> displayed_relation(int d, const std::vector<int>& degrees);
// Mismatches between relation() and displayed_relation(); empty when they agree.
std::vector<std::string> compare_displayed(const SymbolicConfig& config, const SignConvention& conv = {});

struct Mutation {
  std::string name;
  SignConvention conv;
  bool in_expansion = false;
};

std::vector<Mutation> single_summand_mutations();

struct MutationResult {
  std::string name;
  std::size_t residuals = 0;
  std::size_t displayed_mismatches = 0;
  bool detected() const { return residuals + displayed_mismatches > 0; }
};

MutationResult run_mutation(const Mutation& m, const std::vector<SymbolicConfig>& suite);

// Flips the sign of one relation term at a time and reports how many flips
// leave every expansion reducible (zero means each term is pinned).
std::size_t undetected_term_flips(const SymbolicConfig& config, const std::vector<int>& F);

std::vector<SymbolicConfig> default_suite(int max_d, const std::vector<int>& degree_values, int nu);

}  // namespace wfloer
