#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wfloer {

// An element of Z/2, read as the exponent of -1.
class Parity {
 public:
  constexpr Parity() = default;
  constexpr explicit Parity(bool odd) : odd_(odd) {}
  static constexpr Parity of(long n) { return Parity(n % 2 != 0); }

  constexpr bool odd() const { return odd_; }
  constexpr int factor() const { return odd_ ? -1 : 1; }
  constexpr Parity operator+(Parity o) const { return Parity(odd_ != o.odd_); }
  constexpr Parity& operator+=(Parity o) { return *this = *this + o; }
  friend constexpr bool operator==(Parity, Parity) = default;

 private:
  bool odd_ = false;
};

// Admissible cut of an injective flavour F subset of {1..d}. All index sets are 1-based.
struct Cut {
  int d = 0;
  int d_minus = 0, d_plus = 0, i = 0;
  std::vector<int> F_minus, F_plus;    // sorted
  std::vector<int> iota_minus, iota_plus;  // images in F, aligned with F_minus / F_plus

  // Both factors are stable popsicles.
  bool stable() const;
  // One factor is the unstable strip (d = 1, F = empty).
  bool strip() const { return !stable(); }
  std::vector<int> reconstruct_F() const;
  std::string to_string() const;
};

std::vector<Cut> enumerate_cuts(int d, const std::vector<int>& F);

// Toggles for individual summands of the sign formulas; everything on by default.
// Used for mutation testing.
struct SignConvention {
  enum Star : std::uint32_t { star_positional = 1u << 0, star_q_passing = 1u << 1 };
  enum Aleph : std::uint32_t {
    aleph_dminus_i = 1u << 0,
    aleph_i = 1u << 1,
    aleph_one = 1u << 2,
    aleph_dplus_fminus = 1u << 3,
    aleph_trailing = 1u << 4,
    aleph_cross = 1u << 5,
  };
  std::uint32_t star = star_positional | star_q_passing;
  std::uint32_t aleph = aleph_dminus_i | aleph_i | aleph_one | aleph_dplus_fminus | aleph_trailing | aleph_cross;
};

// degs[k-1] = deg(x^k).
Parity sign_aleph(const Cut& cut, const std::vector<int>& degs);
Parity sign_triangle(const Cut& cut);
// The aleph formula evaluated on any cut, including those with a strip factor.
Parity aleph_formula(const Cut& cut, const std::vector<int>& degs, const SignConvention& conv = {});
// Route through the triangle sign: triangle + dim_- dim_+ + dim_- * (trailing degrees).
Parity aleph_via_triangle(const Cut& cut, const std::vector<int>& degs);
// Sign attached to a cut in the boundary relation: aleph for d >= 2, the strip
// breaking sign for d = 1.
Parity relation_sign(const Cut& cut, const std::vector<int>& degs, const SignConvention& conv = {});

Parity sign_ad_hoc(int d, const std::vector<int>& F, const std::vector<int>& degs, const SignConvention& conv = {});
// Translation sign for the restriction maps F^d: sign_ad_hoc minus the sum of input degrees.
Parity sign_ad_hoc_morphism(int d, const std::vector<int>& F, const std::vector<int>& degs);

Parity sign_unstable(const std::vector<int>& F_plus, const std::vector<int>& F_minus);
// parts[j-1] = F_j for j = 1..l; anchor_degs = deg(x_0), ..., deg(x_l).
Parity sign_star(const std::vector<std::vector<int>>& parts, const std::vector<int>& anchor_degs);
Parity sign_fib(const std::vector<int>& F_plus, const std::vector<int>& F_minus, int deg_new, int deg0);
Parity sign_times(const std::vector<int>& F_minus, int deg_new, int deg0);
// degs[k-1] = deg(c^k); sums the reduced degrees of c^1..c^{i-1}.
Parity koszul_prefix(const std::vector<int>& degs, int i);

}  // namespace wfloer
