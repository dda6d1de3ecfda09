#include "wfloer/signs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wfloer {

namespace {

std::string list(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

long cross_count(const std::vector<int>& a, const std::vector<int>& b, bool less) {
  long n = 0;
  for (int x : a)
    for (int y : b) n += less ? (x < y) : (x > y);
  return n;
}

long trailing(const Cut& c, const std::vector<int>& degs) {
  long s = 0;
  for (int k = c.i + c.d_minus; k <= c.d; ++k) s += degs.at(k - 1);
  return s;
}

void check_degs(const Cut& c, const std::vector<int>& degs) {
  if (static_cast<int>(degs.size()) != c.d) throw std::invalid_argument("need one degree per input");
}

}  // namespace

bool Cut::stable() const {
  return d_minus + static_cast<int>(F_minus.size()) >= 2 && d_plus + static_cast<int>(F_plus.size()) >= 2;
}

std::vector<int> Cut::reconstruct_F() const {
  std::vector<int> F(iota_minus);
  F.insert(F.end(), iota_plus.begin(), iota_plus.end());
  std::sort(F.begin(), F.end());
  return F;
}

std::string Cut::to_string() const {
  return "d-=" + std::to_string(d_minus) + " d+=" + std::to_string(d_plus) + " i=" + std::to_string(i) +
         " F-=" + list(F_minus) + " F+=" + list(F_plus);
}

std::vector<Cut> enumerate_cuts(int d, const std::vector<int>& F_in) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  std::vector<int> F = F_in;
  std::sort(F.begin(), F.end());
  if (std::adjacent_find(F.begin(), F.end()) != F.end()) throw std::invalid_argument("F has repeated elements");
  for (int f : F)
    if (f < 1 || f > d) throw std::invalid_argument("F must be a subset of 1..d");
  std::set<int> Fs(F.begin(), F.end());
  std::vector<Cut> out;
  for (int dm = 1; dm <= d; ++dm) {
    const int dp = d + 1 - dm;
    for (int i = 1; i <= dp; ++i) {
      for (int mm = 0; mm < (1 << dm); ++mm) {
        for (int mp = 0; mp < (1 << dp); ++mp) {
          if (__builtin_popcount(mm) + __builtin_popcount(mp) != static_cast<int>(F.size())) continue;
          Cut c;
          c.d = d;
          c.d_minus = dm;
          c.d_plus = dp;
          c.i = i;
          std::vector<int> images;
          for (int k = 1; k <= dm; ++k)
            if (mm >> (k - 1) & 1) {
              c.F_minus.push_back(k);
              c.iota_minus.push_back(k + i - 1);
            }
          bool has_i = false;
          for (int k = 1; k <= dp; ++k)
            if (mp >> (k - 1) & 1) {
              c.F_plus.push_back(k);
              if (k < i) c.iota_plus.push_back(k);
              else if (k > i) c.iota_plus.push_back(k + dm - 1);
              else {
                has_i = true;
                c.iota_plus.push_back(0);
              }
            }
          std::set<int> known(c.iota_minus.begin(), c.iota_minus.end());
          bool ok = true;
          for (int x : c.iota_plus)
            if (x != 0) ok = ok && known.insert(x).second;
          if (!ok) continue;
          for (int x : known) ok = ok && Fs.count(x);
          if (!ok) continue;
          std::vector<int> left;
          for (int f : F)
            if (!known.count(f)) left.push_back(f);
          if (has_i) {
            if (left.size() != 1 || left[0] < i || left[0] > i + dm - 1) continue;
            for (auto& x : c.iota_plus)
              if (x == 0) x = left[0];
          } else if (!left.empty()) {
            continue;
          }
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

Parity aleph_formula(const Cut& c, const std::vector<int>& degs, const SignConvention& conv) {
  check_degs(c, degs);
  const long fm = static_cast<long>(c.F_minus.size());
  long s = 0;
  if (conv.aleph & SignConvention::aleph_dminus_i) s += static_cast<long>(c.d_minus) * c.i;
  if (conv.aleph & SignConvention::aleph_i) s += c.i;
  if (conv.aleph & SignConvention::aleph_one) s += 1;
  if (conv.aleph & SignConvention::aleph_dplus_fminus) s += c.d_plus * fm;
  if (conv.aleph & SignConvention::aleph_trailing) s += (c.d_minus + fm) * trailing(c, degs);
  if (conv.aleph & SignConvention::aleph_cross) s += cross_count(c.iota_plus, c.iota_minus, true);
  return Parity::of(s);
}

Parity sign_aleph(const Cut& c, const std::vector<int>& degs) {
  if (!c.stable()) throw std::invalid_argument("sign_aleph needs a stable cut: " + c.to_string());
  return aleph_formula(c, degs);
}

Parity sign_triangle(const Cut& c) {
  if (!c.stable()) throw std::invalid_argument("sign_triangle needs a stable cut: " + c.to_string());
  long s = static_cast<long>(c.d_minus) * c.d_plus + static_cast<long>(c.d_minus) * c.i + c.i + 1 +
           static_cast<long>(c.F_plus.size()) * c.d_minus + cross_count(c.iota_plus, c.iota_minus, false);
  return Parity::of(s);
}

Parity aleph_via_triangle(const Cut& c, const std::vector<int>& degs) {
  check_degs(c, degs);
  long dm = c.d_minus - 2 + static_cast<long>(c.F_minus.size());
  long dp = c.d_plus - 2 + static_cast<long>(c.F_plus.size());
  return sign_triangle(c) + Parity::of(dm * dp) + Parity::of(dm * trailing(c, degs));
}

Parity relation_sign(const Cut& c, const std::vector<int>& degs, const SignConvention& conv) {
  if (c.d == 1) return sign_unstable(c.iota_plus, c.iota_minus);
  return aleph_formula(c, degs, conv);
}

Parity sign_ad_hoc(int d, const std::vector<int>& F, const std::vector<int>& degs, const SignConvention& conv) {
  if (static_cast<int>(degs.size()) != d) throw std::invalid_argument("need one degree per input");
  long s = 0;
  if (conv.star & SignConvention::star_positional)
    for (int j = 1; j <= d; ++j) s += static_cast<long>(j) * degs[j - 1];
  if (conv.star & SignConvention::star_q_passing)
    for (int j : F)
      for (int k = j + 1; k <= d; ++k) s += degs[k - 1] - 1;
  return Parity::of(s);
}

Parity sign_ad_hoc_morphism(int d, const std::vector<int>& F, const std::vector<int>& degs) {
  long total = 0;
  for (int x : degs) total += x;
  return sign_ad_hoc(d, F, degs) + Parity::of(total);
}

Parity sign_unstable(const std::vector<int>& F_plus, const std::vector<int>& F_minus) {
  return Parity::of(static_cast<long>(F_plus.size()) + 1 + cross_count(F_plus, F_minus, false));
}

Parity sign_star(const std::vector<std::vector<int>>& parts, const std::vector<int>& anchor) {
  const std::size_t l = parts.size();
  if (anchor.size() != l + 1) throw std::invalid_argument("need deg(x_0..x_l)");
  long s = static_cast<long>(l);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t k = 0; k < j; ++k) s += cross_count(parts[j], parts[k], false);
  for (std::size_t j = 1; j <= l; ++j) s += static_cast<long>(parts[j - 1].size()) * (anchor[j - 1] - anchor[0]);
  return Parity::of(s);
}

Parity sign_fib(const std::vector<int>& F_plus, const std::vector<int>& F_minus, int deg_new, int deg0) {
  return Parity::of(cross_count(F_plus, F_minus, false) + static_cast<long>(F_minus.size()) * (deg_new - deg0));
}

Parity sign_times(const std::vector<int>& F_minus, int deg_new, int deg0) {
  return Parity::of(static_cast<long>(F_minus.size()) * (deg_new - deg0) + 1);
}

Parity koszul_prefix(const std::vector<int>& degs, int i) {
  if (i < 1) throw std::invalid_argument("koszul_prefix needs i >= 1");
  long s = 0;
  for (int k = 1; k < i; ++k) s += degs.at(k - 1) - 1;
  return Parity::of(s);
}

}  // namespace wfloer
