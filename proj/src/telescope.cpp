#include "wfloer/telescope.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace wfloer {

void TelescopeData::validate() const {
  for (int w = 1; w <= W(); ++w) {
    const auto& C = cf[w - 1];
    const auto& d = delta.at(w - 1);
    if (d.shift() != 1) throw std::invalid_argument("delta must have degree +1");
    d.check_degrees(C, C);
    auto dd = compose(d, d);
    for (std::size_t j = 0; j < dd.cols(); ++j)
      if (!is_zero(dd.column(j))) throw NotADifferential("weight " + std::to_string(w) + " " + C[j].id);
  }
  for (int w = 1; w < W(); ++w) {
    const auto& k = kappa.at(w - 1);
    if (k.shift() != 0) throw std::invalid_argument("kappa must have degree 0");
    k.check_degrees(cf[w - 1], cf[w]);
    auto diff = compose(delta[w], k) - compose(k, delta[w - 1]);
    for (std::size_t j = 0; j < diff.cols(); ++j)
      if (!is_zero(diff.column(j))) throw NotAChainMap(w, cf[w - 1][j].id);
  }
}

TelescopeData telescope_data_from_table(const ChordSet& chords, const ConstantsTable& table, int W) {
  auto report = validate(table, chords);
  if (!report.valid()) throw InvalidTable(report);
  TelescopeData data;
  data.field = table.field;
  std::vector<std::vector<std::size_t>> by_weight(W);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t c = 0; c < chords.size(); ++c) {
    int w = chords[c].weight;
    if (w > W) continue;
    local[c] = by_weight[w - 1].size();
    by_weight[w - 1].push_back(c);
  }
  for (int w = 1; w <= W; ++w) {
    GradedModule m;
    for (auto c : by_weight[w - 1]) m.add({chords[c].id, chords[c].degree});
    data.cf.push_back(m);
    data.delta.emplace_back(table.field, m.size(), m.size(), 1);
  }
  for (int w = 1; w < W; ++w) data.kappa.emplace_back(table.field, data.cf[w].size(), data.cf[w - 1].size(), 0);
  for (const auto& [key, value] : table.entries) {
    if (key.d != 1) continue;
    std::size_t x1 = chords.index(key.inputs[0]), x0 = chords.index(key.output);
    int w1 = chords[x1].weight;
    if (key.F.empty()) {
      if (w1 <= W) data.delta[w1 - 1].add(local.at(x0), local.at(x1), value);
    } else if (w1 + 1 <= W) {
      data.kappa[w1 - 1].add(local.at(x0), local.at(x1), value);
    }
  }
  data.validate();
  return data;
}

TelescopeComplex::TelescopeComplex(const TelescopeData& data, int lo, int hi, TelescopeMode mode)
    : lo_(lo), hi_(hi), mode_(mode), d_(data.field, 0, 0, 1) {
  if (lo < 1 || hi > data.W() || lo > hi) throw std::invalid_argument("weight window outside the data");
  auto has_q = [&](int w) { return !(mode == TelescopeMode::truncated && w == hi); };
  for (int w = lo; w <= hi; ++w) {
    const auto& C = data.cf[w - 1];
    for (std::size_t a = 0; a < C.size(); ++a) {
      index_[{w, a, false}] = module_.add({std::to_string(w) + ":" + C[a].id, C[a].degree});
      if (has_q(w)) index_[{w, a, true}] = module_.add({"q" + std::to_string(w) + ":" + C[a].id, C[a].degree - 1});
    }
  }
  SparseMap d(data.field, module_.size(), module_.size(), 1);
  const Scalar one = Scalar::one(data.field);
  for (int w = lo; w <= hi; ++w) {
    const auto& C = data.cf[w - 1];
    const auto& delta = data.delta[w - 1];
    for (std::size_t a = 0; a < C.size(); ++a) {
      Scalar s = Scalar::sign(data.field, C[a].degree % 2 != 0);
      std::size_t src = index_.at({w, a, false});
      for (const auto& [b, v] : delta.column(a)) d.add(index_.at({w, b, false}), src, s * v);
      if (!has_q(w)) continue;
      std::size_t qsrc = index_.at({w, a, true});
      for (const auto& [b, v] : delta.column(a)) d.add(index_.at({w, b, true}), qsrc, s * v);
      if (w < hi)
        for (const auto& [b, v] : data.kappa.at(w - 1).column(a)) d.add(index_.at({w + 1, b, false}), qsrc, s * v);
      d.add(src, qsrc, -s * one);
    }
  }
  d_ = d;
}

std::optional<std::size_t> TelescopeComplex::index(int w, std::size_t gen, bool q) const {
  auto it = index_.find({w, gen, q});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> TelescopeComplex::filtration(int nu) const {
  std::vector<std::size_t> out;
  for (const auto& [key, idx] : index_)
    if (std::get<0>(key) >= nu) out.push_back(idx);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, std::size_t> TelescopeComplex::homology() const { return wfloer::homology(module_, d_); }

TelescopeComplex build_telescope(const TelescopeData& data, int W, TelescopeMode mode) {
  data.validate();
  return TelescopeComplex(data, 1, W, mode);
}

std::map<int, DegreeComparison> compare_inclusion(const GradedModule& module, const SparseMap& d,
                                                  const std::vector<std::size_t>& sub) {
  const Field f = d.field();
  std::set<std::size_t> in_sub(sub.begin(), sub.end());
  std::map<int, std::vector<std::size_t>> cols_all, cols_sub;
  for (std::size_t j = 0; j < module.size(); ++j) {
    cols_all[module[j].degree].push_back(j);
    if (in_sub.count(j)) cols_sub[module[j].degree].push_back(j);
  }
  auto image = [&](const std::vector<std::size_t>& cols) {
    std::vector<SparseVector> v;
    for (auto j : cols) v.push_back(d.column(j));
    return v;
  };
  std::map<int, DegreeComparison> out;
  for (const auto& [deg, cols] : cols_all) {
    const int prev = deg - d.shift();
    auto z_tot = cols.empty() ? std::vector<SparseVector>{} : kernel_basis(d, cols);
    auto b_tot = cols_all.count(prev) ? image(cols_all[prev]) : std::vector<SparseVector>{};
    std::vector<SparseVector> z_sub, b_sub;
    if (cols_sub.count(deg)) z_sub = kernel_basis(d, cols_sub[deg]);
    if (cols_sub.count(prev)) b_sub = image(cols_sub[prev]);
    DegreeComparison c;
    std::size_t rb_tot = rank_of(f, b_tot);
    c.h_total = z_tot.size() - rb_tot;
    c.h_sub = z_sub.size() - rank_of(f, b_sub);
    std::vector<SparseVector> both = b_tot;
    both.insert(both.end(), z_sub.begin(), z_sub.end());
    c.induced_rank = rank_of(f, both) - rb_tot;
    out[deg] = c;
  }
  return out;
}

namespace {

void compare_into(LemmaReport& rep, const std::string& label, const std::map<int, DegreeComparison>& cmp) {
  for (const auto& [deg, c] : cmp) {
    if (c.iso() && c.h_total == 0) continue;
    rep.lines.push_back(label + " degree " + std::to_string(deg) + ": H(sub)=" + std::to_string(c.h_sub) +
                        " H(total)=" + std::to_string(c.h_total) + " induced rank=" + std::to_string(c.induced_rank) +
                        (c.iso() ? " iso" : " NOT iso"));
    rep.ok = rep.ok && c.iso();
  }
}

}  // namespace

LemmaReport check_partial_forget(const TelescopeData& data, int W, int nu, TelescopeMode mode) {
  if (nu < 1 || nu > W) throw std::invalid_argument("nu must lie in 1..W");
  TelescopeComplex tc(data, 1, W, mode);
  LemmaReport rep;
  compare_into(rep, "C^" + std::to_string(nu) + " in window [1," + std::to_string(W) + "]",
               compare_inclusion(tc.module(), tc.differential(), tc.filtration(nu)));
  return rep;
}

LemmaReport check_quotients_acyclic(const TelescopeData& data, int W) {
  LemmaReport rep;
  for (int nu = 1; nu <= W; ++nu) {
    TelescopeComplex cone(data, nu, nu, TelescopeMode::full);
    for (const auto& [deg, b] : cone.homology())
      if (b != 0) {
        rep.ok = false;
        rep.lines.push_back("C^" + std::to_string(nu) + "/C^" + std::to_string(nu + 1) + " has H^" +
                            std::to_string(deg) + " of rank " + std::to_string(b));
      }
  }
  return rep;
}

LemmaReport check_homotopy_limit(const TelescopeData& data, int W) {
  data.validate();
  LemmaReport rep;
  const Field f = data.field;
  for (int w = 1; w <= W; ++w) {
    TelescopeComplex C(data, 1, w, TelescopeMode::truncated);
    compare_into(rep, "CF(" + std::to_string(w) + ") in C_" + std::to_string(w),
                 compare_inclusion(C.module(), C.differential(), C.filtration(w)));
  }
  for (int w = 1; w < W; ++w) {
    TelescopeComplex big(data, 1, w + 1, TelescopeMode::truncated);
    const auto& C = data.cf[w - 1];
    const auto& D = big.differential();
    for (std::size_t a = 0; a < C.size(); ++a) {
      Scalar sa = Scalar::sign(f, C[a].degree % 2 != 0);
      SparseVector lhs;  // incl(kappa a) - incl(a)
      for (const auto& [b, v] : data.kappa[w - 1].column(a)) axpy(lhs, v, {{*big.index(w + 1, b, false), Scalar::one(f)}});
      axpy(lhs, Scalar(f, -1L), {{*big.index(w, a, false), Scalar::one(f)}});
      SparseVector rhs;  // mu(h a) + h(mu a), h(a) = (-1)^deg(a) q a
      axpy(rhs, sa, D.column(*big.index(w, a, true)));
      for (const auto& [b, v] : data.delta[w - 1].column(a)) {
        Scalar sb = Scalar::sign(f, C[b].degree % 2 != 0);
        axpy(rhs, sa * v * sb, {{*big.index(w, b, true), Scalar::one(f)}});
      }
      SparseVector diff = lhs;
      axpy(diff, Scalar(f, -1L), rhs);
      if (!diff.empty()) {
        rep.ok = false;
        rep.lines.push_back("homotopy identity fails at weight " + std::to_string(w) + " generator " + C[a].id);
      }
    }
  }
  return rep;
}

WindingRestriction winding_subcomplex(const ChordSet& chords, const ConstantsTable& table, int label) {
  WindingRestriction r;
  r.table.field = table.field;
  for (const auto& c : chords.chords()) {
    if (!c.winding) throw std::invalid_argument("chord " + c.id + " has no winding label");
    if (*c.winding == label) r.chords.add(c);
  }
  for (const auto& [key, value] : table.entries) {
    int s = 0;
    for (const auto& id : key.inputs) s += *chords[chords.index(id)].winding;
    const int out = *chords[chords.index(key.output)].winding;
    if (out != s) r.non_conserving.push_back(key);
    bool inside = true;
    for (const auto& id : key.inputs) inside = inside && r.chords.find(id).has_value();
    if (!inside) continue;
    if (!r.chords.find(key.output)) {
      r.escaping.push_back(key);
      continue;
    }
    r.table.set(key, value);
  }
  return r;
}

}  // namespace wfloer
