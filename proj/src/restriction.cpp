#include "wfloer/restriction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace wfloer {

ActionProfile ActionProfile::from_chords(const ChordSet& chords) {
  ActionProfile p;
  for (const auto& c : chords.chords()) {
    if (!c.location) throw std::invalid_argument("chord " + c.id + " has no location");
    if (*c.location == Location::outside && !c.action)
      throw MissingAction("outside chord " + c.id + " has no action");
    p.entries[c.id] = {c.action, *c.location, c.weight};
  }
  return p;
}

const ActionEntry& ActionProfile::at(const std::string& id) const {
  auto it = entries.find(id);
  if (it == entries.end()) throw MissingAction("no chord " + id + " in profile");
  return it->second;
}

const mpq_class& ActionProfile::action(const std::string& id) const {
  const auto& e = at(id);
  if (!e.action) throw MissingAction("chord " + id + " has no action");
  return *e.action;
}

mpq_class e_top(const ActionProfile& profile, const std::string& x0, const std::vector<std::string>& inputs) {
  mpq_class e = profile.action(x0);
  for (const auto& x : inputs) e -= profile.action(x);
  return e;
}

Feasibility feasible(const ActionProfile& profile, const std::string& x0, const std::vector<std::string>& inputs) {
  mpq_class e = e_top(profile, x0, inputs);
  Feasibility f;
  f.feasible = sgn(e) >= 0;
  f.trivial_only = inputs.size() == 1 && inputs[0] == x0;
  return f;
}

ActionProfile rescale_action(const ActionProfile& profile, const mpq_class& rho) {
  if (sgn(rho) <= 0 || rho > 1) throw std::domain_error("rho must lie in (0,1], got " + rho.get_str());
  ActionProfile out = profile;
  for (auto& [id, e] : out.entries)
    if (e.location == Location::inside && e.action) e.action = *e.action * rho;
  return out;
}

int nu_threshold(const ActionProfile& profile) {
  int wmax = 1;
  for (const auto& [id, e] : profile.entries) wmax = std::max(wmax, e.weight);
  for (int nu = 1; nu <= wmax; ++nu) {
    bool ok = true;
    for (const auto& [id, e] : profile.entries)
      if (e.location == Location::outside && e.weight >= nu && sgn(profile.action(id)) <= 0) ok = false;
    if (ok) return nu;
  }
  throw std::domain_error("no nu in [1," + std::to_string(wmax) + "] makes all outside actions positive");
}

mpq_class rho_threshold(const ActionProfile& profile, int d, const std::vector<int>& F, const std::vector<int>& w,
                        const std::string& x0) {
  if (d < 1 || static_cast<int>(w.size()) != d + 1) throw std::invalid_argument("need d >= 1 and d + 1 weights");
  int sum = static_cast<int>(F.size());
  for (int k = 1; k <= d; ++k) sum += w[k];
  if (sum != w[0]) throw std::invalid_argument("weights violate w^0 = sum w^k + |F|");
  if (profile.at(x0).location != Location::inside) throw std::invalid_argument("x^0 must lie inside");
  const mpq_class a0 = profile.action(x0);
  std::vector<std::vector<std::string>> by_weight(d);
  for (int k = 1; k <= d; ++k)
    for (const auto& [id, e] : profile.entries)
      if (e.weight == w[k]) by_weight[k - 1].push_back(id);
  mpq_class best = 1;
  std::vector<std::string> tuple(d);
  std::function<void(int)> rec = [&](int k) {
    if (k < d) {
      for (const auto& id : by_weight[k]) {
        tuple[k] = id;
        rec(k + 1);
      }
      return;
    }
    mpq_class s_in = 0, s_out = 0;
    bool any_out = false;
    for (const auto& id : tuple) {
      if (profile.at(id).location == Location::outside) {
        any_out = true;
        s_out += profile.action(id);
      } else {
        s_in += profile.action(id);
      }
    }
    if (!any_out) return;
    if (sgn(s_out) <= 0) {
      std::string t;
      for (const auto& id : tuple) t += (t.empty() ? "" : ",") + id;
      throw std::domain_error("outside action sum " + s_out.get_str() + " <= 0 for inputs (" + t + ")");
    }
    mpq_class c = a0 - s_in;
    if (sgn(c) > 0) best = std::min(best, mpq_class(s_out / c));
  };
  rec(0);
  return best;
}

std::set<std::string> QConstantsTable::all_formal_points(const ChordSet& source, const ChordSet& target) {
  std::set<std::string> out;
  for (const auto& c : target.chords())
    if (c.location == Location::inside && source.find(c.id)) out.insert(c.id);
  return out;
}

ConstantsTable QConstantsTable::effective(const ChordSet& source) const {
  ConstantsTable t = table;
  for (const auto& id : formal_points) {
    const auto& c = source[source.index(id)];
    ConstantKey key{1, {}, {c.weight, c.weight}, {id}, id};
    t.set(key, t.get(key) + Scalar::one(t.field));
  }
  return t;
}

ValidationReport validate_q(const QConstantsTable& q, const ChordSet& source, const ChordSet& target) {
  ValidationReport r = validate(q.table, source, target, 1);
  for (const auto& id : q.formal_points) {
    ConstantKey key{1, {}, {0, 0}, {id}, id};
    auto s = source.find(id), t = target.find(id);
    if (!s || !t) {
      r.violations.push_back({key, "formal-point", "formal point " + id + " missing from source or target"});
      continue;
    }
    const auto &a = source[*s], &b = target[*t];
    key.weights = {a.weight, a.weight};
    if (a.weight != b.weight || a.degree != b.degree || b.location != Location::inside)
      r.violations.push_back({key, "formal-point", "formal point " + id + " must be the same inside chord on both sides"});
  }
  return r;
}

AInfinityMorphism assemble_F(const QConstantsTable& q, const ChordSet& source, const ChordSet& target,
                             int min_weight) {
  auto r = validate_q(q, source, target);
  if (!r.valid()) throw InvalidTable(std::move(r));
  return AInfinityMorphism(source, target, q.effective(source), min_weight);
}

namespace {

// Matrix of the d = 1 constants with |F| = nf: op[input][output].
using Op = std::map<std::string, std::map<std::string, Scalar>>;

Op d1_operator(const ConstantsTable& t, std::size_t nf) {
  Op op;
  for (const auto& [k, v] : t.entries)
    if (k.d == 1 && k.F.size() == nf && !v.is_zero()) op[k.inputs[0]][k.output] = v;
  return op;
}

// (a o b)(x) for x an input of b.
std::map<std::string, Scalar> compose_at(const Op& a, const Op& b, const std::string& x, Field f) {
  std::map<std::string, Scalar> out;
  auto it = b.find(x);
  if (it == b.end()) return out;
  for (const auto& [y, s] : it->second) {
    auto jt = a.find(y);
    if (jt == a.end()) continue;
    for (const auto& [z, t] : jt->second) {
      auto [pos, fresh] = out.emplace(z, Scalar::zero(f));
      pos->second += s * t;
    }
  }
  return out;
}

void accumulate(std::map<std::string, Scalar>& acc, const std::map<std::string, Scalar>& x, const Scalar& c) {
  for (const auto& [k, v] : x) {
    auto [pos, fresh] = acc.emplace(k, Scalar::zero(c.field()));
    pos->second += c * v;
  }
}

}  // namespace

QRelationReport check_q_relations(const ConstantsTable& m, const ChordSet& source, const ConstantsTable& m_in,
                                  const ChordSet& target, const QConstantsTable& q) {
  const Field f = m.field;
  if (!(m_in.field == f) || !(q.table.field == f)) throw FieldMismatch("q relations across fields");
  ConstantsTable eff = q.effective(source);
  const Op delta = d1_operator(m, 0), kappa = d1_operator(m, 1);
  const Op delta_in = d1_operator(m_in, 0), kappa_in = d1_operator(m_in, 1);
  const Op gamma = d1_operator(eff, 0), lambda = d1_operator(eff, 1);
  const Scalar one = Scalar::one(f), minus = Scalar(f, -1L);
  QRelationReport rep;
  for (const auto& x1 : source.chords()) {
    std::map<std::string, Scalar> r0, r1;
    accumulate(r0, compose_at(delta_in, gamma, x1.id, f), one);
    accumulate(r0, compose_at(gamma, delta, x1.id, f), minus);
    accumulate(r1, compose_at(delta_in, lambda, x1.id, f), minus);
    accumulate(r1, compose_at(kappa_in, gamma, x1.id, f), one);
    accumulate(r1, compose_at(gamma, kappa, x1.id, f), minus);
    accumulate(r1, compose_at(lambda, delta, x1.id, f), minus);
    for (const auto& x0 : target.chords()) {
      if (x0.weight == x1.weight) {
        ++rep.evaluated;
        auto it = r0.find(x0.id);
        if (it != r0.end() && !it->second.is_zero()) rep.residuals.push_back({"q0", x1.weight, x0.id, x1.id, it->second});
      }
      if (x0.weight == x1.weight + 1) {
        ++rep.evaluated;
        auto it = r1.find(x0.id);
        if (it != r1.end() && !it->second.is_zero()) rep.residuals.push_back({"q1", x1.weight, x0.id, x1.id, it->second});
      }
    }
  }
  return rep;
}

std::vector<std::string> QRelationReport::lines() const {
  std::vector<std::string> out;
  for (const auto& r : residuals) {
    std::ostringstream os;
    os << r.relation << " w=" << r.weight << " x0=" << r.x0 << " x1=" << r.x1 << " residual=" << r.value.to_string();
    out.push_back(os.str());
  }
  return out;
}

AnnulusReport annulus_obstruction(const std::vector<int>& in, const std::vector<int>& out) {
  for (int n : in)
    if (n <= 0) throw std::invalid_argument("block sizes must be positive");
  for (int n : out)
    if (n <= 0) throw std::invalid_argument("block sizes must be positive");
  AnnulusReport rep;
  if (in.size() != out.size()) {
    rep.obstruction = true;
    rep.mismatches.push_back("block count " + std::to_string(in.size()) + " != " + std::to_string(out.size()));
    return rep;
  }
  for (std::size_t i = 0; i < in.size(); ++i) {
    long a = static_cast<long>(in[i]) * in[i], b = static_cast<long>(out[i]) * out[i];
    if (a != b) {
      rep.obstruction = true;
      rep.mismatches.push_back("corner " + std::to_string(i + 1) + ": " + std::to_string(a) + " != " + std::to_string(b));
    }
  }
  return rep;
}

}  // namespace wfloer
