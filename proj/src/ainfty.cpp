#include "wfloer/ainfty.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace wfloer {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

}  // namespace

ChordSet::ChordSet(std::vector<Chord> chords) {
  for (auto& c : chords) add(std::move(c));
}

std::size_t ChordSet::add(Chord c) {
  if (c.id.empty()) throw std::invalid_argument("chord id must be nonempty");
  if (c.weight < 1) throw std::invalid_argument("chord " + c.id + " has weight < 1");
  if (index_.count(c.id)) throw std::invalid_argument("duplicate chord id: " + c.id);
  index_[c.id] = chords_.size();
  chords_.push_back(std::move(c));
  return chords_.size() - 1;
}

std::optional<std::size_t> ChordSet::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ChordSet::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnresolvedChord("unresolved chord id: " + id);
  return it->second;
}

std::string ConstantKey::to_string() const {
  return "d=" + std::to_string(d) + " F={" + join(F) + "} w=(" + join(weights) + ") in=(" + join(inputs) +
         ") out=" + output;
}

void ConstantsTable::set(const ConstantKey& key, const Scalar& value) {
  if (!(value.field() == field)) throw FieldMismatch("constant outside the table field");
  entries[key] = value;
}

Scalar ConstantsTable::get(const ConstantKey& key) const {
  auto it = entries.find(key);
  return it == entries.end() ? Scalar::zero(field) : it->second;
}

ValidationReport validate(const ConstantsTable& table, const ChordSet& in, const ChordSet& out, int offset) {
  ValidationReport r;
  for (const auto& [key, value] : table.entries) {
    auto bad = [&](const std::string& kind, const std::string& msg) { r.violations.push_back({key, kind, msg}); };
    if (!(value.field() == table.field)) bad("field", "scalar not in " + table.field.describe());
    if (key.d < 1 || static_cast<int>(key.inputs.size()) != key.d || static_cast<int>(key.weights.size()) != key.d + 1) {
      bad("arity", "need d >= 1 inputs and d + 1 weights");
      continue;
    }
    std::set<int> fs;
    bool range_ok = true;
    for (int f : key.F) {
      if (f < 1 || f > key.d) range_ok = false;
      fs.insert(f);
    }
    if (!range_ok) bad("flavour-range", "F must be a subset of 1..d");
    if (fs.size() != key.F.size()) bad("non-injective", "repeated flavour value; Sym^p nontrivial");
    if (!std::is_sorted(key.F.begin(), key.F.end())) bad("flavour-order", "F must be listed in increasing order");

    std::vector<const Chord*> xs;
    for (const auto& id : key.inputs) xs.push_back(&in[in.index(id)]);
    const Chord& x0 = out[out.index(key.output)];

    for (int k = 1; k <= key.d; ++k)
      if (xs[k - 1]->weight != key.weights[k])
        bad("weight-mismatch", "w^" + std::to_string(k) + " differs from weight of " + xs[k - 1]->id);
    if (x0.weight != key.weights[0]) bad("weight-mismatch", "w^0 differs from weight of " + x0.id);
    int wsum = std::accumulate(key.weights.begin() + 1, key.weights.end(), 0);
    for (int w : key.weights)
      if (w < 1) bad("weight-range", "weights must be positive");
    if (key.weights[0] != wsum + static_cast<int>(key.F.size()))
      bad("weight-law", "w^0 = " + std::to_string(key.weights[0]) + " but sum + |F| = " +
                            std::to_string(wsum + static_cast<int>(key.F.size())));
    int dsum = 0;
    for (const auto* x : xs) dsum += x->degree;
    int want = dsum + offset - key.d - static_cast<int>(key.F.size());
    if (x0.degree != want)
      bad("rigidity", "deg(x^0) = " + std::to_string(x0.degree) + ", expected " + std::to_string(want));

    bool any_obj = x0.from || x0.to;
    bool all_obj = x0.from && x0.to;
    for (const auto* x : xs) {
      any_obj = any_obj || x->from || x->to;
      all_obj = all_obj && x->from && x->to;
    }
    if (any_obj && !all_obj) {
      bad("composability", "object labels present on some chords only");
    } else if (all_obj) {
      bool ok = *x0.from == *xs.front()->from && *x0.to == *xs.back()->to;
      for (std::size_t k = 1; k < xs.size(); ++k) ok = ok && *xs[k - 1]->to == *xs[k]->from;
      if (!ok) bad("composability", "chords do not compose head to tail");
    }

    bool all_wind = x0.winding.has_value();
    for (const auto* x : xs) all_wind = all_wind && x->winding.has_value();
    if (all_wind) {
      int s = 0;
      for (const auto* x : xs) s += *x->winding;
      if (*x0.winding != s) bad("winding", "winding of x^0 differs from the sum over inputs");
    }
    if (offset == 1 && x0.location && *x0.location != Location::inside) bad("output-outside", "q-data output must lie inside");
    if (offset == 1 && !x0.location) bad("output-outside", "q-data output has no location");
  }
  return r;
}

ValidationReport validate(const ConstantsTable& table, const ChordSet& chords) {
  return validate(table, chords, chords, 2);
}

InvalidTable::InvalidTable(ValidationReport r)
    : std::runtime_error("invalid constants table: " +
                         (r.violations.empty() ? std::string()
                                               : r.violations[0].kind + " at " + r.violations[0].key.to_string())),
      report_(std::move(r)) {}

void add_to(CWElement& target, const Scalar& coeff, const CWElement& x) {
  if (coeff.is_zero()) return;
  for (const auto& [g, s] : x) {
    auto it = target.find(g);
    if (it == target.end()) {
      target.emplace(g, coeff * s);
    } else {
      it->second += coeff * s;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

AssembledFamily::AssembledFamily(ChordSet inputs, ChordSet outputs, const ConstantsTable& table, int offset)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), field_(table.field) {
  auto report = validate(table, inputs_, outputs_, offset);
  if (!report.valid()) throw InvalidTable(std::move(report));
  for (const auto& [key, value] : table.entries) {
    if (value.is_zero()) continue;
    StoredConstant c;
    c.key = key;
    for (const auto& id : key.inputs) c.inputs.push_back(inputs_.index(id));
    c.output = outputs_.index(key.output);
    for (int f : key.F) c.fmask |= 1u << (f - 1);
    c.value = value;
    by_inputs_[c.inputs].push_back(constants_.size());
    constants_.push_back(std::move(c));
  }
}

int AssembledFamily::max_arity() const {
  int m = 0;
  for (const auto& c : constants_) m = std::max(m, c.key.d);
  return m;
}

std::vector<std::vector<std::size_t>> AssembledFamily::keyed_tuples(int d) const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& [tuple, ids] : by_inputs_)
    if (static_cast<int>(tuple.size()) == d) out.push_back(tuple);
  return out;
}

Scalar AssembledFamily::value(const OpTerm& t) const {
  Scalar s = Scalar::sign(field_, t.sign.odd());
  if (t.constant) s *= constants_[*t.constant].value;
  return s;
}

std::vector<OpTerm> AssembledFamily::extended_terms(const std::vector<CWGenerator>& in, bool morphism,
                                                    const SignConvention& conv) const {
  std::vector<OpTerm> out;
  const int d = static_cast<int>(in.size());
  std::vector<std::size_t> tuple;
  std::uint32_t Q = 0;
  for (int k = 0; k < d; ++k) {
    tuple.push_back(in[k].chord);
    if (in[k].q) Q |= 1u << k;
  }
  auto it = by_inputs_.find(tuple);
  if (it == by_inputs_.end()) return out;
  std::vector<int> degs;
  for (auto c : tuple) degs.push_back(inputs_[c].degree);
  for (std::size_t id : it->second) {
    const auto& c = constants_[id];
    Parity base = morphism ? sign_ad_hoc_morphism(d, c.key.F, degs) : sign_ad_hoc(d, c.key.F, degs, conv);
    if (Q == c.fmask) {
      out.push_back({{c.output, false}, base, id});
    } else if ((Q & c.fmask) == c.fmask && __builtin_popcount(Q ^ c.fmask) == 1) {
      int k = __builtin_ctz(Q ^ c.fmask) + 1;
      long s = 0;
      for (int j = k + 1; j <= d; ++j) s += degree(in[j - 1]) - 1;
      out.push_back({{c.output, true}, base + Parity::of(s), id});
    }
  }
  return out;
}

namespace {

// Calls f(tuple, coefficient) for every basis tuple in the product of elements.
void expand(const std::vector<CWElement>& elems, Field field,
            const std::function<void(const std::vector<CWGenerator>&, const Scalar&)>& f) {
  std::vector<CWGenerator> tuple(elems.size());
  std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t k, const Scalar& c) {
    if (k == elems.size()) {
      f(tuple, c);
      return;
    }
    for (const auto& [g, s] : elems[k]) {
      tuple[k] = g;
      rec(k + 1, c * s);
    }
  };
  rec(0, Scalar::one(field));
}

}  // namespace

AInfinityAlgebra::AInfinityAlgebra(ChordSet chords, const ConstantsTable& table, SignConvention conv)
    : AssembledFamily(chords, chords, table, 2), conv_(conv) {}

std::vector<OpTerm> AInfinityAlgebra::mu_terms(const std::vector<CWGenerator>& in) const {
  auto out = extended_terms(in, false, conv_);
  if (in.size() == 1 && in[0].q)
    out.push_back({{in[0].chord, false}, Parity::of(inputs_[in[0].chord].degree + 1), std::nullopt});
  return out;
}

CWElement AInfinityAlgebra::mu(const std::vector<CWGenerator>& in) const {
  CWElement out;
  for (const auto& t : mu_terms(in)) add_to(out, value(t), CWElement{{t.output, Scalar::one(field_)}});
  return out;
}

CWElement AInfinityAlgebra::mu(const std::vector<CWElement>& in) const {
  CWElement out;
  expand(in, field_, [&](const std::vector<CWGenerator>& t, const Scalar& c) { add_to(out, c, mu(t)); });
  return out;
}

AInfinityMorphism::AInfinityMorphism(ChordSet source, ChordSet target, const ConstantsTable& qtable, int min_weight)
    : AssembledFamily(std::move(source), std::move(target), qtable, 1), min_weight_(min_weight) {}

std::vector<OpTerm> AInfinityMorphism::f_terms(const std::vector<CWGenerator>& in) const {
  for (const auto& g : in)
    if (inputs_[g.chord].weight < min_weight_) return {};
  return extended_terms(in, true, SignConvention{});
}

CWElement AInfinityMorphism::apply(const std::vector<CWGenerator>& in) const {
  CWElement out;
  for (const auto& t : f_terms(in)) add_to(out, value(t), CWElement{{t.output, Scalar::one(field_)}});
  return out;
}

CWElement AInfinityMorphism::apply(const std::vector<CWElement>& in) const {
  CWElement out;
  expand(in, field_, [&](const std::vector<CWGenerator>& t, const Scalar& c) { add_to(out, c, apply(t)); });
  return out;
}

std::vector<CompositeTerm> ainfty_terms(const AInfinityAlgebra& mu, const std::vector<CWGenerator>& tuple) {
  std::vector<CompositeTerm> out;
  const int d = static_cast<int>(tuple.size());
  for (int dm = 1; dm <= d; ++dm) {
    for (int i = 1; i + dm - 1 <= d; ++i) {
      long prefix = 0;
      for (int j = 1; j < i; ++j) prefix += mu.degree(tuple[j - 1]) - 1;
      std::vector<CWGenerator> inner(tuple.begin() + (i - 1), tuple.begin() + (i - 1 + dm));
      for (const auto& t : mu.mu_terms(inner)) {
        std::vector<CWGenerator> outer(tuple.begin(), tuple.begin() + (i - 1));
        outer.push_back(t.output);
        outer.insert(outer.end(), tuple.begin() + (i - 1 + dm), tuple.end());
        for (const auto& u : mu.mu_terms(outer))
          out.push_back({u.output, Parity::of(prefix) + t.sign + u.sign, u.constant, t.constant, i, dm});
      }
    }
  }
  return out;
}

std::string describe(const ChordSet& chords, const CWGenerator& g) {
  return (g.q ? "q" : "") + chords[g.chord].id;
}

std::string describe(const ChordSet& chords, const std::vector<CWGenerator>& tuple) {
  std::string s = "(";
  for (std::size_t k = tuple.size(); k-- > 0;) s += describe(chords, tuple[k]) + (k ? "," : "");
  return s + ")";
}

namespace {

std::vector<std::vector<std::size_t>> candidate_tuples(const AInfinityAlgebra& mu, int d) {
  std::set<std::vector<std::size_t>> out;
  for (auto& t : mu.keyed_tuples(d)) out.insert(t);
  for (int dm = 1; dm <= d; ++dm) {
    const int dp = d + 1 - dm;
    auto outers = mu.keyed_tuples(dp);
    for (const auto& inner : mu.keyed_tuples(dm)) {
      std::set<std::size_t> outs;
      for (const auto& c : mu.constants())
        if (c.inputs == inner) outs.insert(c.output);
      for (const auto& outer : outers)
        for (int i = 1; i <= dp; ++i)
          if (outs.count(outer[i - 1])) {
            std::vector<std::size_t> full(outer.begin(), outer.begin() + (i - 1));
            full.insert(full.end(), inner.begin(), inner.end());
            full.insert(full.end(), outer.begin() + i, outer.end());
            out.insert(full);
          }
    }
  }
  return {out.begin(), out.end()};
}

template <class Visit>
void all_generator_tuples(std::size_t nchords, int d, Visit&& visit) {
  std::vector<CWGenerator> t(d);
  std::function<void(int)> rec = [&](int k) {
    if (k == d) {
      visit(t);
      return;
    }
    for (std::size_t c = 0; c < nchords; ++c)
      for (bool q : {false, true}) {
        t[k] = {c, q};
        rec(k + 1);
      }
  };
  rec(0);
}

void record(ResidualReport& rep, const std::vector<CWGenerator>& tuple, const CWElement& residual) {
  for (const auto& [g, s] : residual)
    if (!s.is_zero()) rep.residuals.push_back({tuple, g, s});
}

}  // namespace

ResidualReport check_ainfty(const AInfinityAlgebra& mu, const CheckOptions& opt) {
  ResidualReport rep;
  auto check_tuple = [&](const std::vector<CWGenerator>& tuple) {
    CWElement sum;
    for (const auto& t : ainfty_terms(mu, tuple)) {
      Scalar c = Scalar::sign(mu.field(), t.sign.odd());
      if (t.outer) c *= mu.constants()[*t.outer].value;
      if (t.inner) c *= mu.constants()[*t.inner].value;
      add_to(sum, c, CWElement{{t.output, Scalar::one(mu.field())}});
    }
    ++rep.tuples_checked;
    record(rep, tuple, sum);
  };
  if (opt.exhaustive) {
    if (2 * mu.chords().size() > opt.max_generators)
      throw std::length_error("exhaustive check capped at " + std::to_string(opt.max_generators) + " generators");
    for (int d = 1; d <= opt.max_d; ++d) all_generator_tuples(mu.chords().size(), d, check_tuple);
    return rep;
  }
  for (int d = 1; d <= opt.max_d; ++d) {
    for (const auto& chords : candidate_tuples(mu, d)) {
      for (std::uint32_t Q = 0; Q < (1u << d); ++Q) {
        std::vector<CWGenerator> tuple;
        for (int k = 0; k < d; ++k) tuple.push_back({chords[k], (Q >> k & 1) != 0});
        check_tuple(tuple);
      }
    }
    if (d == 1)
      for (std::size_t c = 0; c < mu.chords().size(); ++c) {
        bool keyed = false;
        for (const auto& t : mu.keyed_tuples(1)) keyed = keyed || t[0] == c;
        if (!keyed) check_tuple({{c, true}});
      }
  }
  return rep;
}

std::vector<BoundaryTerm> boundary_terms(const ChordSet& chords, int d, const std::vector<int>& F,
                                         const std::vector<int>& w, const std::vector<std::string>& x,
                                         const std::string& x0, const SignConvention& conv) {
  if (static_cast<int>(x.size()) != d || static_cast<int>(w.size()) != d + 1)
    throw std::invalid_argument("need d inputs and d + 1 weights");
  std::vector<int> degs;
  for (const auto& id : x) degs.push_back(chords[chords.index(id)].degree);
  chords.index(x0);
  std::vector<BoundaryTerm> out;
  for (const auto& cut : enumerate_cuts(d, F)) {
    const int dm = cut.d_minus, i = cut.i;
    const int fm = static_cast<int>(cut.F_minus.size());
    int wnew = fm, degnew = 2 - dm - fm;
    for (int k = i; k <= i + dm - 1; ++k) {
      wnew += w[k];
      degnew += degs[k - 1];
    }
    Parity sign = relation_sign(cut, degs, conv);
    for (const auto& y : chords.chords()) {
      if (y.weight != wnew || y.degree != degnew) continue;
      ConstantKey inner{dm, cut.F_minus, {wnew}, {}, y.id};
      for (int k = i; k <= i + dm - 1; ++k) {
        inner.weights.push_back(w[k]);
        inner.inputs.push_back(x[k - 1]);
      }
      ConstantKey outer{cut.d_plus, cut.F_plus, {w[0]}, {}, x0};
      for (int k = 1; k < i; ++k) {
        outer.weights.push_back(w[k]);
        outer.inputs.push_back(x[k - 1]);
      }
      outer.weights.push_back(wnew);
      outer.inputs.push_back(y.id);
      for (int k = i + dm; k <= d; ++k) {
        outer.weights.push_back(w[k]);
        outer.inputs.push_back(x[k - 1]);
      }
      out.push_back({cut, outer, inner, sign});
    }
  }
  return out;
}

Scalar check_boundary_relation(const ConstantsTable& table, const ChordSet& chords, int d, const std::vector<int>& F,
                               const std::vector<int>& w, const std::vector<std::string>& x, const std::string& x0) {
  int want = 3 - d - static_cast<int>(F.size());
  for (const auto& id : x) want += chords[chords.index(id)].degree;
  if (chords[chords.index(x0)].degree != want)
    throw std::invalid_argument("not a virtual dimension one configuration: deg(x^0) should be " + std::to_string(want));
  Scalar sum = Scalar::zero(table.field);
  for (const auto& t : boundary_terms(chords, d, F, w, x, x0)) {
    Scalar a = table.get(t.outer), b = table.get(t.inner);
    if (a.is_zero() || b.is_zero()) continue;
    sum += Scalar::sign(table.field, t.sign.odd()) * a * b;
  }
  return sum;
}

ResidualReport check_homomorphism(const AInfinityAlgebra& source, const AInfinityAlgebra& target,
                                  const AInfinityMorphism& F, const CheckOptions& opt) {
  const Field field = source.field();
  if (!(target.field() == field) || !(F.field() == field)) throw FieldMismatch("homomorphism check across fields");
  std::vector<std::size_t> allowed;
  for (std::size_t c = 0; c < source.chords().size(); ++c)
    if (source.chords()[c].weight >= F.min_weight()) allowed.push_back(c);
  if (2 * allowed.size() > opt.max_generators)
    throw std::length_error("homomorphism check capped at " + std::to_string(opt.max_generators) + " generators");
  ResidualReport rep;
  auto single = [&](const CWGenerator& g) { return CWElement{{g, Scalar::one(field)}}; };
  for (int d = 1; d <= opt.max_d; ++d) {
    std::vector<CWGenerator> tuple(d);
    std::function<void(int)> rec = [&](int k) {
      if (k < d) {
        for (auto c : allowed)
          for (bool q : {false, true}) {
            tuple[k] = {c, q};
            rec(k + 1);
          }
        return;
      }
      CWElement lhs, rhs;
      // Compositions d = d_1 + ... + d_r, d_1 acting on the rightmost inputs.
      std::function<void(int, std::vector<CWElement>&)> parts = [&](int start, std::vector<CWElement>& acc) {
        if (start == d) {
          add_to(lhs, Scalar::one(field), target.mu(acc));
          return;
        }
        for (int len = 1; start + len <= d; ++len) {
          std::vector<CWGenerator> sub(tuple.begin() + start, tuple.begin() + start + len);
          CWElement e = F.apply(sub);
          if (e.empty()) continue;
          acc.push_back(std::move(e));
          parts(start + len, acc);
          acc.pop_back();
        }
      };
      std::vector<CWElement> acc;
      parts(0, acc);
      for (int dm = 1; dm <= d; ++dm)
        for (int i = 1; i + dm - 1 <= d; ++i) {
          long prefix = 0;
          for (int j = 1; j < i; ++j) prefix += source.degree(tuple[j - 1]) - 1;
          std::vector<CWGenerator> inner(tuple.begin() + (i - 1), tuple.begin() + (i - 1 + dm));
          CWElement m = source.mu(inner);
          if (m.empty()) continue;
          std::vector<CWElement> args;
          for (int j = 1; j < i; ++j) args.push_back(single(tuple[j - 1]));
          args.push_back(std::move(m));
          for (int j = i + dm; j <= d; ++j) args.push_back(single(tuple[j - 1]));
          add_to(rhs, Scalar::sign(field, prefix % 2 != 0), F.apply(args));
        }
      add_to(lhs, Scalar(field, -1L), rhs);
      ++rep.tuples_checked;
      record(rep, tuple, lhs);
    };
    rec(0);
  }
  return rep;
}

}  // namespace wfloer
