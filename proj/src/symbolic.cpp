#include "wfloer/symbolic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace wfloer {

std::string Pattern::to_string() const {
  std::ostringstream os;
  os << outer << " o_" << slot << " " << inner;
  return os.str();
}

std::string to_string(const FormalSum& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : s) {
    if (c == 0) continue;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (std::labs(c) != 1) os << std::labs(c) << "*";
    os << "[" << p.to_string() << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

std::string chord_name(int w, int deg) { return "y" + std::to_string(w) + "_" + std::to_string(deg); }

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    std::vector<int> s;
    for (int k = 1; k <= n; ++k)
      if (m >> (k - 1) & 1) s.push_back(k);
    out.push_back(s);
  }
  return out;
}

void bump(FormalSum& s, const Pattern& p, long c) {
  long& v = s[p];
  v += c;
  if (v == 0) s.erase(p);
}

}  // namespace

std::string SymbolicUniverse::output(int nf) const {
  const int d = config.d();
  int deg = 3 - d - nf;
  for (int x : config.degrees) deg += x;
  return chord_name(d * config.nu + nf, deg);
}

std::vector<int> SymbolicUniverse::weights(int nf) const {
  std::vector<int> w{config.d() * config.nu + nf};
  for (int k = 0; k < config.d(); ++k) w.push_back(config.nu);
  return w;
}

SymbolicUniverse build_universe(const SymbolicConfig& cfg) {
  const int d = cfg.d();
  if (d < 1 || d > kSymbolicMaxD)
    throw std::length_error("symbolic expansion supports 1 <= d <= " + std::to_string(kSymbolicMaxD));
  if (cfg.nu < 1) throw std::invalid_argument("nu must be positive");
  SymbolicUniverse u;
  u.config = cfg;
  for (int k = 1; k <= d; ++k) {
    u.inputs.push_back("x" + std::to_string(k));
    u.chords.add({u.inputs.back(), cfg.nu, cfg.degrees[k - 1], {}, {}, {}, {}, {}});
  }
  auto ensure = [&](int w, int deg) {
    std::string id = chord_name(w, deg);
    if (!u.chords.find(id)) u.chords.add({id, w, deg, {}, {}, {}, {}, {}});
  };
  int total = std::accumulate(cfg.degrees.begin(), cfg.degrees.end(), 0);
  for (int a = 1; a <= d; ++a) {
    int sd = 0;
    for (int b = a; b <= d; ++b) {
      sd += cfg.degrees[b - 1];
      const int L = b - a + 1;
      for (int s = 0; s <= L; ++s) ensure(L * cfg.nu + s, sd + 2 - L - s);
    }
  }
  for (int s = 0; s <= d; ++s) ensure(d * cfg.nu + s, total + 3 - d - s);

  auto candidates = [&](int w, int deg) {
    std::vector<std::string> out;
    for (const auto& c : u.chords.chords())
      if (c.weight == w && c.degree == deg) out.push_back(c.id);
    return out;
  };
  auto add_keys = [&](const std::vector<std::string>& in) {
    const int n = static_cast<int>(in.size());
    int w = 0, deg = 2 - n;
    std::vector<int> ws{0};
    for (const auto& id : in) {
      const auto& c = u.chords[u.chords.index(id)];
      w += c.weight;
      deg += c.degree;
      ws.push_back(c.weight);
    }
    for (const auto& F : subsets(n)) {
      const int nf = static_cast<int>(F.size());
      ws[0] = w + nf;
      for (const auto& out : candidates(w + nf, deg - nf))
        u.table.set({n, F, ws, in, out}, Scalar::one(u.table.field));
    }
  };
  for (int a = 1; a <= d; ++a)
    for (int b = a; b <= d; ++b) {
      std::vector<std::string> inner(u.inputs.begin() + (a - 1), u.inputs.begin() + b);
      add_keys(inner);
      int w = 0, deg = 2 - (b - a + 1);
      for (int k = a; k <= b; ++k) {
        w += cfg.nu;
        deg += cfg.degrees[k - 1];
      }
      std::set<std::string> ys;
      for (int s = 0; s <= b - a + 1; ++s)
        for (const auto& y : candidates(w + s, deg - s)) ys.insert(y);
      for (const auto& y : ys) {
        std::vector<std::string> outer(u.inputs.begin(), u.inputs.begin() + (a - 1));
        outer.push_back(y);
        outer.insert(outer.end(), u.inputs.begin() + b, u.inputs.end());
        add_keys(outer);
      }
    }
  return u;
}

std::map<CWGenerator, FormalSum> expand_as(const SymbolicUniverse& u, std::uint32_t q_mask,
                                           const SignConvention& conv) {
  AInfinityAlgebra mu(u.chords, u.table, conv);
  std::vector<CWGenerator> tuple;
  for (int k = 1; k <= u.config.d(); ++k) tuple.push_back({u.chords.index(u.inputs[k - 1]), (q_mask >> (k - 1) & 1) != 0});
  std::map<CWGenerator, FormalSum> out;
  for (const auto& t : ainfty_terms(mu, tuple)) {
    Pattern p;
    if (t.outer && t.inner) {
      p = {mu.constants()[*t.outer].key.to_string(), mu.constants()[*t.inner].key.to_string(), t.slot, t.d_minus};
    } else if (t.outer || t.inner) {
      // A single constant next to the bare term: the same monomial wherever the bare term sits.
      p = {mu.constants()[t.outer ? *t.outer : *t.inner].key.to_string(), "-", 0, 0};
    } else {
      p = {"-", "-", 0, 0};
    }
    bump(out[t.output], p, t.sign.factor());
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

FormalSum relation(const SymbolicUniverse& u, const std::vector<int>& F, const std::string& x0,
                   const SignConvention& conv) {
  FormalSum s;
  for (const auto& t : boundary_terms(u.chords, u.config.d(), F, u.weights(static_cast<int>(F.size())), u.inputs, x0, conv))
    bump(s, {t.outer.to_string(), t.inner.to_string(), t.cut.i, t.cut.d_minus}, t.sign.factor());
  return s;
}

std::vector<FormalSum> relation_basis(const SymbolicUniverse& u, std::uint32_t q_mask, const SignConvention& conv) {
  std::vector<FormalSum> out;
  for (const auto& F : subsets(u.config.d())) {
    std::uint32_t m = 0;
    for (int f : F) m |= 1u << (f - 1);
    if ((m & q_mask) != m) continue;
    auto r = relation(u, F, u.output(static_cast<int>(F.size())), conv);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

FormalSum reduce(const FormalSum& expansion, const std::vector<FormalSum>& basis) {
  std::map<Pattern, std::size_t> index;
  std::vector<Pattern> names;
  auto vec = [&](const FormalSum& s) {
    SparseVector v;
    for (const auto& [p, c] : s) {
      auto [it, fresh] = index.emplace(p, names.size());
      if (fresh) names.push_back(p);
      v[it->second] = Scalar(Field::rationals(), c);
    }
    return v;
  };
  EchelonBasis eb(Field::rationals());
  for (const auto& b : basis) eb.insert(vec(b));
  SparseVector r = eb.reduce(vec(expansion));
  // Cleared of denominators; only the residual's support and ratios matter.
  mpz_class den = 1;
  for (const auto& [i, s] : r) den = lcm(den, mpz_class(s.value().get_den()));
  FormalSum out;
  for (const auto& [i, s] : r) {
    if (s.is_zero()) continue;
    mpq_class v = s.value() * den;
    out[names[i]] = mpz_class(v.get_num()).get_si();
  }
  return out;
}

std::size_t Certificate::nonzero() const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.residual.empty() ? 0 : 1;
  return n;
}

std::vector<std::string> Certificate::render() const {
  std::vector<std::string> out;
  for (const auto& l : lines)
    out.push_back(l.config + " output=" + l.output + " support=" + std::to_string(l.support) +
                  " residual=" + to_string(l.residual));
  return out;
}

namespace {

std::string config_name(const SymbolicConfig& c, std::uint32_t q_mask) {
  std::ostringstream os;
  os << "d=" << c.d() << " deg=(";
  for (int k = 0; k < c.d(); ++k) os << (k ? "," : "") << c.degrees[k];
  os << ") nu=" << c.nu << " q={";
  bool first = true;
  for (int k = 1; k <= c.d(); ++k)
    if (q_mask >> (k - 1) & 1) {
      os << (first ? "" : ",") << k;
      first = false;
    }
  os << "}";
  return os.str();
}

void certify_mask(const SymbolicUniverse& u, std::uint32_t q_mask, const SignConvention& ec,
                  const SignConvention& rc, Certificate& cert) {
  auto basis = relation_basis(u, q_mask, rc);
  for (const auto& [g, sum] : expand_as(u, q_mask, ec))
    cert.lines.push_back({config_name(u.config, q_mask), describe(u.chords, g), sum.size(), reduce(sum, basis)});
}

}  // namespace

Certificate certify(const SymbolicConfig& config, const SignConvention& ec, const SignConvention& rc) {
  auto u = build_universe(config);
  Certificate cert;
  for (std::uint32_t m = 0; m < (1u << config.d()); ++m) certify_mask(u, m, ec, rc, cert);
  return cert;
}

Certificate certify(const SymbolicConfig& config, const std::vector<int>& F, const SignConvention& ec,
                    const SignConvention& rc) {
  auto u = build_universe(config);
  std::uint32_t m = 0;
  for (int f : F) {
    if (f < 1 || f > config.d()) throw std::invalid_argument("F must be a subset of 1..d");
    m |= 1u << (f - 1);
  }
  Certificate cert;
  certify_mask(u, m, ec, rc, cert);
  return cert;
}

namespace {

std::string set_str(const std::vector<int>& F) {
  std::string s = "{";
  for (std::size_t k = 0; k < F.size(); ++k) s += (k ? "," : "") + std::to_string(F[k]);
  return s + "}";
}

std::string cut_key(int dp, const std::vector<int>& Fp, int dm, const std::vector<int>& Fm, int i) {
  return std::to_string(dp) + set_str(Fp) + "|" + std::to_string(dm) + set_str(Fm) + "|" + std::to_string(i);
}

}  // namespace

std::map<std::string, int> displayed_relation(int d, const std::vector<int>& degrees) {
  if (d == 1) return {{cut_key(1, {1}, 1, {}, 1), 1}, {cut_key(1, {}, 1, {1}, 1), -1}};
  if (d != 2 || degrees.size() != 2) throw std::invalid_argument("only d = 1 and d = 2 are tabulated");
  return {
      {cut_key(1, {1}, 2, {1}, 1), -1},
      {cut_key(1, {1}, 2, {2}, 1), 1},
      {cut_key(2, {1}, 1, {1}, 2), 1},
      {cut_key(2, {2}, 1, {1}, 1), -1},
      {cut_key(1, {}, 2, {1, 2}, 1), 1},
      {cut_key(2, {1, 2}, 1, {}, 2), -1},
      {cut_key(2, {1, 2}, 1, {}, 1), (degrees[1] + 1) % 2 == 0 ? 1 : -1},
  };
}

std::vector<std::string> compare_displayed(const SymbolicConfig& config, const SignConvention& conv) {
  const int d = config.d();
  if (d > 2) return {};
  auto u = build_universe(config);
  std::vector<int> F(d);
  std::iota(F.begin(), F.end(), 1);
  auto want = displayed_relation(d, config.degrees);
  std::map<std::string, int> got;
  std::vector<std::string> out;
  for (const auto& t : boundary_terms(u.chords, d, F, u.weights(d), u.inputs, u.output(d), conv)) {
    auto key = cut_key(t.cut.d_plus, t.cut.F_plus, t.cut.d_minus, t.cut.F_minus, t.cut.i);
    auto [it, fresh] = got.emplace(key, t.sign.factor());
    if (!fresh && it->second != t.sign.factor()) out.push_back("inconsistent sign across x_new at " + key);
  }
  for (const auto& [k, s] : want) {
    auto it = got.find(k);
    if (it == got.end()) out.push_back("missing term " + k);
    else if (it->second != s)
      out.push_back("sign of " + k + ": got " + std::to_string(it->second) + ", displayed " + std::to_string(s));
  }
  for (const auto& [k, s] : got)
    if (!want.count(k)) out.push_back("extra term " + k);
  return out;
}

std::vector<Mutation> single_summand_mutations() {
  using S = SignConvention;
  std::vector<Mutation> out;
  const std::pair<const char*, std::uint32_t> star[] = {{"star: sum j deg(x_j)", S::star_positional},
                                                        {"star: q passing", S::star_q_passing}};
  for (const auto& [name, bit] : star) {
    Mutation m{name, {}, true};
    m.conv.star &= ~bit;
    out.push_back(m);
  }
  const std::pair<const char*, std::uint32_t> aleph[] = {
      {"aleph: d_- i", S::aleph_dminus_i},         {"aleph: i", S::aleph_i},
      {"aleph: 1", S::aleph_one},                  {"aleph: d_+ |F_-|", S::aleph_dplus_fminus},
      {"aleph: trailing degrees", S::aleph_trailing}, {"aleph: crossings", S::aleph_cross}};
  for (const auto& [name, bit] : aleph) {
    Mutation m{name, {}, false};
    m.conv.aleph &= ~bit;
    out.push_back(m);
  }
  return out;
}

MutationResult run_mutation(const Mutation& m, const std::vector<SymbolicConfig>& suite) {
  MutationResult r{m.name, 0, 0};
  const SignConvention def;
  for (const auto& c : suite) {
    r.residuals += certify(c, m.in_expansion ? m.conv : def, m.in_expansion ? def : m.conv).nonzero();
    if (c.d() <= 2) r.displayed_mismatches += compare_displayed(c, m.in_expansion ? def : m.conv).size();
  }
  return r;
}

std::size_t undetected_term_flips(const SymbolicConfig& config, const std::vector<int>& F) {
  auto u = build_universe(config);
  std::uint32_t mask = 0;
  for (int f : F) mask |= 1u << (f - 1);
  auto basis = relation_basis(u, mask);
  auto expansion = expand_as(u, mask);
  auto target = relation(u, F, u.output(static_cast<int>(F.size())));
  std::size_t bi = 0;
  while (bi < basis.size() && basis[bi] != target) ++bi;
  if (bi == basis.size()) throw std::logic_error("relation for F not in basis");
  std::size_t undetected = 0;
  for (const auto& [p, c] : target) {
    auto mutated = basis;
    mutated[bi][p] = -c;
    bool caught = false;
    for (const auto& [g, sum] : expansion) caught = caught || !reduce(sum, mutated).empty();
    if (!caught) ++undetected;
  }
  return undetected;
}

std::vector<SymbolicConfig> default_suite(int max_d, const std::vector<int>& values, int nu) {
  std::vector<SymbolicConfig> out;
  for (int d = 1; d <= max_d; ++d) {
    std::vector<int> degs(d, 0);
    std::function<void(int)> rec = [&](int k) {
      if (k == d) {
        out.push_back({degs, nu});
        return;
      }
      for (int v : values) {
        degs[k] = v;
        rec(k + 1);
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace wfloer
