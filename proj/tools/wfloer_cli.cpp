#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "wfloer/ainfty.hpp"
#include "wfloer/cascade.hpp"
#include "wfloer/io.hpp"
#include "wfloer/popsicle.hpp"
#include "wfloer/restriction.hpp"
#include "wfloer/signs.hpp"
#include "wfloer/symbolic.hpp"
#include "wfloer/telescope.hpp"

using namespace wfloer;

namespace {

// Malformed input, as opposed to a failed check.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> int_list(const std::string& s) {
  try {
    return parse_int_list(s);
  } catch (const std::exception&) {
    throw InputError("bad integer list '" + s + "'");
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

Flavour flavour_arg(int d, const std::string& p) {
  try {
    return Flavour::make(d, int_list(p));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

void print_violations(const ValidationReport& r) {
  for (const auto& v : r.violations) std::cout << "violation " << v.kind << " key=" << v.key.to_string() << " " << v.message << "\n";
}

int cmd_strata(int d, const std::string& p, bool dot) {
  Flavour fl = flavour_arg(d, p);
  auto poset = face_poset(fl);
  if (dot) {
    std::cout << poset.to_dot();
    return 0;
  }
  std::cout << "flavour: " << fl.to_string() << "\n";
  std::cout << "dimension: " << popsicle_dimension(fl) << "\n";
  std::cout << "f-vector: " << join(f_vector(poset.strata)) << "\n";
  std::cout << "euler: " << euler_characteristic(poset.strata) << "\n";
  for (std::size_t k = 0; k < poset.strata.size(); ++k)
    std::cout << "stratum " << k << " codim=" << poset.strata[k].codim() << " " << poset.strata[k].encode() << "\n";
  for (const auto& [a, b] : poset.covers) std::cout << "cover " << a << " < " << b << "\n";
  auto group = symmetry_group(fl);
  std::cout << "symmetry order: " << group.size() << "\n";
  std::map<int, std::map<std::size_t, int>> by_codim;
  for (const auto& o : orbits(poset.strata, group)) {
    ++by_codim[poset.strata[o[0]].codim()][o.size()];
    if (o.size() > 1) std::cout << "orbit codim=" << poset.strata[o[0]].codim() << " strata=" << join(o) << "\n";
  }
  for (const auto& [c, sizes] : by_codim) {
    std::cout << "orbit sizes codim=" << c << ":";
    for (const auto& [s, n] : sizes) std::cout << " " << n << "x" << s;
    std::cout << "\n";
  }
  return 0;
}

int cmd_cascades(int d, const std::string& p, int max_codim, const std::string& w) {
  Flavour fl = flavour_arg(d, p);
  std::cout << "flavour: " << fl.to_string() << "\n";
  std::cout << "dimension: " << cascade_dimension(fl) << "\n";
  auto comps = enumerate_components(fl);
  std::cout << "components: " << comps.size() << "\n";
  for (const auto& c : comps)
    std::cout << "component " << c.encode() << " faces=" << join(order_polytope_face_counts(c)) << "\n";
  for (const auto& s : enumerate_cascade_strata(fl, max_codim)) std::cout << "stratum codim=" << s.codim() << " " << s.encode() << "\n";
  if (!w.empty()) {
    auto ends = classify_ends(fl, int_list(w));
    std::size_t breaking = 0, rho_one = 0;
    for (const auto& e : ends) {
      (e.kind == EndPattern::Kind::breaking ? breaking : rho_one) += 1;
      std::cout << "end " << e.describe() << (e.symmetric() ? " (cancels by symmetry)" : "") << "\n";
    }
    std::cout << "ends: breaking=" << breaking << " rho=1=" << rho_one << "\n";
  }
  return 0;
}

int cmd_cuts(int d, const std::string& F, const std::string& deg) {
  auto Fs = int_list(F);
  std::vector<int> degs = deg.empty() ? std::vector<int>(d, 0) : int_list(deg);
  if (static_cast<int>(degs.size()) != d) throw InputError("need one degree per input");
  std::vector<Cut> cuts;
  try {
    cuts = enumerate_cuts(d, Fs);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  int bad = 0;
  for (const auto& c : cuts) {
    std::cout << "cut " << c.to_string() << " relation=" << (relation_sign(c, degs).odd() ? "-" : "+");
    if (c.stable()) {
      Parity a = sign_aleph(c, degs), b = aleph_via_triangle(c, degs);
      std::cout << " aleph=" << a.odd() << " triangle=" << sign_triangle(c).odd() << " via-triangle=" << b.odd();
      if (!(a == b)) {
        std::cout << " MISMATCH";
        ++bad;
      }
    } else {
      std::cout << " strip";
    }
    std::cout << "\n";
  }
  std::cout << "cuts: " << cuts.size() << "\n";
  return bad ? 1 : 0;
}

int cmd_assemble(const std::string& path) {
  Document doc = read_document(path);
  auto r = validate(doc.table, doc.chords);
  print_violations(r);
  std::cout << "constants: " << doc.table.entries.size() << " chords: " << doc.chords.size() << " field: " << doc.field.describe() << "\n";
  if (!r.valid()) {
    std::cout << "valid: no\n";
    return 1;
  }
  AInfinityAlgebra mu(doc.chords, doc.table);
  std::map<std::pair<int, std::size_t>, int> digest;
  for (const auto& c : mu.constants()) ++digest[{c.key.d, c.key.F.size()}];
  for (const auto& [k, n] : digest) std::cout << "operation d=" << k.first << " |F|=" << k.second << " constants=" << n << "\n";
  std::cout << "max arity: " << mu.max_arity() << "\n";
  std::cout << "valid: yes\n";
  return 0;
}

void print_residuals(const ChordSet& in, const ChordSet& out, const ResidualReport& r, const std::string& tag) {
  for (const auto& x : r.residuals)
    std::cout << tag << " inputs=" << describe(in, x.inputs) << " output=" << describe(out, x.output) << " residual=" << x.value.to_string() << "\n";
  std::cout << tag << " tuples=" << r.tuples_checked << " nonzero=" << r.residuals.size() << "\n";
}

int cmd_check(const std::string& path, int max_d, bool exhaustive) {
  Document doc = read_document(path);
  auto r = validate(doc.table, doc.chords);
  if (!r.valid()) {
    print_violations(r);
    return 1;
  }
  AInfinityAlgebra mu(doc.chords, doc.table);
  CheckOptions opt;
  opt.max_d = max_d;
  opt.exhaustive = exhaustive;
  auto rep = check_ainfty(mu, opt);
  print_residuals(doc.chords, doc.chords, rep, "ainfty");
  return rep.ok() ? 0 : 1;
}

ConstantsTable merged(const Document& a, const Document& b, const Document& c) {
  ConstantsTable t;
  t.field = a.field;
  for (const Document* d : {&a, &b, &c}) {
    if (!(d->field == a.field)) throw InputError("field mismatch between input files");
    for (const auto& [k, v] : d->table.entries) {
      if (t.entries.count(k)) throw InputError("constant given twice: " + k.to_string());
      t.entries.emplace(k, v);
    }
  }
  return t;
}

int cmd_telescope(const std::string& chords, const std::string& delta, const std::string& kappa, int W, int nu) {
  Document dc = read_document(chords), dd = read_document(delta), dk = read_document(kappa);
  ConstantsTable t = merged(dc, dd, dk);
  TelescopeData data = telescope_data_from_table(dc.chords, t, W);
  data.validate();
  bool ok = true;
  auto tc = build_telescope(data, W, TelescopeMode::truncated);
  for (const auto& [deg, b] : tc.homology()) std::cout << "homology degree=" << deg << " rank=" << b << "\n";
  auto emit = [&](const LemmaReport& r, const std::string& name) {
    for (const auto& l : r.lines) std::cout << name << " " << l << "\n";
    std::cout << name << ": " << (r.ok ? "pass" : "FAIL") << "\n";
    ok = ok && r.ok;
  };
  if (nu > 0) {
    emit(check_partial_forget(data, W, nu), "partial-forget nu=" + std::to_string(nu));
  } else {
    for (int n = 1; n <= W; ++n) emit(check_partial_forget(data, W, n), "partial-forget nu=" + std::to_string(n));
  }
  emit(check_quotients_acyclic(data, W), "quotients-acyclic");
  emit(check_homotopy_limit(data, W), "homotopy-limit");
  return ok ? 0 : 1;
}

int cmd_restrict(const std::string& mpath, const std::string& minpath, const std::string& qpath, int max_d) {
  Document dm = read_document(mpath), din = read_document(minpath), dq = read_document(qpath);
  if (!(dm.field == din.field) || !(dm.field == dq.field)) throw InputError("field mismatch between input files");
  bool ok = true;
  auto vm = validate(dm.table, dm.chords), vin = validate(din.table, din.chords);
  QConstantsTable q{dq.table, dq.formal_points};
  auto vq = validate_q(q, dm.chords, din.chords);
  print_violations(vm);
  print_violations(vin);
  print_violations(vq);
  if (!vm.valid() || !vin.valid() || !vq.valid()) return 1;
  auto qr = check_q_relations(dm.table, dm.chords, din.table, din.chords, q);
  for (const auto& l : qr.lines()) std::cout << l << "\n";
  std::cout << "q-relations evaluated=" << qr.evaluated << " nonzero=" << qr.residuals.size() << "\n";
  ok = ok && qr.ok();
  AInfinityAlgebra A(dm.chords, dm.table), B(din.chords, din.table);
  auto F = assemble_F(q, dm.chords, din.chords);
  CheckOptions opt;
  opt.max_d = max_d;
  auto hr = check_homomorphism(A, B, F, opt);
  print_residuals(dm.chords, din.chords, hr, "homomorphism");
  ok = ok && hr.ok();
  std::optional<ActionProfile> profile;
  try {
    profile = ActionProfile::from_chords(dm.chords);
    std::cout << "nu: " << nu_threshold(*profile) << "\n";
  } catch (const std::exception& e) {
    std::cout << "nu: skipped (" << e.what() << ")\n";
  }
  if (profile) {
    std::set<std::tuple<int, std::vector<int>, std::vector<int>, std::string>> seen;
    for (const auto& [k, v] : dq.table.entries) {
      if (!seen.insert({k.d, k.F, k.weights, k.output}).second) continue;
      std::string value;
      try {
        value = rho_threshold(*profile, k.d, k.F, k.weights, k.output).get_str();
      } catch (const std::exception& e) {
        value = std::string("skipped (") + e.what() + ")";
      }
      std::cout << "rho* key=" << k.to_string() << " value=" << value << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_symbolic(int d, const std::string& F, const std::string& deg, int nu, bool mutations) {
  auto Fs = int_list(F);
  for (int f : Fs)
    if (f < 1 || f > d) throw InputError("F must be a subset of 1..d");
  if (d < 1 || d > kSymbolicMaxD) throw InputError("d must lie in 1.." + std::to_string(kSymbolicMaxD));
  std::vector<SymbolicConfig> configs;
  std::vector<int> nus = nu > 0 ? std::vector<int>{nu} : std::vector<int>{1, 2};
  for (int n : nus) {
    if (!deg.empty()) {
      auto degs = int_list(deg);
      if (static_cast<int>(degs.size()) != d) throw InputError("need one degree per input");
      configs.push_back({degs, n});
    } else {
      for (const auto& c : default_suite(d, {0, 1, 2}, n))
        if (c.d() == d) configs.push_back(c);
    }
  }
  std::size_t nonzero = 0, lines = 0;
  for (const auto& c : configs) {
    auto cert = certify(c, Fs);
    for (const auto& l : cert.render()) std::cout << l << "\n";
    nonzero += cert.nonzero();
    lines += cert.lines.size();
    for (const auto& m : compare_displayed(c)) {
      std::cout << "displayed mismatch " << m << "\n";
      ++nonzero;
    }
  }
  std::cout << "certificate lines=" << lines << " nonzero=" << nonzero << "\n";
  if (mutations) {
    auto suite = default_suite(3, {0, 1, 2}, 1);
    for (const auto& m : single_summand_mutations()) {
      auto r = run_mutation(m, suite);
      std::cout << "mutation '" << r.name << "' residuals=" << r.residuals << " displayed=" << r.displayed_mismatches
                << (r.detected() ? " detected" : " UNDETECTED") << "\n";
    }
  }
  return nonzero ? 1 : 0;
}

int cmd_annulus(const std::string& in, const std::string& out) {
  AnnulusReport r;
  try {
    r = annulus_obstruction(int_list(in), int_list(out));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  for (const auto& m : r.mismatches) std::cout << "mismatch " << m << "\n";
  std::cout << "obstruction: " << (r.obstruction ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Popsicle moduli, wrapped Floer A-infinity structures and restriction maps"};
  app.require_subcommand(1);

  int d = 0, max_codim = 2, max_d = 4, W = 0, nu = 0;
  std::string p, F, deg, w, file, chords, delta, kappa, m, m_in, q, in_blocks, out_blocks;
  bool dot = false, exhaustive = false, mutations = false;

  auto* strata = app.add_subcommand("strata", "Strata of the compactified popsicle moduli space");
  strata->add_option("--d", d, "number of inputs")->required();
  strata->add_option("--p", p, "flavour: p_f for each sprinkle, comma separated")->required();
  strata->add_flag("--dot", dot, "emit the face poset as DOT");

  auto* cascades = app.add_subcommand("cascades", "Components and strata of cascade moduli");
  cascades->add_option("--d", d)->required();
  cascades->add_option("--p", p)->required();
  cascades->add_option("--max-codim", max_codim);
  cascades->add_option("--w", w, "weights w^0,...,w^d: also classify ends");

  auto* cuts = app.add_subcommand("cuts", "Admissible cuts and their signs");
  cuts->add_option("--d", d)->required();
  cuts->add_option("--F", F)->required();
  cuts->add_option("--deg", deg, "degrees of x^1..x^d");

  auto* assemble = app.add_subcommand("assemble", "Validate a constants file and summarize operations");
  assemble->add_option("--constants", file)->required();

  auto* check = app.add_subcommand("check-ainfty", "Evaluate the A-infinity equations");
  check->add_option("--constants", file)->required();
  check->add_option("--max-d", max_d);
  check->add_flag("--exhaustive", exhaustive);

  auto* tele = app.add_subcommand("telescope", "Telescope homology and lemma checks");
  tele->add_option("--chords", chords)->required();
  tele->add_option("--delta", delta)->required();
  tele->add_option("--kappa", kappa)->required();
  tele->add_option("--W", W)->required()->check(CLI::PositiveNumber);
  tele->add_option("--nu", nu);

  auto* restrict_cmd = app.add_subcommand("restrict", "Restriction map checks");
  restrict_cmd->add_option("--m", m)->required();
  restrict_cmd->add_option("--m-in", m_in)->required();
  restrict_cmd->add_option("--q", q)->required();
  restrict_cmd->add_option("--max-d", max_d);

  auto* sym = app.add_subcommand("symbolic", "Reduction certificate for the A-infinity equations");
  sym->add_option("--d", d)->required();
  sym->add_option("--F", F)->required();
  sym->add_option("--deg", deg);
  sym->add_option("--nu", nu);
  sym->add_flag("--mutations", mutations);

  auto* ann = app.add_subcommand("annulus", "Corner dimension obstruction for block decompositions");
  ann->add_option("--in", in_blocks)->required();
  ann->add_option("--out", out_blocks)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*strata) return cmd_strata(d, p, dot);
    if (*cascades) return cmd_cascades(d, p, max_codim, w);
    if (*cuts) return cmd_cuts(d, F, deg);
    if (*assemble) return cmd_assemble(file);
    if (*check) return cmd_check(file, max_d, exhaustive);
    if (*tele) return cmd_telescope(chords, delta, kappa, W, nu);
    if (*restrict_cmd) return cmd_restrict(m, m_in, q, max_d);
    if (*sym) return cmd_symbolic(d, F, deg, nu, mutations);
    if (*ann) return cmd_annulus(in_blocks, out_blocks);
  } catch (const InvalidTable& e) {
    print_violations(e.report());
    std::cout << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnresolvedChord& e) {
    std::cerr << "error: unresolved chord " << e.what() << "\n";
    return 2;
  } catch (const NotADifferential& e) {
    std::cout << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotAChainMap& e) {
    std::cout << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
