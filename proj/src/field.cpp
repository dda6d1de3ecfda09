#include "wfloer/field.hpp"

#include <sstream>

namespace wfloer {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

mpz_class mod_p(const mpz_class& a, std::uint32_t p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31: " + std::to_string(p));
  return Field(p);
}

std::string Field::describe() const {
  return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(Field f, long v) : field_(f), v_(v) { normalize(); }

Scalar::Scalar(Field f, const mpq_class& v) : field_(f), v_(v) { normalize(); }

void Scalar::normalize() {
  v_.canonicalize();
  if (field_.is_rational()) return;
  const auto p = field_.characteristic();
  mpz_class num = mod_p(v_.get_num(), p);
  mpz_class den = mod_p(v_.get_den(), p);
  if (den == 0) throw std::domain_error("denominator not invertible mod " + std::to_string(p));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  v_ = mpq_class(mod_p(num * inv, p));
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalar field mismatch: " + field_.describe() + " vs " + o.field_.describe());
}

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-v_)); }

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  v_ += o.v_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  v_ -= o.v_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  v_ *= o.v_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  *this *= o.inverse();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Scalar(field_, mpq_class(1 / v_));
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return v_.get_str();
  return v_.get_num().get_str() + " mod " + std::to_string(field_.characteristic());
}

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string s(text);
  auto trim = [](std::string t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  s = trim(s);
  auto bad = [&]() { return std::invalid_argument("malformed scalar: '" + std::string(text) + "'"); };
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto mpos = s.find(" mod ");
  if (mpos != std::string::npos) {
    std::string a = trim(s.substr(0, mpos)), p = trim(s.substr(mpos + 5));
    if (!is_int(a) || !is_int(p)) throw bad();
    if (f.is_rational() || mpz_class(p) != f.characteristic())
      throw std::invalid_argument("scalar '" + s + "' does not belong to " + f.describe());
    return Scalar(f, mpq_class(mpz_class(a[0] == '+' ? a.substr(1) : a)));
  }
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num = num.substr(1);
  mpz_class dz(den);
  if (dz == 0) throw bad();
  return Scalar(f, mpq_class(mpz_class(num), dz));
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

bool is_zero(const SparseVector& v) {
  for (const auto& [k, s] : v)
    if (!s.is_zero()) return false;
  return true;
}

GradedModule::GradedModule(std::vector<Generator> gens) {
  for (auto& g : gens) add(std::move(g));
}

std::size_t GradedModule::add(Generator g) {
  if (index_.count(g.id)) throw std::invalid_argument("duplicate generator id: " + g.id);
  index_[g.id] = gens_.size();
  gens_.push_back(std::move(g));
  return gens_.size() - 1;
}

std::optional<std::size_t> GradedModule::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedModule::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown generator id: " + id);
  return it->second;
}

std::vector<int> GradedModule::degrees_present() const {
  std::map<int, bool> seen;
  for (const auto& g : gens_) seen[g.degree] = true;
  std::vector<int> out;
  for (const auto& [d, _] : seen) out.push_back(d);
  return out;
}

SparseMap::SparseMap(Field f, std::size_t rows, std::size_t cols, int shift)
    : field_(f), rows_(rows), cols_(cols), shift_(shift) {}

void SparseMap::add(std::size_t row, std::size_t col, const Scalar& s) {
  if (row >= rows_ || col >= cols_.size()) throw std::out_of_range("sparse map index out of range");
  if (!(s.field() == field_)) throw FieldMismatch("entry field differs from map field");
  SparseVector e{{row, s}};
  axpy(cols_[col], Scalar::one(field_), e);
}

Scalar SparseMap::at(std::size_t row, std::size_t col) const {
  const auto& c = cols_.at(col);
  auto it = c.find(row);
  return it == c.end() ? Scalar::zero(field_) : it->second;
}

SparseVector SparseMap::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [k, s] : v) axpy(out, s, cols_.at(k));
  return out;
}

bool SparseMap::is_zero() const {
  for (const auto& c : cols_)
    if (!wfloer::is_zero(c)) return false;
  return true;
}

std::size_t SparseMap::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseMap::check_degrees(const GradedModule& source, const GradedModule& target) const {
  if (source.size() != cols() || target.size() != rows_)
    throw std::invalid_argument("map shape does not match modules");
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, s] : cols_[j])
      if (target[i].degree - source[j].degree != shift_)
        throw std::invalid_argument("entry " + source[j].id + " -> " + target[i].id + " violates degree shift " +
                                    std::to_string(shift_));
}

SparseMap SparseMap::identity(Field f, std::size_t n) {
  SparseMap m(f, n, n, 0);
  for (std::size_t i = 0; i < n; ++i) m.add(i, i, Scalar::one(f));
  return m;
}

SparseMap compose(const SparseMap& after, const SparseMap& before) {
  if (after.cols() != before.rows()) throw std::invalid_argument("compose: shape mismatch");
  SparseMap out(before.field_, after.rows(), before.cols(), after.shift_ + before.shift_);
  for (std::size_t j = 0; j < before.cols(); ++j) out.cols_[j] = after.apply(before.cols_[j]);
  return out;
}

SparseMap operator+(const SparseMap& a, const SparseMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  SparseMap out = a;
  for (std::size_t j = 0; j < b.cols(); ++j) axpy(out.cols_[j], Scalar::one(a.field_), b.cols_[j]);
  return out;
}

SparseMap operator*(const Scalar& s, const SparseMap& a) {
  SparseMap out(a.field_, a.rows_, a.cols(), a.shift_);
  for (std::size_t j = 0; j < a.cols(); ++j) axpy(out.cols_[j], s, a.cols_[j]);
  return out;
}

SparseMap operator-(const SparseMap& a, const SparseMap& b) {
  return a + Scalar(b.field(), -1L) * b;
}

bool operator==(const SparseMap& a, const SparseMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).is_zero();
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t k = it->first;
    Scalar c = -it->second;
    axpy(v, c, row->second);
    it = v.upper_bound(k);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  Scalar lead = r.begin()->second.inverse();
  SparseVector scaled;
  axpy(scaled, lead, r);
  const std::size_t pivot = scaled.begin()->first;
  rows_.emplace(pivot, std::move(scaled));
  return true;
}

std::size_t rank_of(Field f, const std::vector<SparseVector>& vectors) {
  EchelonBasis b(f);
  for (const auto& v : vectors) b.insert(v);
  return b.rank();
}

std::size_t rank_of(const SparseMap& m) {
  EchelonBasis b(m.field());
  for (std::size_t j = 0; j < m.cols(); ++j) b.insert(m.column(j));
  return b.rank();
}

std::vector<SparseVector> kernel_basis(const SparseMap& m, const std::vector<std::size_t>& cols_in) {
  std::vector<std::size_t> cols = cols_in;
  if (cols.empty())
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
  // Each stored row carries the combination of source columns that produced it.
  const Field f = m.field();
  std::map<std::size_t, std::pair<SparseVector, SparseVector>> rows;
  std::vector<SparseVector> kernel;
  for (std::size_t j : cols) {
    SparseVector v = m.column(j);
    SparseVector combo{{j, Scalar::one(f)}};
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      std::size_t k = it->first;
      Scalar c = -it->second;
      axpy(v, c, row->second.first);
      axpy(combo, c, row->second.second);
      it = v.upper_bound(k);
    }
    if (v.empty()) {
      kernel.push_back(std::move(combo));
    } else {
      Scalar lead = v.begin()->second.inverse();
      SparseVector sv, sc;
      axpy(sv, lead, v);
      axpy(sc, lead, combo);
      const std::size_t pivot = sv.begin()->first;
      rows.emplace(pivot, std::make_pair(std::move(sv), std::move(sc)));
    }
  }
  return kernel;
}

std::map<int, std::size_t> homology(const GradedModule& module, const SparseMap& d) {
  if (d.shift() != 1 && d.shift() != -1) throw std::invalid_argument("differential must have degree +1 or -1");
  d.check_degrees(module, module);
  SparseMap dd = compose(d, d);
  for (std::size_t j = 0; j < dd.cols(); ++j)
    if (!is_zero(dd.column(j))) throw NotADifferential(module[j].id);
  std::map<int, std::size_t> dim, rank;
  std::map<int, std::vector<SparseVector>> cols;
  for (std::size_t j = 0; j < module.size(); ++j) {
    dim[module[j].degree]++;
    cols[module[j].degree].push_back(d.column(j));
  }
  for (auto& [deg, vs] : cols) rank[deg] = rank_of(d.field(), vs);
  std::map<int, std::size_t> betti;
  for (const auto& [deg, n] : dim) {
    std::size_t in = rank.count(deg - d.shift()) ? rank[deg - d.shift()] : 0;
    betti[deg] = n - rank[deg] - in;
  }
  return betti;
}

}  // namespace wfloer
