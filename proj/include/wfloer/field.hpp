#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wfloer {

// Coefficient field: the rationals or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  static Scalar sign(Field f, bool negative) { return Scalar(f, negative ? -1L : 1L); }

  Field field() const { return field_; }
  bool is_zero() const { return sgn(v_) == 0; }
  // For F_p the canonical residue in [0, p).
  const mpq_class& value() const { return v_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

  Scalar inverse() const;

  // "a", "a/b" over Q; "a mod p" over F_p.
  std::string to_string() const;
  // Accepts "a", "a/b" and "a mod p" (the modulus must match f).
  static Scalar parse(std::string_view text, Field f);

 private:
  void check(const Scalar& o) const;
  void normalize();
  Field field_;
  mpq_class v_;
};

// Sparse column vector keyed by basis index.
using SparseVector = std::map<std::size_t, Scalar>;

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
bool is_zero(const SparseVector& v);

struct Generator {
  std::string id;
  int degree = 0;
};

class GradedModule {
 public:
  GradedModule() = default;
  explicit GradedModule(std::vector<Generator> gens);

  std::size_t add(Generator g);
  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t index(const std::string& id) const;
  const std::vector<Generator>& generators() const { return gens_; }
  std::vector<int> degrees_present() const;

 private:
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t> index_;
};

// Homogeneous linear map between graded modules, stored by columns.
class SparseMap {
 public:
  SparseMap(Field f, std::size_t rows, std::size_t cols, int shift = 0);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  int shift() const { return shift_; }

  void add(std::size_t row, std::size_t col, const Scalar& s);
  Scalar at(std::size_t row, std::size_t col) const;
  const SparseVector& column(std::size_t col) const { return cols_.at(col); }
  SparseVector apply(const SparseVector& v) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  // Throws unless every entry satisfies deg(target) - deg(source) == shift.
  void check_degrees(const GradedModule& source, const GradedModule& target) const;

  static SparseMap identity(Field f, std::size_t n);
  friend SparseMap compose(const SparseMap& after, const SparseMap& before);
  friend SparseMap operator+(const SparseMap& a, const SparseMap& b);
  friend SparseMap operator-(const SparseMap& a, const SparseMap& b);
  friend SparseMap operator*(const Scalar& s, const SparseMap& a);
  friend bool operator==(const SparseMap& a, const SparseMap& b);

 private:
  Field field_;
  std::size_t rows_;
  std::vector<SparseVector> cols_;
  int shift_;
};

// Incremental row echelon basis with a deterministic lowest-index pivot rule.
class EchelonBasis {
 public:
  explicit EchelonBasis(Field f) : field_(f) {}
  // Reduces v against the basis; the residual has no pivot coordinates.
  SparseVector reduce(SparseVector v) const;
  // Returns true if v was independent and has been added.
  bool insert(const SparseVector& v);
  std::size_t rank() const { return rows_.size(); }

 private:
  Field field_;
  std::map<std::size_t, SparseVector> rows_;
};

std::size_t rank_of(Field f, const std::vector<SparseVector>& vectors);
std::size_t rank_of(const SparseMap& m);
// Basis of {v : m v = 0}, restricted to columns listed in `cols` (all if empty).
std::vector<SparseVector> kernel_basis(const SparseMap& m, const std::vector<std::size_t>& cols = {});

class NotADifferential : public std::runtime_error {
 public:
  NotADifferential(const std::string& witness)
      : std::runtime_error("d^2 != 0 on generator " + witness), witness_(witness) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// Betti numbers by degree. The differential must have shift +1 or -1.
std::map<int, std::size_t> homology(const GradedModule& module, const SparseMap& d);

}  // namespace wfloer
