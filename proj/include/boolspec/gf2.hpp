#pragma once

// Bit-packed linear algebra over F_2^n.
//
// A point x = (x_1, ..., x_n) is encoded as an unsigned integer whose bit i-1
// holds x_i (x_1 is the least-significant bit). Every type here is an
// immutable value; all operations are pure.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace boolspec {

using Mask = std::uint32_t;

inline constexpr int kMaxDim = 24;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int parity(Mask x) { return __builtin_parity(x); }
inline int popcount(Mask x) { return __builtin_popcount(x); }
// Index of the highest set bit; x must be nonzero.
inline int high_bit(Mask x) { return 31 - __builtin_clz(x); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

void check_dim(int n);  // throws std::invalid_argument unless 0 <= n <= kMaxDim

class GF2Vector {
 public:
  GF2Vector() = default;
  GF2Vector(int n, Mask bits);

  /// Standard basis vector e_i, 1-based.
  static GF2Vector unit(int n, int i);

  int dim() const { return n_; }
  Mask bits() const { return bits_; }
  bool coord(int i) const { return (bits_ >> (i - 1)) & 1U; }  // x_i, 1-based
  int weight() const { return popcount(bits_); }

  GF2Vector operator+(const GF2Vector& other) const;

  friend auto operator<=>(const GF2Vector&, const GF2Vector&) = default;

 private:
  int n_ = 0;
  Mask bits_ = 0;
};

/// <x, y> over F_2.
int dot(const GF2Vector& x, const GF2Vector& y);

/// Linear subspace of F_2^n held as a fully reduced row-echelon basis.
///
/// Each row's pivot is its highest set bit, no other row has that bit set and
/// rows are sorted by descending pivot. With this form reduce(x) returns the
/// numerically smallest element of the coset x + V.
class Subspace {
 public:
  explicit Subspace(int n = 0);
  static Subspace full(int n);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  std::size_t size() const { return std::size_t{1} << rows_.size(); }
  std::span<const Mask> rows() const { return rows_; }
  std::vector<GF2Vector> basis() const;
  Mask pivot_mask() const { return pivots_; }

  Mask reduce(Mask x) const;
  bool contains(Mask x) const { return reduce(x) == 0; }
  bool contains(const GF2Vector& v) const;
  bool contains(const Subspace& other) const;

  /// All 2^dim elements in ascending order.
  std::vector<Mask> elements() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class SubspaceBuilder;
  int n_ = 0;
  Mask pivots_ = 0;
  std::vector<Mask> rows_;
};

/// Incremental Gaussian elimination; produces a canonical Subspace.
class SubspaceBuilder {
 public:
  explicit SubspaceBuilder(int n);
  explicit SubspaceBuilder(const Subspace& start);

  /// Returns false if v was already in the span.
  bool add(Mask v);
  Mask reduce(Mask x) const { return space_.reduce(x); }
  int dim() const { return space_.dim(); }
  const Subspace& view() const { return space_; }
  Subspace build() const { return space_; }

 private:
  Subspace space_;
};

Subspace linear_span(int n, std::span<const Mask> points);
Subspace linear_span(int n, std::span<const GF2Vector> points);

Subspace orthogonal_complement(const Subspace& v);

/// Coset shift + direction. The shift is the least element of the coset, so
/// two affine subspaces are equal iff their fields are equal.
class AffineSubspace {
 public:
  AffineSubspace(Mask shift, Subspace direction);

  int ambient_dim() const { return direction_.ambient_dim(); }
  int dim() const { return direction_.dim(); }
  std::size_t size() const { return direction_.size(); }
  Mask shift() const { return shift_; }
  const Subspace& direction() const { return direction_; }

  bool contains(Mask x) const { return direction_.reduce(x) == shift_; }
  std::vector<Mask> elements() const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  Mask shift_;
  Subspace direction_;
};

/// Smallest affine subspace containing every point. Throws on empty input.
AffineSubspace affine_span(int n, std::span<const Mask> points);
AffineSubspace affine_span(int n, std::span<const GF2Vector> points);

/// True iff the (deduplicated) points form exactly one affine subspace.
bool is_full_affine_subspace(int n, std::span<const Mask> points);

/// Invertible n x n matrix over F_2; rows()[i] bit j is the entry (i+1, j+1).
class GF2Matrix {
 public:
  /// Throws std::invalid_argument if singular.
  static GF2Matrix from_rows(int n, std::vector<Mask> rows);
  static std::optional<GF2Matrix> try_from_rows(int n, std::vector<Mask> rows);
  static GF2Matrix from_columns(int n, std::span<const Mask> columns);
  static GF2Matrix identity(int n);

  int dim() const { return n_; }
  std::span<const Mask> rows() const { return rows_; }
  std::vector<Mask> columns() const;

  /// Lx.
  Mask apply(Mask x) const;
  GF2Vector apply(const GF2Vector& x) const;
  Mask apply_inverse(Mask x) const;

  GF2Matrix inverse() const;
  GF2Matrix transpose() const;
  GF2Matrix operator*(const GF2Matrix& rhs) const;

  friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  GF2Matrix(int n, std::vector<Mask> rows, std::vector<Mask> inverse)
      : n_(n), rows_(std::move(rows)), inverse_(std::move(inverse)) {}

  int n_ = 0;
  std::vector<Mask> rows_;
  std::vector<Mask> inverse_;
};

/// Invertible L with L^T alpha = e_1, so that g(x) = f(Lx) has
/// g^(e_1) = f^(alpha). alpha is completed to a basis by greedily adding the
/// smallest standard vectors that keep it independent.
GF2Matrix transform_sending_to_e1(const GF2Vector& alpha);

std::string to_binary(Mask x, int n);

}  // namespace boolspec
