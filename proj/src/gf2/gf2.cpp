#include "boolspec/gf2.hpp"

#include <algorithm>
#include <utility>

namespace boolspec {

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) {
    throw std::invalid_argument("dimension " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxDim) + "]");
  }
}

GF2Vector::GF2Vector(int n, Mask bits) : n_(n), bits_(bits) {
  check_dim(n);
  if ((bits & ~full_mask(n)) != 0) {
    throw std::invalid_argument("vector has bits above dimension " + std::to_string(n));
  }
}

GF2Vector GF2Vector::unit(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("unit vector index out of range");
  return GF2Vector(n, Mask{1} << (i - 1));
}

GF2Vector GF2Vector::operator+(const GF2Vector& other) const {
  if (n_ != other.n_) throw DimensionMismatch("GF2Vector addition: dimension mismatch");
  return GF2Vector(n_, bits_ ^ other.bits_);
}

int dot(const GF2Vector& x, const GF2Vector& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("dot: dimension mismatch");
  return parity(x.bits() & y.bits());
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(int n) : n_(n) { check_dim(n); }

Subspace Subspace::full(int n) {
  SubspaceBuilder b(n);
  for (int i = 0; i < n; ++i) b.add(Mask{1} << i);
  return b.build();
}

std::vector<GF2Vector> Subspace::basis() const {
  std::vector<GF2Vector> out;
  out.reserve(rows_.size());
  for (Mask r : rows_) out.emplace_back(n_, r);
  return out;
}

Mask Subspace::reduce(Mask x) const {
  for (Mask r : rows_) {
    if (x & (Mask{1} << high_bit(r))) x ^= r;
  }
  return x;
}

bool Subspace::contains(const GF2Vector& v) const {
  if (v.dim() != n_) throw DimensionMismatch("Subspace::contains: dimension mismatch");
  return contains(v.bits());
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionMismatch("Subspace::contains: dimension mismatch");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](Mask r) { return contains(r); });
}

std::vector<Mask> Subspace::elements() const {
  std::vector<Mask> out(size());
  out[0] = 0;
  // Gray-code walk over the row combinations.
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i] = out[i - 1] ^ rows_[__builtin_ctzll(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubspaceBuilder::SubspaceBuilder(int n) : space_(n) {}
SubspaceBuilder::SubspaceBuilder(const Subspace& start) : space_(start) {}

bool SubspaceBuilder::add(Mask v) {
  if ((v & ~full_mask(space_.n_)) != 0) {
    throw DimensionMismatch("SubspaceBuilder::add: vector exceeds ambient dimension");
  }
  v = space_.reduce(v);
  if (v == 0) return false;
  const Mask pivot = Mask{1} << high_bit(v);
  for (Mask& r : space_.rows_) {
    if (r & pivot) r ^= v;
  }
  auto pos = std::find_if(space_.rows_.begin(), space_.rows_.end(),
                          [v](Mask r) { return high_bit(r) < high_bit(v); });
  space_.rows_.insert(pos, v);
  space_.pivots_ |= pivot;
  return true;
}

Subspace linear_span(int n, std::span<const Mask> points) {
  SubspaceBuilder b(n);
  for (Mask p : points) {
    b.add(p);
    if (b.dim() == n) break;
  }
  return b.build();
}

Subspace linear_span(int n, std::span<const GF2Vector> points) {
  SubspaceBuilder b(n);
  for (const auto& p : points) {
    if (p.dim() != n) throw DimensionMismatch("linear_span: dimension mismatch");
    b.add(p.bits());
  }
  return b.build();
}

Subspace orthogonal_complement(const Subspace& v) {
  const int n = v.ambient_dim();
  SubspaceBuilder b(n);
  for (int j = 0; j < n; ++j) {
    const Mask bit = Mask{1} << j;
    if (v.pivot_mask() & bit) continue;
    Mask w = bit;
    for (Mask r : v.rows()) {
      if (r & bit) w |= Mask{1} << high_bit(r);
    }
    b.add(w);
  }
  return b.build();
}

// ---------------------------------------------------------- AffineSubspace

AffineSubspace::AffineSubspace(Mask shift, Subspace direction)
    : shift_(direction.reduce(shift)), direction_(std::move(direction)) {
  if ((shift & ~full_mask(direction_.ambient_dim())) != 0) {
    throw DimensionMismatch("AffineSubspace: shift exceeds ambient dimension");
  }
}

std::vector<Mask> AffineSubspace::elements() const {
  std::vector<Mask> out = direction_.elements();
  for (Mask& x : out) x ^= shift_;
  std::sort(out.begin(), out.end());
  return out;
}

AffineSubspace affine_span(int n, std::span<const Mask> points) {
  if (points.empty()) throw std::invalid_argument("affine_span: empty point set");
  const Mask base = points.front();
  SubspaceBuilder b(n);
  for (Mask p : points) {
    b.add(p ^ base);
    if (b.dim() == n) break;
  }
  return AffineSubspace(base, b.build());
}

AffineSubspace affine_span(int n, std::span<const GF2Vector> points) {
  std::vector<Mask> raw;
  raw.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != n) throw DimensionMismatch("affine_span: dimension mismatch");
    raw.push_back(p.bits());
  }
  return affine_span(n, raw);
}

bool is_full_affine_subspace(int n, std::span<const Mask> points) {
  std::vector<Mask> uniq(points.begin(), points.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  return affine_span(n, uniq).size() == uniq.size();
}

// --------------------------------------------------------------- GF2Matrix

namespace {

// Gauss-Jordan on [rows | I]; nullopt when singular.
std::optional<std::vector<Mask>> invert_rows(int n, std::vector<Mask> a) {
  std::vector<Mask> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = Mask{1} << i;
  for (int col = 0; col < n; ++col) {
    const Mask bit = Mask{1} << col;
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != col && (a[r] & bit)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

std::vector<Mask> transpose_rows(int n, std::span<const Mask> rows) {
  std::vector<Mask> out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rows[i] >> j & 1U) out[j] |= Mask{1} << i;
    }
  }
  return out;
}

Mask apply_rows(std::span<const Mask> rows, Mask x) {
  Mask y = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    y |= static_cast<Mask>(parity(rows[i] & x)) << i;
  }
  return y;
}

}  // namespace

std::optional<GF2Matrix> GF2Matrix::try_from_rows(int n, std::vector<Mask> rows) {
  check_dim(n);
  if (static_cast<int>(rows.size()) != n) {
    throw DimensionMismatch("GF2Matrix: expected " + std::to_string(n) + " rows");
  }
  for (Mask r : rows) {
    if (r & ~full_mask(n)) throw DimensionMismatch("GF2Matrix: row exceeds dimension");
  }
  auto inv = invert_rows(n, rows);
  if (!inv) return std::nullopt;
  return GF2Matrix(n, std::move(rows), std::move(*inv));
}

GF2Matrix GF2Matrix::from_rows(int n, std::vector<Mask> rows) {
  auto m = try_from_rows(n, std::move(rows));
  if (!m) throw std::invalid_argument("GF2Matrix: matrix is singular over F_2");
  return std::move(*m);
}

GF2Matrix GF2Matrix::from_columns(int n, std::span<const Mask> columns) {
  if (static_cast<int>(columns.size()) != n) {
    throw DimensionMismatch("GF2Matrix: expected " + std::to_string(n) + " columns");
  }
  return from_rows(n, transpose_rows(n, columns));
}

GF2Matrix GF2Matrix::identity(int n) {
  std::vector<Mask> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = Mask{1} << i;
  return GF2Matrix(n, rows, rows);
}

std::vector<Mask> GF2Matrix::columns() const { return transpose_rows(n_, rows_); }

Mask GF2Matrix::apply(Mask x) const { return apply_rows(rows_, x); }

GF2Vector GF2Matrix::apply(const GF2Vector& x) const {
  if (x.dim() != n_) throw DimensionMismatch("GF2Matrix::apply: dimension mismatch");
  return GF2Vector(n_, apply(x.bits()));
}

Mask GF2Matrix::apply_inverse(Mask x) const { return apply_rows(inverse_, x); }

GF2Matrix GF2Matrix::inverse() const { return GF2Matrix(n_, inverse_, rows_); }

GF2Matrix GF2Matrix::transpose() const {
  return GF2Matrix(n_, transpose_rows(n_, rows_), transpose_rows(n_, inverse_));
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& rhs) const {
  if (n_ != rhs.n_) throw DimensionMismatch("GF2Matrix product: dimension mismatch");
  // Row i of (AB) is sum over j with A_ij = 1 of row j of B.
  auto mul = [n = n_](std::span<const Mask> a, std::span<const Mask> b) {
    std::vector<Mask> out(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (a[i] >> j & 1U) out[i] ^= b[j];
      }
    }
    return out;
  };
  // (AB)^-1 = B^-1 A^-1
  return GF2Matrix(n_, mul(rows_, rhs.rows_), mul(rhs.inverse_, inverse_));
}

GF2Matrix transform_sending_to_e1(const GF2Vector& alpha) {
  if (alpha.bits() == 0) throw std::invalid_argument("transform_sending_to_e1: alpha is zero");
  const int n = alpha.dim();
  SubspaceBuilder span(n);
  std::vector<Mask> cols{alpha.bits()};
  span.add(alpha.bits());
  for (int j = 0; j < n && static_cast<int>(cols.size()) < n; ++j) {
    if (span.add(Mask{1} << j)) cols.push_back(Mask{1} << j);
  }
  // P has the completed basis as columns; L = (P^-1)^T satisfies L^T alpha = e_1.
  return GF2Matrix::from_columns(n, cols).inverse().transpose();
}

std::string to_binary(Mask x, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) {
    if (x >> i & 1U) s[n - 1 - i] = '1';
  }
  return s;
}

}  // namespace boolspec
