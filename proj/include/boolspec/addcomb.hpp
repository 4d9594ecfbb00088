#pragma once

// Set addition over F_2^n: sumsets, doubling constants, sum-free tests,
// Even-Zohar's affine-span bound F(K), and Laba's subgroup criterion.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boolspec/gf2.hpp"

namespace boolspec {

/// Subset of F_2^n as a bitset over the 2^n points.
class PointSet {
 public:
  explicit PointSet(int n = 0);
  PointSet(int n, std::span<const Mask> members);

  int dim() const { return n_; }
  bool contains(Mask x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Mask x);
  void erase(Mask x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const;
  bool empty() const;
  /// Ascending.
  std::vector<Mask> members() const;
  /// Least member; set must be nonempty.
  Mask min() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// {x + a : x in this}.
  PointSet translate(Mask a) const;

  PointSet operator|(const PointSet& o) const;
  PointSet operator&(const PointSet& o) const;
  PointSet operator-(const PointSet& o) const;  // set difference

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Exact nonnegative rational, always reduced; den >= 1.
class Fraction {
 public:
  Fraction(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string to_string() const;

  Fraction operator*(const Fraction& o) const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

PointSet sumset(const PointSet& a, const PointSet& b);

/// k-fold sumset kA; k >= 1.
PointSet iterated_sumset(const PointSet& a, int k);

/// sigma[A] = |2A| / |A|; A nonempty.
Fraction doubling_constant(const PointSet& a);

/// (A + A) and A are disjoint.
bool is_sum_free(const PointSet& a);

/// The unique s >= 1 with (C(s,2)+s+1)/(s+1) <= K < (C(s+1,2)+s+2)/(s+2).
int even_zohar_s(const Fraction& k);

/// Even-Zohar's tight bound on |<A>| / |A| for doubling constant K.
Fraction even_zohar_F(const Fraction& k);

enum class LabaVerdict { NotApplicable, Subgroup, Violation };

std::string to_string(LabaVerdict v);

/// If |A - A| < 3|A|/2 then A - A must be a subgroup. Violation would mean the
/// lemma failed on this input.
LabaVerdict laba_check(const PointSet& a);

}  // namespace boolspec
