#include "boolspec/addcomb.hpp"

#include <numeric>
#include <stdexcept>

namespace boolspec {

namespace {

std::size_t word_count(int n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

// Masks selecting the lower half of every 2^(j+1)-bit block.
constexpr std::uint64_t kBlockLow[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// Permutes bit positions within a word by i -> i ^ lo, lo < 64.
std::uint64_t xor_permute(std::uint64_t w, unsigned lo) {
  for (int j = 0; j < 6; ++j) {
    if (lo >> j & 1U) {
      const unsigned s = 1U << j;
      w = ((w & kBlockLow[j]) << s) | ((w >> s) & kBlockLow[j]);
    }
  }
  return w;
}

void check_same_dim(const PointSet& a, const PointSet& b, const char* op) {
  if (a.dim() != b.dim()) throw DimensionMismatch(std::string(op) + ": dimension mismatch");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Fraction: overflow");
  return out;
}

std::int64_t choose2(std::int64_t s) { return s * (s - 1) / 2; }

}  // namespace

// ----------------------------------------------------------------- PointSet

PointSet::PointSet(int n) : n_(n), words_(word_count(n), 0) { check_dim(n); }

PointSet::PointSet(int n, std::span<const Mask> members) : PointSet(n) {
  for (Mask x : members) insert(x);
}

void PointSet::insert(Mask x) {
  if (x & ~full_mask(n_)) {
    throw DimensionMismatch("PointSet: point " + std::to_string(x) + " outside F_2^" +
                            std::to_string(n_));
  }
  words_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

std::size_t PointSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += __builtin_popcountll(w);
  return total;
}

bool PointSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

std::vector<Mask> PointSet::members() const {
  std::vector<Mask> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Mask>((w << 6) | __builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

Mask PointSet::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<Mask>((w << 6) | __builtin_ctzll(words_[w]));
  }
  throw std::logic_error("PointSet::min on empty set");
}

PointSet PointSet::translate(Mask a) const {
  if (a & ~full_mask(n_)) throw DimensionMismatch("PointSet::translate: vector exceeds dimension");
  PointSet out(n_);
  const std::size_t hi = a >> 6;
  const unsigned lo = a & 63U;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) out.words_[w ^ hi] = xor_permute(words_[w], lo);
  }
  return out;
}

PointSet PointSet::operator|(const PointSet& o) const {
  check_same_dim(*this, o, "union");
  PointSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= o.words_[i];
  return out;
}

PointSet PointSet::operator&(const PointSet& o) const {
  check_same_dim(*this, o, "intersection");
  PointSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
  return out;
}

PointSet PointSet::operator-(const PointSet& o) const {
  check_same_dim(*this, o, "difference");
  PointSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~o.words_[i];
  return out;
}

// ----------------------------------------------------------------- Fraction

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ <= 0) throw std::invalid_argument("Fraction: denominator must be positive");
  if (num_ < 0) throw std::invalid_argument("Fraction: negative numerator");
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
  // Cross-cancel first to keep intermediates small.
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  const std::int64_t a = g1 ? num_ / g1 : 0;
  const std::int64_t d = g1 ? o.den_ / g1 : o.den_;
  const std::int64_t c = g2 ? o.num_ / g2 : 0;
  const std::int64_t b = g2 ? den_ / g2 : den_;
  return Fraction(checked_mul(a, c), checked_mul(b, d));
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

// ------------------------------------------------------------- operations

PointSet sumset(const PointSet& a, const PointSet& b) {
  check_same_dim(a, b, "sumset");
  const PointSet& small = a.size() <= b.size() ? a : b;
  const PointSet& large = a.size() <= b.size() ? b : a;
  PointSet out(a.dim());
  for (Mask x : small.members()) out = out | large.translate(x);
  return out;
}

PointSet iterated_sumset(const PointSet& a, int k) {
  if (k < 1) throw std::invalid_argument("iterated_sumset: k must be >= 1");
  PointSet out = a;
  for (int i = 1; i < k; ++i) out = sumset(out, a);
  return out;
}

Fraction doubling_constant(const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("doubling_constant: empty set");
  return Fraction(static_cast<std::int64_t>(sumset(a, a).size()),
                  static_cast<std::int64_t>(a.size()));
}

bool is_sum_free(const PointSet& a) { return (sumset(a, a) & a).empty(); }

namespace {

// (C(s,2) + s + 1) / (s + 1): the lower end of the s-bracket.
Fraction bracket_low(std::int64_t s) { return Fraction(choose2(s) + s + 1, s + 1); }

}  // namespace

int even_zohar_s(const Fraction& k) {
  if (k < Fraction(1)) throw std::invalid_argument("even_zohar_s: K must be >= 1");
  // The upper end of bracket s is the lower end of bracket s + 1.
  for (std::int64_t s = 1;; ++s) {
    if (bracket_low(s) <= k && k < bracket_low(s + 1)) return static_cast<int>(s);
  }
}

Fraction even_zohar_F(const Fraction& k) {
  const std::int64_t s = even_zohar_s(k);
  if (s + 1 >= 63) throw std::overflow_error("even_zohar_F: 2^(s+1) exceeds 64 bits");
  const Fraction branch_point(s * s + s + 1, 2 * s);
  if (k < branch_point) {
    return Fraction(std::int64_t{1} << s, choose2(s) + s + 1) * k;
  }
  return Fraction(std::int64_t{1} << (s + 1), s * s + s + 1) * k;
}

std::string to_string(LabaVerdict v) {
  switch (v) {
    case LabaVerdict::NotApplicable: return "NotApplicable";
    case LabaVerdict::Subgroup: return "Subgroup";
    case LabaVerdict::Violation: return "Violation";
  }
  return "?";
}

LabaVerdict laba_check(const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("laba_check: empty set");
  // A - A = A + A in characteristic 2.
  const PointSet diff = sumset(a, a);
  if (2 * diff.size() >= 3 * a.size()) return LabaVerdict::NotApplicable;
  const bool subgroup = diff.contains(0) && sumset(diff, diff) == diff;
  return subgroup ? LabaVerdict::Subgroup : LabaVerdict::Violation;
}

}  // namespace boolspec
