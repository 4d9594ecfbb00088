#pragma once

// Exact Fourier analysis of Boolean functions f: F_2^n -> {0,1}.
//
// Spectra are stored integer-scaled: F(alpha) = 2^n f^(alpha)
//   = sum_x f(x) (-1)^<alpha,x>,
// so every coefficient is exact and the denominator 2^n stays implicit.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boolspec/gf2.hpp"

namespace boolspec {

class NotBooleanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truth table of f: F_2^n -> {0,1}, one bit per point, packed in 64-bit words.
class BooleanFunction {
 public:
  explicit BooleanFunction(int n = 0);

  static BooleanFunction constant(int n, bool value);
  static BooleanFunction from_support(int n, std::span<const Mask> support);
  static BooleanFunction from_predicate(int n, const std::function<bool(Mask)>& pred);
  /// Small tables: bit x of `table` is f(x). Requires n <= 6.
  static BooleanFunction from_table(int n, std::uint64_t table);
  static BooleanFunction from_words(int n, std::vector<std::uint64_t> words);

  int dim() const { return n_; }
  std::size_t domain_size() const { return std::size_t{1} << n_; }
  bool operator()(Mask x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<Mask> support() const;
  std::size_t weight() const;
  bool is_zero() const { return weight() == 0; }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Integer-scaled Walsh-Hadamard spectrum; coeffs()[alpha] = 2^n f^(alpha).
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(int n, std::vector<std::int64_t> coeffs);

  int dim() const { return n_; }
  int den_log2() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  std::int64_t operator[](Mask alpha) const { return coeffs_[alpha]; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// numerator / 2^exponent in lowest terms. The numerator is odd whenever the
/// exponent is positive; zero is 0/2^0.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(std::int64_t numerator, int exponent);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  /// Granularity of the value: the reduced exponent.
  int granularity() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  std::string to_string() const;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

Spectrum wht(const BooleanFunction& f);

/// f(x) = 2^-n sum_alpha F(alpha) (-1)^<alpha,x>, exact per point.
std::vector<DyadicRational> inverse_wht(const Spectrum& s);

/// Inverse transform cast to a 0/1 table; throws NotBooleanError otherwise.
BooleanFunction to_boolean(const Spectrum& s);

/// Max granularity of F(alpha)/2^n over nonzero coefficients; 0 for the zero spectrum.
int granularity(const Spectrum& s);

/// Number of nonzero coefficients.
std::size_t sparsity(const Spectrum& s);

/// Dimension of the linear span of the Fourier support.
int fourier_dimension(const Spectrum& s);

/// Whether the spectrum belongs to a 0/1-valued function (inverts and checks range).
bool is_boolean_spectrum(const Spectrum& s);

/// Same question via 2^n F(alpha) = sum_beta F(beta) F(alpha+beta) for all
/// alpha. O(4^n); kept as an independent cross-check.
bool is_boolean_spectrum_convolution(const Spectrum& s);

/// f0(y) = f(0,y), f1(y) = f(1,y) where the restricted coordinate is x_1.
std::pair<BooleanFunction, BooleanFunction> restrict_first_bit(const BooleanFunction& f);

/// h(x,y) = f(x) g(y); x occupies the low coordinates.
BooleanFunction tensor(const BooleanFunction& f, const BooleanFunction& g);

/// g(x) = f(Lx).
BooleanFunction apply_transform(const BooleanFunction& f, const GF2Matrix& l);

/// h(x) = f(x + a).
BooleanFunction shift(const BooleanFunction& f, const GF2Vector& a);
BooleanFunction shift(const BooleanFunction& f, Mask a);

}  // namespace boolspec
