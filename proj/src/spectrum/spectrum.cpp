#include "boolspec/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace boolspec {

namespace {

std::size_t word_count(int n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

std::uint64_t tail_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1;
}

// In-place unnormalized Walsh-Hadamard butterfly.
void butterfly(std::vector<std::int64_t>& a) {
  const std::size_t size = a.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t u = a[j];
        const std::int64_t v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
}

class TableWriter {
 public:
  explicit TableWriter(int n) : n_(n), words_(word_count(n), 0) {}
  void set(Mask x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  BooleanFunction finish() { return BooleanFunction::from_words(n_, std::move(words_)); }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

// --------------------------------------------------------- BooleanFunction

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_dim(n);
  words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  BooleanFunction f(n);
  if (value) {
    std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
    f.words_.back() &= tail_mask(n);
  }
  return f;
}

BooleanFunction BooleanFunction::from_support(int n, std::span<const Mask> support) {
  check_dim(n);
  TableWriter w(n);
  for (Mask x : support) {
    if (x & ~full_mask(n)) {
      throw std::invalid_argument("support point " + std::to_string(x) +
                                  " outside F_2^" + std::to_string(n));
    }
    w.set(x);
  }
  return w.finish();
}

BooleanFunction BooleanFunction::from_predicate(int n,
                                                const std::function<bool(Mask)>& pred) {
  check_dim(n);
  TableWriter w(n);
  const Mask size = Mask{1} << n;
  for (Mask x = 0; x < size; ++x) {
    if (pred(x)) w.set(x);
  }
  return w.finish();
}

BooleanFunction BooleanFunction::from_table(int n, std::uint64_t table) {
  if (n < 0 || n > 6) throw std::invalid_argument("from_table: n must be in [0, 6]");
  if (table & ~tail_mask(n)) throw std::invalid_argument("from_table: bits beyond 2^n");
  return from_words(n, {table});
}

BooleanFunction BooleanFunction::from_words(int n, std::vector<std::uint64_t> words) {
  BooleanFunction f(n);
  if (words.size() != f.words_.size()) {
    throw std::invalid_argument("from_words: expected " + std::to_string(f.words_.size()) +
                                " words");
  }
  if (words.back() & ~tail_mask(n)) {
    throw std::invalid_argument("from_words: bits beyond 2^n");
  }
  f.words_ = std::move(words);
  return f;
}

std::vector<Mask> BooleanFunction::support() const {
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

std::size_t BooleanFunction::weight() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += __builtin_popcountll(w);
  return total;
}

// ----------------------------------------------------------------- Spectrum

Spectrum::Spectrum(int n, std::vector<std::int64_t> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_dim(n);
  if (coeffs_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("Spectrum: expected 2^" + std::to_string(n) + " coefficients");
  }
}

DyadicRational::DyadicRational(std::int64_t numerator, int exponent)
    : num_(numerator), exp_(exponent) {
  if (exponent < 0) throw std::invalid_argument("DyadicRational: negative exponent");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ % 2) == 0) {
    num_ /= 2;
    --exp_;
  }
}

std::string DyadicRational::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Spectrum wht(const BooleanFunction& f) {
  std::vector<std::int64_t> a(f.domain_size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = f(static_cast<Mask>(x));
  butterfly(a);
  return Spectrum(f.dim(), std::move(a));
}

std::vector<DyadicRational> inverse_wht(const Spectrum& s) {
  std::vector<std::int64_t> a(s.coeffs().begin(), s.coeffs().end());
  butterfly(a);
  // sum_alpha F(alpha) (-1)^<alpha,x> = 2^n f(x).
  std::vector<DyadicRational> out;
  out.reserve(a.size());
  for (std::int64_t v : a) out.emplace_back(v, s.dim());
  return out;
}

BooleanFunction to_boolean(const Spectrum& s) {
  std::vector<std::int64_t> a(s.coeffs().begin(), s.coeffs().end());
  butterfly(a);
  const std::int64_t one = std::int64_t{1} << s.dim();
  TableWriter w(s.dim());
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == one) {
      w.set(static_cast<Mask>(x));
    } else if (a[x] != 0) {
      throw NotBooleanError("spectrum inverts to f(" + std::to_string(x) +
                            ") = " + DyadicRational(a[x], s.dim()).to_string());
    }
  }
  return w.finish();
}

int granularity(const Spectrum& s) {
  int k = 0;
  for (std::int64_t c : s.coeffs()) {
    if (c != 0) k = std::max(k, DyadicRational(c, s.dim()).granularity());
  }
  return k;
}

std::size_t sparsity(const Spectrum& s) {
  return static_cast<std::size_t>(
      std::count_if(s.coeffs().begin(), s.coeffs().end(), [](std::int64_t c) { return c != 0; }));
}

int fourier_dimension(const Spectrum& s) {
  SubspaceBuilder b(s.dim());
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[static_cast<Mask>(a)] != 0) b.add(static_cast<Mask>(a));
  }
  return b.dim();
}

bool is_boolean_spectrum(const Spectrum& s) {
  try {
    (void)to_boolean(s);
    return true;
  } catch (const NotBooleanError&) {
    return false;
  }
}

bool is_boolean_spectrum_convolution(const Spectrum& s) {
  const std::size_t size = s.size();
  for (std::size_t alpha = 0; alpha < size; ++alpha) {
    __int128 acc = 0;
    for (std::size_t beta = 0; beta < size; ++beta) {
      acc += static_cast<__int128>(s[static_cast<Mask>(beta)]) * s[static_cast<Mask>(alpha ^ beta)];
    }
    if (acc != static_cast<__int128>(s[static_cast<Mask>(alpha)]) * static_cast<__int128>(size)) {
      return false;
    }
  }
  return true;
}

std::pair<BooleanFunction, BooleanFunction> restrict_first_bit(const BooleanFunction& f) {
  if (f.dim() < 1) throw std::invalid_argument("restrict_first_bit: needs n >= 1");
  const int m = f.dim() - 1;
  TableWriter w0(m);
  TableWriter w1(m);
  const Mask size = Mask{1} << m;
  for (Mask y = 0; y < size; ++y) {
    if (f(y << 1)) w0.set(y);
    if (f((y << 1) | 1U)) w1.set(y);
  }
  return {w0.finish(), w1.finish()};
}

BooleanFunction tensor(const BooleanFunction& f, const BooleanFunction& g) {
  const int n = f.dim() + g.dim();
  check_dim(n);
  TableWriter w(n);
  const auto fs = f.support();
  for (Mask y : g.support()) {
    for (Mask x : fs) w.set(x | (y << f.dim()));
  }
  return w.finish();
}

BooleanFunction apply_transform(const BooleanFunction& f, const GF2Matrix& l) {
  if (l.dim() != f.dim()) throw DimensionMismatch("apply_transform: dimension mismatch");
  const std::vector<Mask> cols = l.columns();
  const std::size_t size = f.domain_size();
  // Lx for all x by linearity: L(x) = L(x without lowest bit) + L(e_lowest).
  std::vector<Mask> image(size, 0);
  TableWriter w(f.dim());
  if (f(0)) w.set(0);
  for (std::size_t x = 1; x < size; ++x) {
    image[x] = image[x & (x - 1)] ^ cols[__builtin_ctzll(x)];
    if (f(image[x])) w.set(static_cast<Mask>(x));
  }
  return w.finish();
}

BooleanFunction shift(const BooleanFunction& f, Mask a) {
  if (a & ~full_mask(f.dim())) throw DimensionMismatch("shift: vector exceeds dimension");
  TableWriter w(f.dim());
  for (Mask x : f.support()) w.set(x ^ a);
  return w.finish();
}

BooleanFunction shift(const BooleanFunction& f, const GF2Vector& a) {
  if (a.dim() != f.dim()) throw DimensionMismatch("shift: dimension mismatch");
  return shift(f, a.bits());
}

}  // namespace boolspec
