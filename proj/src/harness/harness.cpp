#include "boolspec/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace boolspec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void fail(VerificationReport& r, const BooleanFunction& f, const std::string& check) {
  r.violations.push_back(Violation{truth_table_hex(f), check});
}

struct Shape {
  std::size_t count;
  int dim;
};

Shape shape_of(const Classification& c, int n) {
  switch (c.tag) {
    case Tag::RvL: return {1, n - c.k};
    case Tag::TwoSubspace: return {2, n - c.k};
    case Tag::ExceptionalK4Candidate: return {4, n - c.k - 1};
    default: return {0, 0};
  }
}

// Spectral-set claims on the normalized core of an m = 2 function:
// |A| = 3t, |B| = t, and 2B \subseteq A u {0}.
void check_core_sets(const BooleanFunction& f, VerificationReport& r) {
  const Reduction red = reduce(f);
  const BooleanFunction core = shift(red.core, red.core.support().front());
  try {
    const SpectralSets sets = spectral_sets(wht(core));
    PointSet a0 = sets.a;
    a0.insert(0);
    if (!(sumset(sets.b, sets.b) - a0).empty()) fail(r, f, "triangle_lemma");
  } catch (const std::exception&) {
    fail(r, f, "claim_sizes");
  }
}

// Decomposes an in-scope f and checks the result against its classification.
std::optional<Decomposition> check_decomposition(const BooleanFunction& f,
                                                 const Classification& c,
                                                 VerificationReport& r) {
  const int n = f.dim();
  Decomposition d;
  try {
    d = decompose(f);
  } catch (const std::exception&) {
    fail(r, f, "decompose");
    return std::nullopt;
  }
  const Shape want = shape_of(c, n);
  if (!d.verified || d.pieces.size() != want.count || !verify_pieces(f, d.pieces, want.dim) ||
      !(indicator(n, d.pieces) == f)) {
    fail(r, f, "decompose");
    return std::nullopt;
  }
  if (c.tag == Tag::RvL && want.dim >= 1) {
    const AffineSubspace& p = d.pieces.front();
    const auto rows = p.direction().rows();
    const Subspace half_dir = linear_span(n, rows.subspan(1));
    const std::vector<AffineSubspace> halves{AffineSubspace(p.shift(), half_dir),
                                             AffineSubspace(p.shift() ^ rows[0], half_dir)};
    if (verify_pieces(f, halves, want.dim - 1)) {
      ++r.two_piece_by_k[c.k + 1];
    } else {
      fail(r, f, "rvl_split");
    }
  }
  if (c.tag == Tag::TwoSubspace) ++r.two_piece_by_k[c.k];
  if (c.tag == Tag::ExceptionalK4Candidate) {
    ++r.four_piece;
    if (c.core_k != 4) fail(r, f, "four_piece_only_k4");
  }
  if (c.m == 2) check_core_sets(f, r);
  return d;
}

void check_function(const BooleanFunction& f, VerificationReport& r) {
  const int n = f.dim();
  const Spectrum s = wht(f);

  try {
    if (!(to_boolean(s) == f)) fail(r, f, "round_trip");
  } catch (const NotBooleanError&) {
    fail(r, f, "round_trip");
  }

  __int128 energy = 0;
  for (std::int64_t c : s.coeffs()) energy += static_cast<__int128>(c) * c;
  if (energy != static_cast<__int128>(s[0]) << n) fail(r, f, "parseval");

  if (!is_boolean_spectrum(s) || !is_boolean_spectrum_convolution(s)) {
    fail(r, f, "boolean_spectrum");
  }

  for (std::int64_t c : s.coeffs()) {
    if (std::llabs(c) > s[0]) {
      fail(r, f, "coefficient_bound");
      break;
    }
  }

  if (n >= 1) {
    const auto [f0, f1] = restrict_first_bit(f);
    const Spectrum s0 = wht(f0);
    const Spectrum s1 = wht(f1);
    for (Mask b = 0; b < s0.size(); ++b) {
      const std::int64_t even = s[2 * b];
      const std::int64_t odd = s[2 * b + 1];
      if (2 * s0[b] != even + odd || 2 * s1[b] != even - odd) {
        fail(r, f, "restriction");
        break;
      }
    }
  }

  const Classification c = classify(s);
  ++r.counts[c.tag];
  ++r.functions;
  if (c.tag == Tag::Trivial) return;

  // k <= log2 s <= 2k. The upper bound is Parseval with |f^| >= 2^-k.
  const std::uint64_t sp = sparsity(s);
  const std::uint64_t two_k = std::uint64_t{1} << c.k;
  if (sp < two_k || sp > two_k * two_k) fail(r, f, "granularity_sparsity");

  if (n <= kKillNumberMaxDim && kill_number(f) > c.k + c.m - 1) fail(r, f, "kill_bound");

  if (c.tag != Tag::OutOfScope) check_decomposition(f, c, r);
}

std::optional<Shape> expected_shape(Family family, int n, int k) {
  switch (family) {
    case Family::Affine: return Shape{1, n - k};
    case Family::TwoAffine:
      if (k == 1) return Shape{1, n};  // both halves cover everything: f = 1
      return Shape{2, n - k};
    case Family::CounterexampleCore:
    case Family::CounterexamplePadded: return Shape{4, n - 5};
    case Family::Delta: return Shape{1, 0};
    case Family::IntroFk:
    case Family::IntroGk: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
  if (functions == 0 && violations.empty()) n = other.n;
  functions += other.functions;
  for (const auto& [tag, c] : other.counts) counts[tag] += c;
  for (const auto& [k, c] : other.two_piece_by_k) two_piece_by_k[k] += c;
  four_piece += other.four_piece;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& [phase, t] : other.timing_ms) timing_ms[phase] += t;
}

std::string truth_table_hex(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t bytes = (f.domain_size() + 7) / 8;
  std::string out;
  out.reserve(2 * bytes);
  const auto words = f.words();
  for (std::size_t i = 0; i < bytes; ++i) {
    const unsigned byte = (words[i / 8] >> (8 * (i % 8))) & 0xFFU;
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xFU]);
  }
  return out;
}

BooleanFunction from_truth_table_hex(int n, const std::string& hex) {
  check_dim(n);
  const std::size_t size = std::size_t{1} << n;
  const std::size_t bytes = (size + 7) / 8;
  if (hex.size() != 2 * bytes) {
    throw std::invalid_argument("truth_table_hex: expected " + std::to_string(2 * bytes) +
                                " hex digits for n = " + std::to_string(n));
  }
  auto digit = [](char ch) -> unsigned {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw std::invalid_argument(std::string("truth_table_hex: bad digit '") + ch + "'");
  };
  std::vector<std::uint64_t> words((size + 63) / 64, 0);
  for (std::size_t i = 0; i < bytes; ++i) {
    const std::uint64_t byte = digit(hex[2 * i]) << 4 | digit(hex[2 * i + 1]);
    words[i / 8] |= byte << (8 * (i % 8));
  }
  if (size < 8 && (words[0] >> size) != 0) {
    throw std::invalid_argument("truth_table_hex: bits set beyond 2^n");
  }
  return BooleanFunction::from_words(n, std::move(words));
}

VerificationReport enumerate_verify(int n, unsigned threads,
                                    const std::optional<GF2Matrix>& transform) {
  if (n < 0 || n > kEnumerateMaxDim) {
    throw std::invalid_argument("enumerate_verify: n must be in 0.." +
                                std::to_string(kEnumerateMaxDim));
  }
  if (transform && transform->dim() != n) {
    throw DimensionMismatch("enumerate_verify: transform dimension differs from n");
  }
  const auto start = Clock::now();
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(total)));

  auto work = [&](std::uint64_t lo, std::uint64_t hi, VerificationReport& out) {
    out.n = n;
    for (std::uint64_t t = lo; t < hi; ++t) {
      BooleanFunction f = BooleanFunction::from_table(n, t);
      if (transform) f = apply_transform(f, *transform);
      check_function(f, out);
    }
  };

  std::vector<VerificationReport> parts(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t lo = std::min(total, i * chunk);
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (i + 1 == threads) {
      work(lo, hi, parts[i]);
    } else {
      pool.emplace_back(work, lo, hi, std::ref(parts[i]));
    }
  }
  for (auto& th : pool) th.join();

  VerificationReport report;
  report.n = n;
  for (const auto& p : parts) report.merge(p);
  report.timing_ms["enumerate"] = ms_since(start);
  return report;
}

GF2Matrix random_invertible(int n, Xorshift64Star& rng) {
  check_dim(n);
  const Mask mask = full_mask(n);
  for (;;) {
    std::vector<Mask> rows(static_cast<std::size_t>(n));
    for (Mask& row : rows) row = static_cast<Mask>(rng.next()) & mask;
    if (auto m = GF2Matrix::try_from_rows(n, std::move(rows))) return *m;
  }
}

VerificationReport random_verify(const RandomVerifyOptions& o) {
  if (o.n < kRandomMinDim || o.n > kRandomMaxDim) {
    throw std::invalid_argument("random_verify: n must be in " + std::to_string(kRandomMinDim) +
                                ".." + std::to_string(kRandomMaxDim));
  }
  if (o.count < 1) throw std::invalid_argument("random_verify: count must be >= 1");
  const int n = o.n;
  Xorshift64Star rng(o.seed);
  VerificationReport report;
  report.n = n;
  double generate_ms = 0;
  double verify_ms = 0;

  for (std::size_t i = 0; i < o.count; ++i) {
    auto t0 = Clock::now();
    Family family;
    if (o.family) {
      family = *o.family;
    } else {
      const int pick = rng.between(0, n >= 6 ? 2 : 1);
      family = pick == 0 ? Family::Affine
                         : pick == 1 ? Family::TwoAffine : Family::CounterexamplePadded;
    }
    int k = 0;
    if (o.k) {
      k = *o.k;
    } else if (family == Family::Affine) {
      k = rng.between(1, n);
    } else if (family == Family::TwoAffine) {
      k = rng.between(2, (n + 1) / 2);
    }
    const int gen_n = family == Family::CounterexampleCore ? 6 : n;
    const BooleanFunction base = generate(family, FamilyParams{gen_n, k});
    const GF2Matrix l = random_invertible(gen_n, rng);
    const Mask a = static_cast<Mask>(rng.below(std::uint64_t{1} << gen_n));
    const BooleanFunction f = shift(apply_transform(base, l), a);
    generate_ms += ms_since(t0);

    t0 = Clock::now();
    const Classification c = classify(wht(f));
    ++report.counts[c.tag];
    ++report.functions;
    const auto want = expected_shape(family, gen_n, k);
    if (!want) {
      if (c.tag != Tag::OutOfScope) fail(report, f, "classification");
    } else if (c.tag == Tag::OutOfScope || c.tag == Tag::Trivial) {
      fail(report, f, "classification");
    } else if (auto d = check_decomposition(f, c, report)) {
      if (d->pieces.size() != want->count || d->pieces.front().dim() != want->dim) {
        fail(report, f, "shape");
      }
    }
    verify_ms += ms_since(t0);
  }
  report.timing_ms["generate"] = generate_ms;
  report.timing_ms["verify"] = verify_ms;
  return report;
}

}  // namespace boolspec
