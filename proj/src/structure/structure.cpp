#include "boolspec/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "boolspec/affine_search.hpp"

namespace boolspec {

namespace {

// Coefficient pattern of the in-scope families: f^(0) = m/2^k with m in {1, 2},
// every other nonzero coefficient in {+-1/2^k, +-2/2^k}.
struct ValueScope {
  int k;
  std::int64_t m;
  std::int64_t unit;  // integer-scaled value of 1/2^k
};

std::optional<ValueScope> value_scope(const Spectrum& s) {
  const std::int64_t f0 = s[0];
  if (f0 <= 0) return std::nullopt;
  const int k = granularity(s);
  const std::int64_t unit = std::int64_t{1} << (s.dim() - k);
  const std::int64_t m = f0 / unit;
  if (m != 1 && m != 2) return std::nullopt;
  for (std::int64_t c : s.coeffs()) {
    const std::int64_t a = std::llabs(c);
    if (a == 0 || a == unit) continue;
    if (m == 2 && a == 2 * unit) continue;
    return std::nullopt;
  }
  return ValueScope{k, m, unit};
}

// Irreducible core of an m = 2 function, shifted so that 0 is in its support.
struct NormalizedCore {
  Reduction reduction;
  int core_k;
  Mask offset;  // normalized(x) = core(x + offset)
  BooleanFunction normalized;
  Spectrum spectrum;
};

NormalizedCore normalized_core(const BooleanFunction& f, int k) {
  Reduction red = reduce(f);
  const int core_k = k - static_cast<int>(red.trace.steps().size());
  const Mask offset = red.core.support().front();
  BooleanFunction normalized = shift(red.core, offset);
  Spectrum spec = wht(normalized);
  return NormalizedCore{std::move(red), core_k, offset, std::move(normalized), std::move(spec)};
}

PointSet coefficient_set(const Spectrum& s, std::int64_t value) {
  PointSet out(s.dim());
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[static_cast<Mask>(a)] == value) out.insert(static_cast<Mask>(a));
  }
  return out;
}

bool is_exceptional_core(const NormalizedCore& core) {
  if (core.core_k != 4) return false;
  const std::int64_t unit = std::int64_t{1} << (core.normalized.dim() - core.core_k);
  const PointSet b = coefficient_set(core.spectrum, -unit);
  return sumset(b, b).size() == 22;
}

AffineSubspace translate(const AffineSubspace& piece, Mask a) {
  return AffineSubspace(piece.shift() ^ a, piece.direction());
}

std::vector<AffineSubspace> lift_pieces(const NormalizedCore& core,
                                        const std::vector<AffineSubspace>& core_pieces) {
  std::vector<AffineSubspace> out;
  out.reserve(core_pieces.size());
  for (const auto& p : core_pieces) {
    out.push_back(core.reduction.trace.lift(translate(p, core.offset)));
  }
  return out;
}

// Two pieces from the spectral sets: V1^perp = <B u {gamma}>, V2^perp =
// <(A \ V1^perp) u {gamma}>; the support splits into one full coset of V1 and
// one coset of V2. For k >= 3, gamma is the single point of 3B \ B and lies in
// <B>. For k = 2, 3B \ B is empty; gamma is beta + alpha for the least alpha
// in A with f^(beta + alpha) = 0.
std::optional<std::vector<AffineSubspace>> two_subspace_pieces(const NormalizedCore& core) {
  const BooleanFunction& h = core.normalized;
  const int n = h.dim();
  const int k = core.core_k;
  SpectralSets sets;
  try {
    sets = spectral_sets(core.spectrum);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (sets.k != k) return std::nullopt;

  Mask gamma = 0;
  if (k == 2) {
    const Mask beta = sets.b.min();
    bool found = false;
    for (Mask alpha : sets.a.members()) {
      if (core.spectrum[beta ^ alpha] == 0) {
        gamma = beta ^ alpha;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  } else {
    if (sets.gamma.size() != 1) return std::nullopt;
    gamma = sets.gamma.min();
  }

  std::vector<Mask> gens = sets.b.members();
  gens.push_back(gamma);
  const Subspace v1_perp = linear_span(n, gens);
  if (v1_perp.dim() != k) return std::nullopt;
  gens.clear();
  for (Mask alpha : sets.a.members()) {
    if (!v1_perp.contains(alpha)) gens.push_back(alpha);
  }
  gens.push_back(gamma);
  const Subspace v2_perp = linear_span(n, gens);
  if (v2_perp.dim() != k) return std::nullopt;

  const Subspace v1 = orthogonal_complement(v1_perp);
  const Subspace v2 = orthogonal_complement(v2_perp);
  const std::size_t piece_size = std::size_t{1} << (n - k);

  std::map<Mask, std::size_t> cosets;
  const std::vector<Mask> support = h.support();
  for (Mask x : support) ++cosets[v1.reduce(x)];
  std::optional<Mask> full;
  for (const auto& [rep, count] : cosets) {
    if (count != piece_size) continue;
    if (full) return std::nullopt;
    full = rep;
  }
  if (!full) return std::nullopt;

  std::vector<Mask> rest;
  for (Mask x : support) {
    if (v1.reduce(x) != *full) rest.push_back(x);
  }
  if (rest.size() != piece_size) return std::nullopt;
  AffineSubspace second = affine_span(n, rest);
  if (second.size() != rest.size() || !(second.direction() == v2)) return std::nullopt;
  return std::vector<AffineSubspace>{AffineSubspace(*full, v1), std::move(second)};
}

// Partition search, first modulo the stabilizer W of the set (pieces that are
// unions of W-cosets), then directly.
std::optional<std::vector<AffineSubspace>> partition_search(const PointSet& points, int count,
                                                            int dim) {
  constexpr std::size_t kNodeBudget = 2'000'000;
  const Subspace w = stabilizer(points);
  if (w.dim() > 0 && w.dim() <= dim) {
    PointSet quotient(points.dim());
    for (Mask x : points.members()) quotient.insert(w.reduce(x));
    SearchBudget budget{kNodeBudget, 0};
    if (auto parts = partition_into_affine(quotient, count, dim - w.dim(), &budget)) {
      std::vector<AffineSubspace> out;
      for (const auto& p : *parts) {
        SubspaceBuilder b(w);
        for (Mask r : p.direction().rows()) b.add(r);
        out.emplace_back(p.shift(), b.build());
      }
      return out;
    }
  }
  SearchBudget budget{kNodeBudget, 0};
  return partition_into_affine(points, count, dim, &budget);
}

Classification base_classification(const Spectrum& s) {
  Classification c;
  c.k = granularity(s);
  const std::int64_t unit = std::int64_t{1} << (s.dim() - c.k);
  c.m = s[0] / unit;
  return c;
}

}  // namespace

std::string to_string(Tag tag) {
  switch (tag) {
    case Tag::Trivial: return "Trivial";
    case Tag::RvL: return "RvL";
    case Tag::TwoSubspace: return "TwoSubspace";
    case Tag::ExceptionalK4Candidate: return "ExceptionalK4Candidate";
    case Tag::OutOfScope: return "OutOfScope";
  }
  return "?";
}

std::optional<Tag> tag_from_string(const std::string& s) {
  for (Tag t : {Tag::Trivial, Tag::RvL, Tag::TwoSubspace, Tag::ExceptionalK4Candidate,
                Tag::OutOfScope}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

// ----------------------------------------------------------- ReductionTrace

ReductionTrace::ReductionTrace(int original_n, std::vector<ReductionStep> steps)
    : original_n_(original_n), steps_(std::move(steps)) {}

Mask ReductionTrace::lift_point(Mask y) const {
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    const Mask x = (y << 1) | static_cast<Mask>(it->restricted_bit);
    y = it->transform.apply(x) ^ it->shift;
  }
  return y;
}

Mask ReductionTrace::lift_linear(Mask y) const {
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    y = it->transform.apply(y << 1);
  }
  return y;
}

AffineSubspace ReductionTrace::lift(const AffineSubspace& piece) const {
  if (piece.ambient_dim() != core_n()) throw DimensionMismatch("lift: piece is not in core space");
  std::vector<Mask> dirs;
  for (Mask r : piece.direction().rows()) dirs.push_back(lift_linear(r));
  return AffineSubspace(lift_point(piece.shift()), linear_span(original_n_, dirs));
}

// --------------------------------------------------------------- operations

Classification classify(const Spectrum& s) {
  if (sparsity(s) == 0) return Classification{Tag::Trivial, 0, 0, std::nullopt, std::nullopt};
  Classification c = base_classification(s);
  const auto scope = value_scope(s);
  if (!scope || !is_boolean_spectrum(s)) {
    c.tag = Tag::OutOfScope;
    return c;
  }
  if (scope->m == 1) {
    c.tag = Tag::RvL;
    return c;
  }
  c.t = (std::int64_t{1} << (c.k - 1)) - 1;
  const NormalizedCore core = normalized_core(to_boolean(s), c.k);
  c.core_k = core.core_k;
  c.tag = is_exceptional_core(core) ? Tag::ExceptionalK4Candidate : Tag::TwoSubspace;
  return c;
}

SpectralSets spectral_sets(const Spectrum& s) {
  const int n = s.dim();
  const int k = granularity(s);
  const std::int64_t unit = std::int64_t{1} << (n - k);
  if (k < 1 || s[0] != 2 * unit) {
    throw std::invalid_argument("spectral_sets: f^(0) must equal 2/2^k");
  }
  std::int64_t total = 0;
  for (std::size_t a = 1; a < s.size(); ++a) {
    const std::int64_t c = s[static_cast<Mask>(a)];
    if (c != 0 && std::llabs(c) != unit) {
      throw std::invalid_argument(
          "spectral_sets: a nonzero alpha has |f^(alpha)| != 1/2^k; reduce first");
    }
    total += c;
  }
  if (total + s[0] != (std::int64_t{1} << n)) {
    throw std::invalid_argument("spectral_sets: expects f(0) = 1; shift the support first");
  }
  SpectralSets out;
  out.k = k;
  out.t = (std::int64_t{1} << (k - 1)) - 1;
  out.a = coefficient_set(s, unit);
  out.b = coefficient_set(s, -unit);
  out.a.erase(0);
  if (static_cast<std::int64_t>(out.a.size()) != 3 * out.t ||
      static_cast<std::int64_t>(out.b.size()) != out.t) {
    throw VerificationFailure("spectral_sets: |A| = " + std::to_string(out.a.size()) +
                                  ", |B| = " + std::to_string(out.b.size()) +
                                  ", expected 3t and t with t = " + std::to_string(out.t),
                              Decomposition{});
  }
  PointSet two_b = sumset(out.b, out.b);
  two_b.erase(0);
  out.r = two_b & out.a;
  out.l = out.a - out.r;
  out.gamma = iterated_sumset(out.b, 3) - out.b;
  return out;
}

PointSet triangle_neighbors(Mask rho, const PointSet& b) {
  if (rho == 0 || (rho & ~full_mask(b.dim())) || !sumset(b, b).contains(rho)) {
    throw std::invalid_argument("triangle_neighbors: rho must lie in 2B \\ {0}");
  }
  return b & b.translate(rho);
}

bool is_irreducible(const BooleanFunction& f) {
  if (f.is_zero()) throw std::invalid_argument("is_irreducible: f is identically zero");
  return affine_span(f.dim(), f.support()).dim() == f.dim();
}

Reduction reduce(const BooleanFunction& f) {
  if (f.is_zero()) throw OutOfScopeError("reduce: f is identically zero");
  Spectrum s = wht(f);
  if (!value_scope(s)) throw OutOfScopeError("reduce: spectrum outside {0, +-1/2^k, +-2/2^k}");
  std::vector<ReductionStep> steps;
  BooleanFunction cur = f;
  for (;;) {
    const std::int64_t f0 = s[0];
    Mask alpha = 0;
    for (std::size_t a = 1; a < s.size(); ++a) {
      if (std::llabs(s[static_cast<Mask>(a)]) == f0) {
        alpha = static_cast<Mask>(a);
        break;
      }
    }
    if (alpha == 0) break;
    Mask a = 0;
    if (s[alpha] == -f0) {
      // Any a with <a, alpha> = 1 flips the sign; take the lowest set coordinate.
      a = alpha & (~alpha + 1);
      cur = shift(cur, a);
    }
    GF2Matrix l = transform_sending_to_e1(GF2Vector(cur.dim(), alpha));
    auto [g0, g1] = restrict_first_bit(apply_transform(cur, l));
    if (!g1.is_zero()) throw std::logic_error("reduce: restricted half is not empty");
    steps.push_back(ReductionStep{a, std::move(l), 0});
    cur = std::move(g0);
    s = wht(cur);
  }
  return Reduction{std::move(cur), ReductionTrace(f.dim(), std::move(steps))};
}

bool verify_pieces(const BooleanFunction& f, const std::vector<AffineSubspace>& pieces,
                   int piece_dim) {
  PointSet covered(f.dim());
  std::size_t total = 0;
  for (const auto& p : pieces) {
    if (p.ambient_dim() != f.dim() || p.dim() != piece_dim) return false;
    for (Mask x : p.elements()) {
      if (!f(x) || covered.contains(x)) return false;
      covered.insert(x);
      ++total;
    }
  }
  return total == f.weight();
}

BooleanFunction indicator(int n, const std::vector<AffineSubspace>& pieces) {
  std::vector<Mask> pts;
  for (const auto& p : pieces) {
    if (p.ambient_dim() != n) throw DimensionMismatch("indicator: piece dimension mismatch");
    auto e = p.elements();
    pts.insert(pts.end(), e.begin(), e.end());
  }
  return BooleanFunction::from_support(n, pts);
}

Decomposition decompose(const BooleanFunction& f) {
  const Spectrum s = wht(f);
  Decomposition d;
  d.classification = classify(s);
  const Classification& c = d.classification;
  const int n = f.dim();
  switch (c.tag) {
    case Tag::Trivial:
      throw std::invalid_argument("decompose: f is identically zero");
    case Tag::OutOfScope:
      throw OutOfScopeError("decompose: spectrum outside {0, +-1/2^k, +-2/2^k} with f^(0) in "
                            "{1/2^k, 2/2^k}");
    case Tag::RvL: {
      d.pieces = {affine_span(n, f.support())};
      d.verified = verify_pieces(f, d.pieces, n - c.k);
      if (!d.verified) {
        throw VerificationFailure("decompose: support is not an affine subspace of dimension " +
                                      std::to_string(n - c.k),
                                  d);
      }
      return d;
    }
    case Tag::TwoSubspace:
    case Tag::ExceptionalK4Candidate:
      break;
  }

  const bool exceptional = c.tag == Tag::ExceptionalK4Candidate;
  const int count = exceptional ? 4 : 2;
  const int piece_dim = exceptional ? n - c.k - 1 : n - c.k;
  const NormalizedCore core = normalized_core(f, c.k);
  const int core_dim = piece_dim - (n - core.normalized.dim());

  if (!exceptional) {
    if (auto pieces = two_subspace_pieces(core)) {
      d.pieces = lift_pieces(core, *pieces);
      if (verify_pieces(f, d.pieces, piece_dim)) {
        d.verified = true;
        return d;
      }
    }
  }

  PointSet support(core.normalized.dim(), core.normalized.support());
  if (auto pieces = partition_search(support, count, core_dim)) {
    d.pieces = lift_pieces(core, *pieces);
    if (verify_pieces(f, d.pieces, piece_dim)) {
      d.verified = true;
      return d;
    }
  }
  d.verified = false;
  throw VerificationFailure("decompose: no verified partition into " + std::to_string(count) +
                                " affine subspaces of dimension " + std::to_string(piece_dim),
                            d);
}

int kill_number(const BooleanFunction& f) {
  const int n = f.dim();
  if (n > kKillNumberMaxDim) {
    throw std::invalid_argument("kill_number: exhaustive search limited to n <= " +
                                std::to_string(kKillNumberMaxDim));
  }
  const PointSet ones(n, f.support());
  PointSet zeros(n);
  const Mask size = Mask{1} << n;
  for (Mask x = 0; x < size; ++x) {
    if (!f(x)) zeros.insert(x);
  }
  // f constant on a dim-d affine subspace implies the same for every d' < d.
  int best = 0;
  for (int d = 1; d <= n; ++d) {
    if (contains_affine_subspace(ones, d) || contains_affine_subspace(zeros, d)) {
      best = d;
    } else {
      break;
    }
  }
  return n - best;
}

// ------------------------------------------------------------------ families

std::string to_string(Family family) {
  switch (family) {
    case Family::Affine: return "affine";
    case Family::TwoAffine: return "two-affine";
    case Family::CounterexampleCore: return "counterexample-core";
    case Family::CounterexamplePadded: return "counterexample-padded";
    case Family::IntroFk: return "intro-fk";
    case Family::IntroGk: return "intro-gk";
    case Family::Delta: return "delta";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::Affine, Family::TwoAffine, Family::CounterexampleCore,
                   Family::CounterexamplePadded, Family::IntroFk, Family::IntroGk,
                   Family::Delta}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

BooleanFunction generate(Family family, const FamilyParams& params) {
  const int n = params.n;
  const int k = params.k;
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(to_string(family) + ": " + what);
  };
  switch (family) {
    case Family::Affine: {
      require(n >= 0 && n <= kMaxDim && k >= 0 && k <= n, "requires 0 <= k <= n <= 24");
      const Mask low = full_mask(k);
      const Mask target = k >= 1 ? 1U : 0U;
      return BooleanFunction::from_predicate(n, [=](Mask x) { return (x & low) == target; });
    }
    case Family::TwoAffine: {
      require(k >= 1 && n >= 2 * k - 1 && n <= kMaxDim, "requires k >= 1 and 2k-1 <= n <= 24");
      const Mask first = full_mask(k);                          // x_1..x_k
      const Mask ek = Mask{1} << (k - 1);                       // e_k
      const Mask second = full_mask(2 * k - 1) & ~full_mask(k - 1);  // x_k..x_{2k-1}
      return BooleanFunction::from_predicate(
          n, [=](Mask x) { return (x & first) == ek || (x & second) == 0; });
    }
    case Family::CounterexampleCore: {
      require(n == 0 || n == 6, "is defined on F_2^6");
      return BooleanFunction::from_predicate(6, [](Mask x) {
        const int w = popcount(x);
        return w == 0 || w == 5 || w == 6;
      });
    }
    case Family::CounterexamplePadded: {
      require(n >= 6 && n <= kMaxDim, "requires 6 <= n <= 24");
      return tensor(generate(Family::CounterexampleCore, {6, 0}),
                    BooleanFunction::constant(n - 6, true));
    }
    case Family::IntroFk: {
      require(n >= 2 && n <= kMaxDim, "requires 2 <= n <= 24");
      return BooleanFunction::from_predicate(n, [](Mask x) { return (x & 3U) != 0; });
    }
    case Family::IntroGk: {
      require(n >= 3 && n <= kMaxDim, "requires 3 <= n <= 24");
      return BooleanFunction::from_predicate(n, [](Mask x) {
        const Mask t = x & 7U;
        return t != 0 && t != 7;
      });
    }
    case Family::Delta: {
      require(n >= 0 && n <= kMaxDim, "requires 0 <= n <= 24");
      return BooleanFunction::from_support(n, std::vector<Mask>{0});
    }
  }
  throw std::invalid_argument("generate: unknown family");
}

}  // namespace boolspec
