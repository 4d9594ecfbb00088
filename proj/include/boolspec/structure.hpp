#pragma once

// Structure recovery for Boolean functions whose Fourier coefficients lie in
// {0, +-1/2^k, +-2/2^k}: classification, the A/B/R/L/Gamma sets of an
// irreducible core, the dimension-reduction loop, affine decompositions of
// the support, parity kill numbers and canonical instance families.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolspec/addcomb.hpp"
#include "boolspec/gf2.hpp"
#include "boolspec/spectrum.hpp"

namespace boolspec {

class OutOfScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Tag { Trivial, RvL, TwoSubspace, ExceptionalK4Candidate, OutOfScope };

std::string to_string(Tag tag);
std::optional<Tag> tag_from_string(const std::string& s);

struct Classification {
  Tag tag = Tag::OutOfScope;
  int k = 0;                  // granularity of f
  std::int64_t m = 0;         // f^(0) = m / 2^k
  std::optional<std::int64_t> t;  // 2^(k-1) - 1 for the two-value (m = 2) families
  std::optional<int> core_k;      // granularity of the irreducible core when m = 2

  friend bool operator==(const Classification&, const Classification&) = default;
};

struct SpectralSets {
  PointSet a;      // f^ = +1/2^k
  PointSet b;      // f^ = -1/2^k
  PointSet r;      // (2B \ {0}) intersect A
  PointSet l;      // A \ R
  PointSet gamma;  // 3B \ B
  int k = 0;
  std::int64_t t = 0;
};

struct ReductionStep {
  Mask shift;          // h(x) = f(x + shift), applied first
  GF2Matrix transform; // then g(x) = h(Lx)
  int restricted_bit;  // x_1 fixed to this value
};

/// Composition of shift / transform / first-bit restriction steps mapping the
/// original function to its irreducible core.
class ReductionTrace {
 public:
  ReductionTrace(int original_n, std::vector<ReductionStep> steps);

  int original_n() const { return original_n_; }
  int core_n() const { return original_n_ - static_cast<int>(steps_.size()); }
  const std::vector<ReductionStep>& steps() const { return steps_; }

  /// Core coordinates -> original coordinates (an injective affine map).
  Mask lift_point(Mask y) const;
  AffineSubspace lift(const AffineSubspace& piece) const;

 private:
  Mask lift_linear(Mask y) const;

  int original_n_;
  std::vector<ReductionStep> steps_;
};

struct Reduction {
  BooleanFunction core;
  ReductionTrace trace;
};

struct Decomposition {
  std::vector<AffineSubspace> pieces;
  Classification classification;
  bool verified = false;
};

/// Thrown when no decomposition of the mandated shape can be verified.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, Decomposition candidate)
      : std::runtime_error(what), candidate_(std::move(candidate)) {}
  const Decomposition& candidate() const { return candidate_; }

 private:
  Decomposition candidate_;
};

Classification classify(const Spectrum& s);

/// Sets of a normalized irreducible core: f^(0) = 2/2^k, every other nonzero
/// coefficient is +-1/2^k, and f(0) = 1. Throws std::invalid_argument if the
/// spectrum is not in that form and VerificationFailure if |A| != 3t or
/// |B| != t.
SpectralSets spectral_sets(const Spectrum& s);

/// N(rho) = {beta in B : rho + beta in B}; rho must lie in 2B \ {0}.
PointSet triangle_neighbors(Mask rho, const PointSet& b);

/// The support is not contained in a proper affine subspace. f must be nonzero.
bool is_irreducible(const BooleanFunction& f);

/// Strips directions alpha != 0 with |f^(alpha)| = f^(0) until none is left.
Reduction reduce(const BooleanFunction& f);

Decomposition decompose(const BooleanFunction& f);

/// Pieces pairwise disjoint, all of dimension `piece_dim`, union = supp(f).
bool verify_pieces(const BooleanFunction& f, const std::vector<AffineSubspace>& pieces,
                   int piece_dim);

/// Indicator of the union of the pieces.
BooleanFunction indicator(int n, const std::vector<AffineSubspace>& pieces);

inline constexpr int kKillNumberMaxDim = 8;

/// Minimum codimension of an affine subspace on which f is constant.
int kill_number(const BooleanFunction& f);

enum class Family {
  Affine,
  TwoAffine,
  CounterexampleCore,
  CounterexamplePadded,
  IntroFk,
  IntroGk,
  Delta,
};

std::string to_string(Family family);
std::optional<Family> family_from_string(const std::string& s);

struct FamilyParams {
  int n = 0;
  int k = 0;
};

/// affine: x_1 = 1, x_2 = ... = x_k = 0 (codimension k).
/// two_affine: (e_k + V1) u V2 with V1^perp = <e_1..e_k>, V2^perp = <e_k..e_{2k-1}>.
/// counterexample_core: weights 0, 5, 6 in F_2^6.
/// counterexample_padded: counterexample_core tensor all-ones on n - 6 bits.
/// intro_fk: OR(x_1, x_2). intro_gk: not (x_1 = x_2 = x_3). delta: indicator of 0.
BooleanFunction generate(Family family, const FamilyParams& params);

}  // namespace boolspec
