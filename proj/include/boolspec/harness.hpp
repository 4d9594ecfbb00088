#pragma once

// Exhaustive (n <= 4) and randomized theorem verification.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boolspec/gf2.hpp"
#include "boolspec/prng.hpp"
#include "boolspec/spectrum.hpp"
#include "boolspec/structure.hpp"

namespace boolspec {

struct Violation {
  std::string truth_table_hex;
  std::string check;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  int n = 0;
  std::uint64_t functions = 0;
  std::map<Tag, std::uint64_t> counts;
  // Verified two-piece decompositions keyed by the granularity k they are read
  // at. An RvL function of granularity k with a piece of dimension >= 1 is
  // also counted here at k + 1: its piece splits into two halves.
  std::map<int, std::uint64_t> two_piece_by_k;
  std::uint64_t four_piece = 0;
  std::vector<Violation> violations;
  std::map<std::string, double> timing_ms;

  /// Associative merge of partial reports over disjoint inputs.
  void merge(const VerificationReport& other);
};

inline constexpr int kEnumerateMaxDim = 4;

/// Runs every check on all 2^(2^n) functions of n variables, optionally after
/// composing each with a fixed invertible transform. The truth tables are split
/// into contiguous ranges across `threads` workers.
VerificationReport enumerate_verify(int n, unsigned threads = 1,
                                    const std::optional<GF2Matrix>& transform = std::nullopt);

struct RandomVerifyOptions {
  int n = 8;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::optional<Family> family;  // default: mix of affine, two-affine, padded counterexample
  std::optional<int> k;          // default: drawn per instance
};

inline constexpr int kRandomMinDim = 5;
inline constexpr int kRandomMaxDim = 12;

/// Instances from `generate`, each under a random invertible transform and
/// shift, must decompose into the shape their construction dictates.
VerificationReport random_verify(const RandomVerifyOptions& options);

/// Uniformly drawn invertible n x n matrix (rejection sampling).
GF2Matrix random_invertible(int n, Xorshift64Star& rng);

/// Truth table as hex, byte 0 = points 0..7 with the least significant bit first.
std::string truth_table_hex(const BooleanFunction& f);
BooleanFunction from_truth_table_hex(int n, const std::string& hex);

}  // namespace boolspec
