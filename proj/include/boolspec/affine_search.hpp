#pragma once

// Exhaustive search for affine subspaces inside a point set.
//
// Each affine subspace p + D is generated exactly once: p is its least
// element and D is built from its greedy basis (b_1 = min D\{0},
// b_{j+1} = min D \ span(b_1..b_j)). The greedy basis is increasing and every
// b_j is the least element of its coset of span(b_1..b_{j-1}); the search
// enforces both conditions, which makes the basis unique.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "boolspec/addcomb.hpp"
#include "boolspec/gf2.hpp"

namespace boolspec {

/// Shared node counter; a search stops once `limit` nodes have been expanded.
struct SearchBudget {
  std::size_t limit = 0;  // 0 means unlimited
  std::size_t used = 0;
  bool exhausted() const { return limit != 0 && used >= limit; }
};

/// Visits each affine subspace of dimension `dim` contained in `points` whose
/// least element is `base`. The visitor returns true to stop. Returns true if
/// stopped by the visitor.
bool for_each_affine_subspace_at(const PointSet& points, Mask base, int dim,
                                 const std::function<bool(const AffineSubspace&)>& visit,
                                 SearchBudget* budget = nullptr);

/// Whether some affine subspace of dimension `dim` lies inside `points`.
bool contains_affine_subspace(const PointSet& points, int dim);

/// Partition of `points` into `count` disjoint affine subspaces of dimension
/// `dim`, or nullopt if none exists (or the budget ran out; check budget).
std::optional<std::vector<AffineSubspace>> partition_into_affine(const PointSet& points,
                                                                 int count, int dim,
                                                                 SearchBudget* budget = nullptr);

/// {v : points + v = points}.
Subspace stabilizer(const PointSet& points);

}  // namespace boolspec
