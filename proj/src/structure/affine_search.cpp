#include "boolspec/affine_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolspec {

namespace {

class SubspaceWalker {
 public:
  SubspaceWalker(const PointSet& points, Mask base, int dim,
                 const std::function<bool(const AffineSubspace&)>& visit, SearchBudget* budget)
      : base_(base), dim_(dim), visit_(visit), budget_(budget), local_(points.dim()) {
    // Directions v with base + v a member above base; base itself is the least element.
    for (Mask m : points.members()) {
      if (m > base) {
        cands_.push_back(m ^ base);
        local_.insert(m ^ base);
      }
    }
    std::sort(cands_.begin(), cands_.end());
    local_.insert(0);
    elems_.push_back(0);
    stack_.reserve(static_cast<std::size_t>(dim) + 1);
    stack_.emplace_back(points.dim());
  }

  bool run() {
    if ((std::size_t{1} << dim_) > cands_.size() + 1) return false;
    return dfs(0);
  }

 private:
  bool dfs(std::size_t start) {
    if (budget_ != nullptr) {
      if (budget_->exhausted()) return false;
      ++budget_->used;
    }
    const SubspaceBuilder& span = stack_.back();
    if (span.dim() == dim_) return visit_(AffineSubspace(base_, span.build()));
    const std::size_t need = static_cast<std::size_t>(dim_ - span.dim());
    const std::size_t old = elems_.size();
    for (std::size_t i = start; i + need <= cands_.size(); ++i) {
      const Mask v = cands_[i];
      if (span.reduce(v) != v) continue;
      bool inside = true;
      for (std::size_t e = 0; e < old; ++e) {
        if (!local_.contains(elems_[e] ^ v)) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      for (std::size_t e = 0; e < old; ++e) elems_.push_back(elems_[e] ^ v);
      stack_.push_back(stack_.back());
      stack_.back().add(v);
      const bool stop = dfs(i + 1);
      stack_.pop_back();
      elems_.resize(old);
      if (stop) return true;
      if (budget_ != nullptr && budget_->exhausted()) return false;
    }
    return false;
  }

  Mask base_;
  int dim_;
  const std::function<bool(const AffineSubspace&)>& visit_;
  SearchBudget* budget_;
  PointSet local_;
  std::vector<Mask> cands_;
  std::vector<Mask> elems_;
  std::vector<SubspaceBuilder> stack_;
};

bool partition_rec(const PointSet& remaining, int count, int dim,
                   std::vector<AffineSubspace>& pieces, SearchBudget* budget) {
  if (remaining.empty()) return count == 0;
  if (count <= 0 || remaining.size() != static_cast<std::size_t>(count) << dim) return false;
  const Mask p = remaining.min();
  return for_each_affine_subspace_at(
      remaining, p, dim,
      [&](const AffineSubspace& piece) {
        PointSet rest = remaining;
        for (Mask x : piece.elements()) rest.erase(x);
        pieces.push_back(piece);
        if (partition_rec(rest, count - 1, dim, pieces, budget)) return true;
        pieces.pop_back();
        return false;
      },
      budget);
}

}  // namespace

bool for_each_affine_subspace_at(const PointSet& points, Mask base, int dim,
                                 const std::function<bool(const AffineSubspace&)>& visit,
                                 SearchBudget* budget) {
  if (dim < 0 || dim > points.dim()) {
    throw std::invalid_argument("affine subspace search: dimension out of range");
  }
  if (!points.contains(base)) return false;
  SubspaceWalker walker(points, base, dim, visit, budget);
  return walker.run();
}

bool contains_affine_subspace(const PointSet& points, int dim) {
  const std::size_t need = std::size_t{1} << dim;
  const std::vector<Mask> members = points.members();
  if (members.size() < need) return false;
  if (dim == 0) return true;
  for (std::size_t i = 0; i + need <= members.size(); ++i) {
    if (for_each_affine_subspace_at(points, members[i], dim,
                                    [](const AffineSubspace&) { return true; })) {
      return true;
    }
  }
  return false;
}

std::optional<std::vector<AffineSubspace>> partition_into_affine(const PointSet& points,
                                                                 int count, int dim,
                                                                 SearchBudget* budget) {
  if (dim < 0 || dim > points.dim() || count < 0) {
    throw std::invalid_argument("partition_into_affine: bad shape");
  }
  std::vector<AffineSubspace> pieces;
  if (partition_rec(points, count, dim, pieces, budget)) return pieces;
  return std::nullopt;
}

Subspace stabilizer(const PointSet& points) {
  SubspaceBuilder b(points.dim());
  if (points.empty()) return Subspace::full(points.dim());
  const Mask s0 = points.min();
  for (Mask m : points.members()) {
    const Mask v = m ^ s0;
    if (v == 0 || b.view().contains(v)) continue;
    if (points.translate(v) == points) b.add(v);
  }
  return b.build();
}

}  // namespace boolspec
