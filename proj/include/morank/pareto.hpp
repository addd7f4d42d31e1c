#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace morank {

/// A point's objective scores. Minimization throughout; maximization inputs
/// must be negated by the caller.
using ObjectiveVector = std::vector<double>;

inline void check_same_dim(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("objective vectors have different dimensions");
  }
}

/// a dominates b: a <= b componentwise with at least one strict <.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  check_same_dim(a, b);
  bool strict = false;
  for (std::size_t o = 0; o < a.size(); ++o) {
    if (a[o] > b[o]) return false;
    if (a[o] < b[o]) strict = true;
  }
  return strict;
}

/// a covers b: a <= b componentwise (dominance or objective-space equality).
inline bool covers(const ObjectiveVector& a, const ObjectiveVector& b) {
  check_same_dim(a, b);
  for (std::size_t o = 0; o < a.size(); ++o) {
    if (a[o] > b[o]) return false;
  }
  return true;
}

/// Nonempty collection of equal-dimension, finite objective vectors.
/// Duplicates are permitted.
class Population {
 public:
  explicit Population(std::vector<ObjectiveVector> members)
      : members_(std::move(members)) {
    if (members_.empty()) {
      throw std::invalid_argument("population must be nonempty");
    }
    const std::size_t k = members_.front().size();
    if (k < 1) {
      throw std::invalid_argument("population needs at least one objective");
    }
    for (const auto& v : members_) {
      if (v.size() != k) {
        throw std::invalid_argument("population members differ in dimension");
      }
      for (double x : v) {
        if (!std::isfinite(x)) {
          throw std::invalid_argument("objective values must be finite");
        }
      }
    }
  }

  std::size_t size() const { return members_.size(); }
  std::size_t objectives() const { return members_.front().size(); }
  const ObjectiveVector& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<ObjectiveVector>& members() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<ObjectiveVector> members_;
};

/// Indices of points not dominated by any other point, in input order.
/// Objective-space duplicates are all retained.
inline std::vector<std::size_t> nondominated_indices(
    const std::vector<ObjectiveVector>& points) {
  std::vector<std::size_t> result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j != i && dominates(points[j], points[i])) dominated = true;
    }
    if (!dominated) result.push_back(i);
  }
  return result;
}

inline Population nondominated_set(const Population& p) {
  std::vector<ObjectiveVector> kept;
  for (std::size_t i : nondominated_indices(p.members())) {
    kept.push_back(p[i]);
  }
  return Population(std::move(kept));
}

}  // namespace morank
