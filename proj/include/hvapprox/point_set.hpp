#ifndef HVAPPROX_POINT_SET_HPP
#define HVAPPROX_POINT_SET_HPP

#include <cstddef>
#include <vector>

#include "hvapprox/front.hpp"

namespace hvapprox {

/// Anchor of the dominated region in objective space.
struct ReferencePoint {
  double r1 = 0.0;
  double r2 = 0.0;

  bool operator==(const ReferencePoint&) const = default;
};

/**
 * Sorted x-coordinates of mu points on a front. Construction sorts the
 * coordinates, merges duplicates (within 1e-12, scaled), and verifies that
 * every coordinate lies inside the front's domain (values within the domain
 * tolerance are clamped, anything farther throws std::out_of_range).
 */
class PointSet {
 public:
  PointSet(const Front& front, std::vector<double> xs);

  /// Adopt coordinates that are already sorted, deduplicated, and in-domain
  /// (used by solvers and closed forms that construct them that way).
  static PointSet from_sorted(std::vector<double> xs);

  const std::vector<double>& xs() const { return xs_; }
  std::size_t size() const { return xs_.size(); }
  bool empty() const { return xs_.empty(); }
  double operator[](std::size_t i) const { return xs_[i]; }
  double front_x() const { return xs_.front(); }
  double back_x() const { return xs_.back(); }

  auto begin() const { return xs_.begin(); }
  auto end() const { return xs_.end(); }

  bool operator==(const PointSet&) const = default;

 private:
  PointSet() = default;
  std::vector<double> xs_;
};

}  // namespace hvapprox

#endif  // HVAPPROX_POINT_SET_HPP
