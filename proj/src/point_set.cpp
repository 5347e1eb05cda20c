#include "hvapprox/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hvapprox {

namespace {

bool merge_close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
}

}  // namespace

PointSet::PointSet(const Front& front, std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("point set must be nonempty");
  for (double& x : xs) x = front.clamp_x(x);
  std::sort(xs.begin(), xs.end());

  xs_.reserve(xs.size());
  for (double x : xs) {
    if (!xs_.empty() && merge_close(xs_.back(), x)) continue;
    xs_.push_back(x);
  }
}

PointSet PointSet::from_sorted(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("point set must be nonempty");
  PointSet ps;
  ps.xs_ = std::move(xs);
  return ps;
}

}  // namespace hvapprox
