#include "hvapprox/hypervolume.hpp"

#include <algorithm>

namespace hvapprox {

namespace detail {

double hyp_sorted(const Front& front, std::span<const double> xs,
                  ReferencePoint ref) {
  double total = 0.0;
  double prev_x = ref.r1;
  for (double x : xs) {
    if (x <= ref.r1) continue;
    const double y = front.eval(x);
    if (y <= ref.r2) break;  // f is decreasing: no later point contributes
    total += (x - prev_x) * (y - ref.r2);
    prev_x = x;
  }
  return total;
}

}  // namespace detail

HypResult hyp2d_info(const Front& front, const PointSet& points,
                     ReferencePoint ref) {
  HypResult result;
  double prev_x = ref.r1;
  for (double x : points) {
    if (x <= ref.r1) {
      ++result.dropped;
      continue;
    }
    const double y = front.eval(x);
    if (y <= ref.r2) {
      ++result.dropped;
      continue;
    }
    result.value += (x - prev_x) * (y - ref.r2);
    prev_x = x;
    ++result.contributing;
  }
  return result;
}

double hyp2d(const Front& front, const PointSet& points, ReferencePoint ref) {
  return hyp2d_info(front, points, ref).value;
}

std::vector<double> contributions(const Front& front, const PointSet& points,
                                  ReferencePoint ref) {
  const auto& xs = points.xs();
  std::vector<double> out(xs.size(), 0.0);

  // Retained points form a contiguous run: clipping by x <= r1 removes a
  // prefix, clipping by f(x) <= r2 a suffix.
  std::vector<std::size_t> kept;
  kept.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= ref.r1) continue;
    if (front.eval(xs[i]) <= ref.r2) continue;
    kept.push_back(i);
  }

  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    const double left = (k == 0) ? ref.r1 : xs[kept[k - 1]];
    const double below =
        (k + 1 == kept.size()) ? ref.r2 : front.eval(xs[kept[k + 1]]);
    out[i] = (xs[i] - left) * (front.eval(xs[i]) - below);
  }
  return out;
}

}  // namespace hvapprox
