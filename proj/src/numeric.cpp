#include "hvapprox/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hvapprox/errors.hpp"
#include "hvapprox/hypervolume.hpp"

namespace hvapprox {

namespace {

constexpr double kGoldenInv = 0.6180339887498949;  // 1/phi

void require_visible_strict(const Front& front, ReferencePoint ref,
                            bool fixed_endpoints) {
  std::ostringstream os;
  if (fixed_endpoints) {
    // Both extremes must contribute positively.
    if (ref.r1 < front.x_min() && ref.r2 < front.y_min()) return;
    os << "reference (" << ref.r1 << ", " << ref.r2
       << ") must satisfy r1 < x_min and r2 < f(x_max) with fixed endpoints";
  } else {
    const double x_anchor =
        std::min(std::max(ref.r1, front.x_min()), front.x_max());
    if (ref.r1 < front.x_max() && ref.r2 < front.eval(x_anchor)) return;
    os << "reference (" << ref.r1 << ", " << ref.r2
       << ") leaves no visible front portion";
  }
  throw DegenerateReferenceError(os.str());
}

/// Maximize a 1-D slice: coarse scan, then golden-section refinement inside
/// the best bracket. Robust as long as the slice is unimodal between
/// adjacent scan points, which holds for the smooth fronts in use.
template <typename F>
std::pair<double, double> line_search_max(F&& f, double lo, double hi,
                                          double x_tol) {
  if (!(hi > lo)) return {lo, f(lo)};

  constexpr int kScan = 13;
  double best_t = lo, best_v = -std::numeric_limits<double>::infinity();
  int best_j = 0;
  for (int j = 0; j < kScan; ++j) {
    const double t = lo + (hi - lo) * j / (kScan - 1);
    const double v = f(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
      best_j = j;
    }
  }

  double a = lo + (hi - lo) * std::max(0, best_j - 1) / (kScan - 1);
  double b = lo + (hi - lo) * std::min(kScan - 1, best_j + 1) / (kScan - 1);
  double x1 = b - kGoldenInv * (b - a);
  double x2 = a + kGoldenInv * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGoldenInv * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGoldenInv * (b - a);
      f1 = f(x1);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  if (fm > best_v) return {mid, fm};
  return {best_t, best_v};
}

std::vector<std::vector<double>> build_starts(const Front& front, int mu,
                                              const SolverOptions& opts) {
  const double lo = front.x_min();
  const double hi = front.x_max();
  std::vector<std::vector<double>> starts;
  const int count = std::max(1, opts.multistart_count);

  {
    std::vector<double> xs(mu);
    for (int i = 0; i < mu; ++i)
      xs[i] = lo + (hi - lo) * i / (mu - 1);
    starts.push_back(std::move(xs));
  }
  if (count >= 2) {
    std::vector<double> xs(mu);
    for (int i = 0; i < mu; ++i)
      xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (mu - 1));
    starts.push_back(std::move(xs));
  }
  for (int k = static_cast<int>(starts.size()); k < count; ++k) {
    std::mt19937_64 rng(opts.seed * 1000003ULL + 0x9e3779b9ULL * (k + 1));
    std::uniform_real_distribution<double> uni(lo, hi);
    std::vector<double> xs(mu);
    for (int i = 0; i < mu; ++i) xs[i] = uni(rng);
    std::sort(xs.begin(), xs.end());
    starts.push_back(std::move(xs));
  }
  return starts;
}

struct AscentOutcome {
  std::vector<double> xs;
  double objective = -std::numeric_limits<double>::infinity();
  std::vector<double> history;
  int iterations = 0;
  bool converged = false;
};

AscentOutcome coordinate_ascent(const Front& front, std::vector<double> xs,
                                ReferencePoint ref, bool fixed_endpoints,
                                const SolverOptions& opts) {
  const int mu = static_cast<int>(xs.size());
  const int first = fixed_endpoints ? 1 : 0;
  const int last = fixed_endpoints ? mu - 2 : mu - 1;
  const double span = front.x_max() - front.x_min();
  const double x_tol = opts.x_tol * std::max(1.0, span);
  const double move_tol = 1e-9 * std::max(1.0, span);

  AscentOutcome out;
  double current = detail::hyp_sorted(front, xs, ref);
  out.history.push_back(current);

  auto objective_at = [&](int i, double t) {
    const double saved = xs[i];
    xs[i] = t;
    const double v = detail::hyp_sorted(front, xs, ref);
    xs[i] = saved;
    return v;
  };

  while (out.iterations < opts.max_iters) {
    double cycle_gain = 0.0;
    double max_move = 0.0;
    for (int i = first; i <= last && out.iterations < opts.max_iters; ++i) {
      ++out.iterations;
      const double lo = (i > 0) ? xs[i - 1] : front.x_min();
      const double hi = (i < mu - 1) ? xs[i + 1] : front.x_max();
      auto [t, v] =
          line_search_max([&](double tt) { return objective_at(i, tt); }, lo,
                          hi, x_tol);
      if (v > current) {
        cycle_gain += v - current;
        max_move = std::max(max_move, std::abs(t - xs[i]));
        xs[i] = t;
        current = v;
      }
    }
    out.history.push_back(current);
    const double f_tol = opts.f_tol * std::max(1.0, std::abs(current));
    if (cycle_gain <= f_tol && max_move <= move_tol) {
      out.converged = true;
      break;
    }
  }

  out.xs = std::move(xs);
  out.objective = current;
  return out;
}

double projected_gradient_norm(const Front& front,
                               const std::vector<double>& xs,
                               ReferencePoint ref, bool fixed_endpoints) {
  const int mu = static_cast<int>(xs.size());
  const int first = fixed_endpoints ? 1 : 0;
  const int last = fixed_endpoints ? mu - 2 : mu - 1;

  std::vector<double> work = xs;
  auto value_at = [&](int i, double t) {
    const double saved = work[i];
    work[i] = t;
    const double v = detail::hyp_sorted(front, work, ref);
    work[i] = saved;
    return v;
  };

  double norm = 0.0;
  for (int i = first; i <= last; ++i) {
    const double h = 1e-7 * std::max(1.0, std::abs(xs[i]));
    const double lo = (i > 0) ? xs[i - 1] : front.x_min();
    const double hi = (i < mu - 1) ? xs[i + 1] : front.x_max();
    if (hi - lo <= 4 * h) continue;  // pinched between neighbors

    double residual = 0.0;
    if (xs[i] - lo <= 2 * h) {
      // lower bound active: only an inward (increasing) gradient counts
      const double g = (value_at(i, xs[i] + h) - value_at(i, xs[i])) / h;
      residual = std::max(0.0, g);
    } else if (hi - xs[i] <= 2 * h) {
      const double g = (value_at(i, xs[i]) - value_at(i, xs[i] - h)) / h;
      residual = std::max(0.0, -g);
    } else {
      const double g =
          (value_at(i, xs[i] + h) - value_at(i, xs[i] - h)) / (2 * h);
      residual = std::abs(g);
    }
    norm = std::max(norm, residual);
  }
  return norm;
}

}  // namespace

MaximizeResult maximize_hypervolume(const Front& front, int mu,
                                    ReferencePoint ref, bool fixed_endpoints,
                                    const SolverOptions& opts) {
  if (fixed_endpoints && mu < 3)
    throw std::invalid_argument(
        "maximize_hypervolume with fixed endpoints requires mu >= 3");
  if (!fixed_endpoints && mu < 2)
    throw std::invalid_argument("maximize_hypervolume requires mu >= 2");
  require_visible_strict(front, ref, fixed_endpoints);

  auto starts = build_starts(front, mu, opts);
  if (fixed_endpoints) {
    for (auto& xs : starts) {
      xs.front() = front.x_min();
      xs.back() = front.x_max();
      std::sort(xs.begin(), xs.end());
    }
  }

  bool any_converged = false;
  int best_idx = -1;
  AscentOutcome best;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    AscentOutcome out = coordinate_ascent(front, std::move(starts[k]), ref,
                                          fixed_endpoints, opts);
    if (opts.verbose)
      std::fprintf(stderr,
                   "solver=maximize_hypervolume start=%zu cycles=%zu "
                   "iterations=%d objective=%.12g converged=%d\n",
                   k, out.history.size() - 1, out.iterations, out.objective,
                   out.converged ? 1 : 0);
    if (out.converged) any_converged = true;
    if (best_idx < 0 || out.objective > best.objective) {
      best = std::move(out);
      best_idx = static_cast<int>(k);
    }
  }

  if (!any_converged) {
    std::ostringstream os;
    os << "maximize_hypervolume did not converge within " << opts.max_iters
       << " line searches per start (best objective " << best.objective << ")";
    throw ConvergenceError(os.str(), best.xs,
                           best.history.size() >= 2
                               ? best.history.back() -
                                     best.history[best.history.size() - 2]
                               : 0.0);
  }

  MaximizeResult result{PointSet(front, best.xs),
                        best.objective,
                        projected_gradient_norm(front, best.xs, ref,
                                                fixed_endpoints),
                        best.iterations,
                        best_idx,
                        std::move(best.history)};
  return result;
}

namespace {

struct Propagation {
  bool overshoot = false;
  double residual = 0.0;
  std::vector<double> xs;
};

Propagation propagate_delta(const Front& front, int mu, bool fixed_endpoints,
                            double delta) {
  Propagation prop;
  prop.xs.resize(mu);
  const double y_min = front.y_min();

  if (fixed_endpoints) {
    prop.xs[0] = front.x_min();
    for (int i = 1; i < mu; ++i) {
      const double z = delta * prop.xs[i - 1];
      if (z > front.x_max()) {
        prop.overshoot = true;
        return prop;
      }
      const double target = front.eval(z) / delta;
      if (i == mu - 1) {
        // Terminal condition x_mu = x_max, measured in f-space where it
        // stays well conditioned even when the front ends vertically.
        prop.residual = y_min - target;
        prop.xs[i] = front.x_max();
        return prop;
      }
      if (target < y_min) {
        prop.overshoot = true;
        return prop;
      }
      prop.xs[i] = front.inverse(target);
    }
    return prop;  // unreachable: the terminal step returns (mu >= 2)
  }

  double z = front.x_min();
  for (int i = 0; i < mu; ++i) {
    const double target = front.eval(z) / delta;
    if (target < y_min) {
      prop.overshoot = true;
      return prop;
    }
    prop.xs[i] = front.inverse(target);
    z = delta * prop.xs[i];
    if (i + 1 < mu && z > front.x_max()) {
      prop.overshoot = true;
      return prop;
    }
  }
  prop.residual = z - front.x_max();
  return prop;
}

double propagation_sign(const Propagation& prop) {
  return prop.overshoot ? 1.0 : prop.residual;
}

}  // namespace

OptimalApproximation optimal_approximation(const Front& front, int mu,
                                           bool fixed_endpoints,
                                           const SolverOptions& opts) {
  if (fixed_endpoints && mu < 2)
    throw std::invalid_argument(
        "optimal_approximation with fixed endpoints requires mu >= 2");
  if (!fixed_endpoints && mu < 1)
    throw std::invalid_argument("optimal_approximation requires mu >= 1");

  // delta = 1 places every point at x_min (residual < 0); the bracket top is
  // the ratio at which a single point already covers the whole front.
  double lo = 1.0;
  double hi =
      (front.y_max() / front.y_min()) * (front.x_max() / front.x_min());
  if (propagation_sign(propagate_delta(front, mu, fixed_endpoints, lo)) > 0.0)
    throw SolverError(
        "optimal_approximation: residual positive at delta=1; the front is "
        "not strictly decreasing?");
  int doubling = 0;
  while (propagation_sign(propagate_delta(front, mu, fixed_endpoints, hi)) <
         0.0) {
    hi *= 2.0;
    if (++doubling > 60)
      throw SolverError(
          "optimal_approximation: could not bracket delta; residual stayed "
          "negative up to delta=" +
          std::to_string(hi));
  }

  // Bisect to full double resolution: steep-ended fronts amplify any delta
  // slack into the certificate equalities, and iterations are cheap.
  int iters = 0;
  while (iters < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (propagation_sign(propagate_delta(front, mu, fixed_endpoints, mid)) <
        0.0)
      lo = mid;
    else
      hi = mid;
    ++iters;
  }

  const double delta = 0.5 * (lo + hi);
  Propagation prop = propagate_delta(front, mu, fixed_endpoints, delta);
  if (prop.overshoot) prop = propagate_delta(front, mu, fixed_endpoints, lo);
  if (prop.overshoot)
    throw SolverError("optimal_approximation: converged bracket still "
                      "overshoots; residual trace lost");

  if (opts.verbose)
    std::fprintf(stderr,
                 "solver=optimal_approximation mode=%s iterations=%d "
                 "delta=%.15g residual=%.3g\n",
                 fixed_endpoints ? "fixed" : "free", iters, delta,
                 prop.residual);

  OptimalApproximation result{PointSet(front, prop.xs),
                              Certificate{}, delta, iters};
  result.certificate =
      make_certificate(front, result.points, delta,
                       fixed_endpoints ? CertificateMode::fixed_endpoints
                                       : CertificateMode::free_endpoints);
  if (!check_certificate(front, result.points, result.certificate)) {
    std::ostringstream os;
    os << "optimal_approximation produced a non-certifiable distribution "
          "(delta="
       << delta << ", residual=" << prop.residual << ")";
    throw SolverError(os.str());
  }
  return result;
}

namespace {

struct StairState {
  double prev_x;
  double acc;
};

inline StairState stair_step(const StairState& s, double x, double y,
                             ReferencePoint ref) {
  if (x <= ref.r1 || y <= ref.r2) return s;
  return {x, s.acc + (x - s.prev_x) * (y - ref.r2)};
}

}  // namespace

BruteForceResult brute_force_best(const Front& front, int mu,
                                  ReferencePoint ref, Objective objective,
                                  int grid_n) {
  if (mu < 1 || mu > 4)
    throw std::invalid_argument("brute_force_best supports 1 <= mu <= 4");
  if (grid_n < 2 || grid_n > 2000)
    throw std::invalid_argument("brute_force_best requires 2 <= grid_n <= 2000");

  long double tuples = 1.0L;
  for (int i = 0; i < mu; ++i) tuples = tuples * (grid_n - i) / (i + 1);
  if (tuples > 6e8L) {
    std::ostringstream os;
    os << "brute_force_best budget exceeded: C(" << grid_n << ", " << mu
       << ") = " << static_cast<double>(tuples) << " tuples";
    throw BudgetError(os.str());
  }

  const int n = grid_n;
  std::vector<double> xs(n), ys(n);
  for (int k = 0; k < n; ++k) {
    xs[k] = front.x_min() +
            (front.x_max() - front.x_min()) * static_cast<double>(k) / (n - 1);
    ys[k] = front.eval(xs[k]);
  }

  std::vector<int> best_idx(mu, 0);
  double best = (objective == Objective::hyp)
                    ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();

  if (objective == Objective::hyp) {
    const StairState s0{ref.r1, 0.0};
    auto consider = [&](double v, std::initializer_list<int> idx) {
      if (v > best) {
        best = v;
        std::copy(idx.begin(), idx.end(), best_idx.begin());
      }
    };
    switch (mu) {
      case 1:
        for (int i = 0; i < n; ++i)
          consider(stair_step(s0, xs[i], ys[i], ref).acc, {i});
        break;
      case 2:
        for (int i = 0; i < n; ++i) {
          const StairState s1 = stair_step(s0, xs[i], ys[i], ref);
          for (int j = i + 1; j < n; ++j)
            consider(stair_step(s1, xs[j], ys[j], ref).acc, {i, j});
        }
        break;
      case 3:
        for (int i = 0; i < n; ++i) {
          const StairState s1 = stair_step(s0, xs[i], ys[i], ref);
          for (int j = i + 1; j < n; ++j) {
            const StairState s2 = stair_step(s1, xs[j], ys[j], ref);
            for (int k = j + 1; k < n; ++k)
              consider(stair_step(s2, xs[k], ys[k], ref).acc, {i, j, k});
          }
        }
        break;
      default:
        for (int i = 0; i < n; ++i) {
          const StairState s1 = stair_step(s0, xs[i], ys[i], ref);
          for (int j = i + 1; j < n; ++j) {
            const StairState s2 = stair_step(s1, xs[j], ys[j], ref);
            for (int k = j + 1; k < n; ++k) {
              const StairState s3 = stair_step(s2, xs[k], ys[k], ref);
              for (int l = k + 1; l < n; ++l)
                consider(stair_step(s3, xs[l], ys[l], ref).acc, {i, j, k, l});
            }
          }
        }
        break;
    }
  } else {
    // Approximation objective: precompute the boundary terms and, for
    // mu >= 2, the worst ratio of every grid interval pair.
    std::vector<double> left(n), right(n);
    for (int i = 0; i < n; ++i) {
      left[i] = front.y_max() / ys[i];
      right[i] = front.x_max() / xs[i];
    }
    std::vector<double> pair;
    if (mu >= 2) {
      pair.assign(static_cast<std::size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          pair[static_cast<std::size_t>(i) * n + j] =
              interval_worst_point(front, xs[i], xs[j]).ratio;
    }
    auto pr = [&](int i, int j) {
      return pair[static_cast<std::size_t>(i) * n + j];
    };
    auto consider = [&](double v, std::initializer_list<int> idx) {
      if (v < best) {
        best = v;
        std::copy(idx.begin(), idx.end(), best_idx.begin());
      }
    };
    switch (mu) {
      case 1:
        for (int i = 0; i < n; ++i) consider(std::max(left[i], right[i]), {i});
        break;
      case 2:
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            consider(std::max({left[i], pr(i, j), right[j]}), {i, j});
        break;
      case 3:
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            const double head = std::max(left[i], pr(i, j));
            for (int k = j + 1; k < n; ++k)
              consider(std::max({head, pr(j, k), right[k]}), {i, j, k});
          }
        break;
      default:
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            const double head = std::max(left[i], pr(i, j));
            for (int k = j + 1; k < n; ++k) {
              const double head2 = std::max(head, pr(j, k));
              for (int l = k + 1; l < n; ++l)
                consider(std::max({head2, pr(k, l), right[l]}), {i, j, k, l});
            }
          }
        break;
    }
  }

  std::vector<double> chosen(mu);
  for (int i = 0; i < mu; ++i) chosen[i] = xs[best_idx[i]];
  return {PointSet(front, chosen), best};
}

}  // namespace hvapprox
