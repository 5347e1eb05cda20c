#include "hvapprox/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hvapprox/errors.hpp"

namespace hvapprox {

namespace {

void require_mu(int mu, int min_mu, const char* where) {
  if (mu < min_mu) {
    std::ostringstream os;
    os << where << " requires mu >= " << min_mu << ", got " << mu;
    throw std::invalid_argument(os.str());
  }
}

// Exponent-heavy expressions are evaluated in extended precision and rounded
// once at the end; this keeps quoted four-decimal factors bit-stable.
double powx(double base, long double exponent) {
  return static_cast<double>(
      powl(static_cast<long double>(base), exponent));
}

/// Reject reference points that leave no front point with positive
/// contribution. Equality on the boundary is allowed: the distribution then
/// collapses onto a single coordinate.
void require_visible(const Front& front, ReferencePoint ref) {
  const double tol = front.domain_tolerance();
  if (ref.r1 > front.x_max() + tol) {
    std::ostringstream os;
    os << "degenerate reference: r1=" << ref.r1 << " beyond x_max="
       << front.x_max();
    throw DegenerateReferenceError(os.str());
  }
  const double x_anchor = std::max(ref.r1, front.x_min());
  const double f_anchor = front.eval(std::min(x_anchor, front.x_max()));
  if (ref.r2 > f_anchor + front.range_tolerance()) {
    std::ostringstream os;
    os << "degenerate reference: r2=" << ref.r2
       << " dominates the front at x=" << x_anchor
       << " (f=" << f_anchor << ")";
    throw DegenerateReferenceError(os.str());
  }
}

/// Clamp computed coordinates into the domain. Out-of-domain or descending
/// results mean the reference point violates the regime's preconditions.
PointSet finalize_ref_points(const Front& front, std::vector<double> xs) {
  const double tol =
      1e-9 * std::max({1.0, std::abs(front.x_min()), std::abs(front.x_max())});
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i + 1] < xs[i] - tol) {
      std::ostringstream os;
      os << "degenerate reference: computed distribution is not ascending ("
         << "x_" << (i + 1) << "=" << xs[i] << " > x_" << (i + 2) << "="
         << xs[i + 1] << ")";
      throw DegenerateReferenceError(os.str());
    }
  }
  if (xs.front() < front.x_min() - tol || xs.back() > front.x_max() + tol) {
    std::ostringstream os;
    os << "degenerate reference: computed distribution leaves the domain ["
       << front.x_min() << ", " << front.x_max() << "] (x_1=" << xs.front()
       << ", x_mu=" << xs.back() << ")";
    throw DegenerateReferenceError(os.str());
  }
  for (double& x : xs)
    x = std::clamp(x, front.x_min(), front.x_max());
  return PointSet(front, xs);
}

RefCase classify_by_endpoints(const Front& front, const PointSet& points) {
  const double tol =
      1e-9 * std::max({1.0, std::abs(front.x_min()), std::abs(front.x_max())});
  const bool left = std::abs(points.front_x() - front.x_min()) <= tol;
  const bool right = std::abs(points.back_x() - front.x_max()) <= tol;
  if (left && right) return RefCase::both_extremes;
  if (!left && !right) return RefCase::interior_both;
  if (left) return RefCase::left_fixed;
  return RefCase::right_fixed;
}

struct LinearRefSolution {
  double m1 = 0;
  double m2 = 0;
  std::vector<double> xs;
};

LinearRefSolution linear_ref_solution(double c, double d, int mu,
                                      ReferencePoint ref) {
  const long double lc = c, ld = d, lmu = mu;
  const long double r1 = ref.r1, r2 = ref.r2;

  const long double m1 = std::min(
      {lc + ld - r1, lmu / (lmu - 1) * (lc + ld - 1),
       (ld - 1) + (ld + (lmu + 1) * lc) / lmu + (r2 + ld - 1) / (lmu * lc) +
           (ld - 1) / (lmu * lc * lc)});
  const long double m2 =
      std::min({(1 - ld) / lc - r2, lmu / (lmu - 1) * (1 - lc - ld) / lc,
                (1 - lc - ld) / lc + (r1 - lc - ld) / (lmu * lc)});

  const long double offset = (m1 - ld + 1) / lc;
  const long double step =
      (ld - m1 + (m2 + 1) * lc - 1) / (lc * (lmu + 1));

  LinearRefSolution sol;
  sol.m1 = static_cast<double>(m1);
  sol.m2 = static_cast<double>(m2);
  sol.xs.resize(mu);
  for (int i = 1; i <= mu; ++i)
    sol.xs[i - 1] = static_cast<double>(offset + i * step);
  return sol;
}

struct ConvexRefSolution {
  RefCase case_id = RefCase::both_extremes;
  std::vector<double> xs;
  RatioBreakdown breakdown;
};

ConvexRefSolution convex_ref_solution(double c, int mu, ReferencePoint ref) {
  const long double lc = c, lmu = mu;
  const long double r1 = ref.r1, r2 = ref.r2;
  // Negative components behave like zero in the regime inequalities; the
  // case formulas below only use a component where it is positive.
  const long double a1 = std::max<long double>(r1, 0);
  const long double a2 = std::max<long double>(r2, 0);
  const long double s = powl(lc, -1 / (lmu - 1));

  ConvexRefSolution sol;
  sol.xs.resize(mu);

  if (a1 <= s && a2 <= s) {
    sol.case_id = RefCase::both_extremes;
    for (int i = 1; i <= mu; ++i)
      sol.xs[i - 1] = static_cast<double>(powl(lc, (i - 1) / (lmu - 1)));
    sol.breakdown.left = 1.0;
    sol.breakdown.center = static_cast<double>(powl(lc, 1 / (2 * lmu - 2)));
    sol.breakdown.right = 1.0;
  } else if (a1 <= lc * powl(a2, lmu) && a2 <= lc * powl(a1, lmu)) {
    sol.case_id = RefCase::interior_both;
    const long double log_c = logl(lc), log_r1 = logl(r1), log_r2 = logl(r2);
    for (int i = 1; i <= mu; ++i) {
      const long double e =
          (i * log_c + (lmu - i + 1) * log_r1 - i * log_r2) / (lmu + 1);
      sol.xs[i - 1] = static_cast<double>(expl(e));
    }
    sol.breakdown.left =
        static_cast<double>(powl(lc * powl(r1, lmu) / r2, 1 / (lmu + 1)));
    sol.breakdown.center =
        static_cast<double>(powl(lc / (r1 * r2), 1 / (2 * (lmu + 1))));
    sol.breakdown.right = static_cast<double>(
        lc * powl(powl(r2, lmu) / (powl(lc, lmu) * r1), 1 / (lmu + 1)));
  } else if (a2 >= s && a2 <= lc && a2 >= lc * powl(a1, lmu)) {
    sol.case_id = RefCase::left_fixed;
    for (int i = 1; i <= mu; ++i)
      sol.xs[i - 1] = static_cast<double>(powl(lc / r2, (i - 1) / lmu));
    sol.breakdown.left = 1.0;
    sol.breakdown.center = static_cast<double>(powl(lc / r2, 1 / (2 * lmu)));
    // x_max / x_mu with x_mu = (c/r2)^((mu-1)/mu).
    sol.breakdown.right =
        static_cast<double>(lc * powl(r2 / lc, (lmu - 1) / lmu));
  } else if (a1 >= s && a1 <= lc && a1 >= lc * powl(a2, lmu)) {
    sol.case_id = RefCase::right_fixed;
    for (int i = 1; i <= mu; ++i)
      sol.xs[i - 1] = static_cast<double>(r1 * powl(lc / r1, i / lmu));
    sol.breakdown.left =
        static_cast<double>(powl(lc * powl(r1, lmu - 1), 1 / lmu));
    sol.breakdown.center = static_cast<double>(powl(lc / r1, 1 / (2 * lmu)));
    sol.breakdown.right = 1.0;
  } else {
    std::ostringstream os;
    os << "no reference-point regime matches r=(" << ref.r1 << ", " << ref.r2
       << ") for c=" << c << ", mu=" << mu << ": case1 needs r<=(" << (double)s
       << ", " << (double)s << "); case2 needs r1<=" << (double)(lc * powl(a2, lmu))
       << " and r2<=" << (double)(lc * powl(a1, lmu)) << "; case3 needs r2 in ["
       << (double)s << ", " << c << "] with r2>=" << (double)(lc * powl(a1, lmu))
       << "; case4 needs r1 in [" << (double)s << ", " << c << "] with r1>="
       << (double)(lc * powl(a2, lmu));
    throw RegimeError(os.str());
  }

  sol.breakdown.overall = std::max(
      {sol.breakdown.left, sol.breakdown.center, sol.breakdown.right});
  return sol;
}

}  // namespace

std::string to_string(RefCase c) {
  switch (c) {
    case RefCase::both_extremes:
      return "both-extremes";
    case RefCase::interior_both:
      return "interior-both";
    case RefCase::left_fixed:
      return "left-fixed";
    case RefCase::right_fixed:
      return "right-fixed";
  }
  return "unknown";
}

PointSet linear_hyp_dist(double c, double d, int mu) {
  require_mu(mu, 2, "linear_hyp_dist");
  const Front front = Front::linear(c, d);
  std::vector<double> xs(mu);
  const long double lo = front.x_min(), hi = front.x_max();
  for (int i = 1; i <= mu; ++i)
    xs[i - 1] = static_cast<double>(
        lo + (static_cast<long double>(i) - 1) / (mu - 1) * (hi - lo));
  return PointSet(front, xs);
}

double linear_hyp_ratio_fixed(double c, double d, int mu) {
  require_mu(mu, 2, "linear_hyp_ratio_fixed");
  Front::linear(c, d);  // parameter validation
  const long double ld = d, lc = c, lmu = mu;
  return static_cast<double>(ld * (lmu - 1) / (ld * (lmu - 2) - lc + 1));
}

PointSet convex_hyp_dist(double c, int mu) {
  require_mu(mu, 2, "convex_hyp_dist");
  const Front front = Front::reciprocal(c);
  std::vector<double> xs(mu);
  for (int i = 1; i <= mu; ++i)
    xs[i - 1] = powx(c, static_cast<long double>(i - 1) / (mu - 1));
  return PointSet(front, xs);
}

double convex_hyp_ratio_fixed(double c, int mu) {
  require_mu(mu, 2, "convex_hyp_ratio_fixed");
  Front::reciprocal(c);
  return powx(c, 1.0L / (2 * mu - 2));
}

OptApprox linear_opt_app_dist(double c, double d, int mu) {
  require_mu(mu, 1, "linear_opt_app_dist");
  const Front front = Front::linear(c, d);
  const long double lc = c, ld = d, lmu = mu;
  const long double denom = lc * (lc + (lmu + 1) * ld - 1);
  std::vector<double> xs(mu);
  for (int i = 1; i <= mu; ++i)
    xs[i - 1] =
        static_cast<double>(ld * (lmu * lc - i * (lc + ld - 1)) / denom);
  const double delta =
      static_cast<double>((lc + (lmu + 1) * ld - 1) / (lmu * ld));
  return {PointSet(front, xs), delta};
}

OptApprox convex_opt_app_dist(double c, int mu) {
  require_mu(mu, 1, "convex_opt_app_dist");
  const Front front = Front::reciprocal(c);
  std::vector<double> xs(mu);
  for (int i = 1; i <= mu; ++i)
    xs[i - 1] = powx(c, static_cast<long double>(2 * i - 1) / (2 * mu));
  return {PointSet(front, xs), powx(c, 1.0L / (2 * mu))};
}

RefDist linear_hyp_dist_ref(double c, double d, int mu, ReferencePoint ref) {
  require_mu(mu, 2, "linear_hyp_dist_ref");
  const Front front = Front::linear(c, d);
  require_visible(front, ref);

  const LinearRefSolution sol = linear_ref_solution(c, d, mu, ref);
  PointSet points = finalize_ref_points(front, sol.xs);

  RefRegime regime;
  regime.case_id = classify_by_endpoints(front, points);
  regime.m1 = sol.m1;
  regime.m2 = sol.m2;
  return {std::move(points), regime};
}

RatioBreakdown linear_hyp_ratio_ref(double c, double d, int mu,
                                    ReferencePoint ref) {
  // Shares the distribution's validation (and therefore its error behavior).
  const RefDist dist = linear_hyp_dist_ref(c, d, mu, ref);
  const long double lc = c, ld = d, lmu = mu;
  const long double m1 = *dist.regime.m1;
  const long double m2 = *dist.regime.m2;

  RatioBreakdown b;
  b.left = static_cast<double>((lc + ld) * (lmu + 1) /
                               (lmu + lc + ld + m1 * lmu + m2 * lc));
  b.center = static_cast<double>(
      ld * (lmu + 1) / (ld * lmu + lc + 2 * ld - 1 - m1 + m2 * lc));
  b.right = static_cast<double>((1 - ld) * (lmu + 1) /
                                (lc * lmu - ld + 1 + m1 + m2 * lc * lmu));
  b.overall = std::max({b.left, b.center, b.right});
  return b;
}

RefDist convex_hyp_dist_ref(double c, int mu, ReferencePoint ref) {
  require_mu(mu, 2, "convex_hyp_dist_ref");
  const Front front = Front::reciprocal(c);
  require_visible(front, ref);

  ConvexRefSolution sol = convex_ref_solution(c, mu, ref);
  PointSet points = finalize_ref_points(front, std::move(sol.xs));

  RefRegime regime;
  regime.case_id = sol.case_id;
  return {std::move(points), regime};
}

RatioBreakdown convex_hyp_ratio_ref(double c, int mu, ReferencePoint ref) {
  require_mu(mu, 2, "convex_hyp_ratio_ref");
  const Front front = Front::reciprocal(c);
  require_visible(front, ref);

  ConvexRefSolution sol = convex_ref_solution(c, mu, ref);
  finalize_ref_points(front, std::move(sol.xs));  // validation only
  return sol.breakdown;
}

}  // namespace hvapprox
