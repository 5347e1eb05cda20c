#ifndef HVAPPROX_CLOSED_FORM_HPP
#define HVAPPROX_CLOSED_FORM_HPP

#include <optional>
#include <string>

#include "hvapprox/front.hpp"
#include "hvapprox/point_set.hpp"

namespace hvapprox {

/// Endpoint-inclusion pattern a reference point induces on the optimal
/// hypervolume distribution. Ties on regime boundaries resolve to the lowest
/// case id; the distributions coincide there.
enum class RefCase {
  both_extremes = 1,  ///< x_1 = x_min and x_mu = x_max
  interior_both = 2,  ///< both endpoints strictly inside the domain
  left_fixed = 3,     ///< x_1 = x_min, x_mu < x_max
  right_fixed = 4,    ///< x_1 > x_min, x_mu = x_max
};

std::string to_string(RefCase c);

struct RefRegime {
  RefCase case_id = RefCase::both_extremes;
  /// Three-way minima governing the linear-front distribution; only set for
  /// linear fronts.
  std::optional<double> m1;
  std::optional<double> m2;
};

struct RefDist {
  PointSet points;
  RefRegime regime;
};

/// Approximation factor split into the three front pieces.
struct RatioBreakdown {
  double left = 1.0;    ///< [x_min, x_1], equals f(x_min)/f(x_1)
  double center = 1.0;  ///< worst interior interval ratio
  double right = 1.0;   ///< [x_mu, x_max], equals x_max/x_mu
  double overall = 1.0;
};

struct OptApprox {
  PointSet points;
  double delta = 1.0;
};

// ---- Fixed endpoints (extremes included in every distribution) ----

/// Optimal hypervolume distribution on f(x) = c*x + d: equally spaced points
/// from x_min to x_max. Requires mu >= 2.
PointSet linear_hyp_dist(double c, double d, int mu);

/// Approximation ratio achieved by linear_hyp_dist: d(mu-1)/(d(mu-2)-c+1).
double linear_hyp_ratio_fixed(double c, double d, int mu);

/// Optimal hypervolume distribution on f(x) = c/x with reference point (0,0):
/// geometric points x_i = c^((i-1)/(mu-1)). Requires mu >= 2.
PointSet convex_hyp_dist(double c, int mu);

/// Approximation ratio achieved by convex_hyp_dist: c^(1/(2mu-2)).
double convex_hyp_ratio_fixed(double c, int mu);

// ---- Free endpoints (overall optimal approximation distributions) ----

/// Optimal approximation distribution on the linear front, endpoints free:
/// x_i = d(mu*c - i(c+d-1)) / (c(c+(mu+1)d-1)), delta = (c+(mu+1)d-1)/(mu*d).
/// Requires mu >= 1.
OptApprox linear_opt_app_dist(double c, double d, int mu);

/// Optimal approximation distribution on f(x) = c/x, endpoints free:
/// x_i = c^((2i-1)/(2mu)), delta = c^(1/(2mu)). Requires mu >= 1.
OptApprox convex_opt_app_dist(double c, int mu);

// ---- Reference-point-dependent optimal hypervolume distributions ----

/// Optimal hypervolume distribution on the linear front for reference point
/// r: equally spaced points determined by the three-way minima M1, M2.
/// Throws DegenerateReferenceError when the reference point leaves no usable
/// front portion or pushes the points out of the domain. Requires mu >= 2.
RefDist linear_hyp_dist_ref(double c, double d, int mu, ReferencePoint ref);

/// Approximation factor of linear_hyp_dist_ref split into the three pieces.
RatioBreakdown linear_hyp_ratio_ref(double c, double d, int mu,
                                    ReferencePoint ref);

/// Optimal hypervolume distribution on f(x) = c/x for reference point r,
/// selected among the four endpoint-inclusion cases. Requires mu >= 2.
RefDist convex_hyp_dist_ref(double c, int mu, ReferencePoint ref);

/// Approximation factor of convex_hyp_dist_ref split into the three pieces.
RatioBreakdown convex_hyp_ratio_ref(double c, int mu, ReferencePoint ref);

}  // namespace hvapprox

#endif  // HVAPPROX_CLOSED_FORM_HPP
