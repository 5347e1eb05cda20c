#ifndef HVAPPROX_APPROXIMATION_HPP
#define HVAPPROX_APPROXIMATION_HPP

#include <cstddef>
#include <vector>

#include "hvapprox/front.hpp"
#include "hvapprox/point_set.hpp"

namespace hvapprox {

/// Worst-approximated coordinate of one front interval.
struct WorstPoint {
  double x = 0.0;
  double ratio = 1.0;
};

/// One row of the per-interval breakdown. Index 0 is the left boundary piece
/// [x_min, x_1] (worst point x_min), indices 1..mu-1 the interior intervals
/// [x_i, x_{i+1}], index mu the right boundary piece [x_mu, x_max] (worst
/// point x_max).
struct IntervalTerm {
  std::size_t index = 0;
  double worst_x = 0.0;
  double ratio = 1.0;
};

struct ApproxResult {
  double delta = 1.0;    ///< approximation ratio of the set, >= 1
  double witness_x = 0;  ///< a coordinate attaining delta (lowest index wins)
  std::vector<IntervalTerm> per_interval;
};

/**
 * Worst-approximated point of the open interval (xi, xj) between two
 * consecutive set members, together with its local ratio x~/xi. The point is
 * the unique root of g(x) = x*f(xj) - xi*f(x), found by bisection
 * (g is strictly increasing for decreasing f).
 */
WorstPoint interval_worst_point(const Front& front, double xi, double xj);

/**
 * Multiplicative approximation ratio of a point set: the smallest delta such
 * that every front point (x, f(x)) has a set member x_i with x <= delta*x_i
 * and f(x) <= delta*f(x_i). Left of x_1 only the f-constraint binds, right of
 * x_mu only the x-constraint, so
 *   delta = max( f(x_min)/f(x_1), x_max/x_mu, max_i worst-interval ratio ).
 */
ApproxResult ratio(const Front& front, const PointSet& points);

enum class CertificateMode {
  fixed_endpoints,  ///< x_1 = x_min and x_mu = x_max required
  free_endpoints,   ///< endpoints free; boundary pieces enter the equalities
};

/**
 * Optimality certificate: auxiliary points z_0..z_mu interleaving the set,
 * with equalized local ratios. In fixed-endpoints mode optimality requires
 * delta = z_i/x_i = f(z_i)/f(x_{i+1}) for 1 <= i < mu; free-endpoints mode
 * additionally requires f(z_0)/f(x_1) = delta with z_0 = x_min and
 * z_mu/x_mu = delta with z_mu = x_max.
 */
struct Certificate {
  std::vector<double> zs;  ///< z_0..z_mu, size mu+1
  double delta = 1.0;
  CertificateMode mode = CertificateMode::free_endpoints;
};

/// Build the canonical certificate for a claimed ratio: z_i = delta * x_i for
/// the interior, z_0 = x_min, z_mu = x_max.
Certificate make_certificate(const Front& front, const PointSet& points,
                             double delta, CertificateMode mode);

/**
 * Check the certificate equalities to 1e-8 relative. Structural violations
 * (wrong length, interleaving broken, delta <= 1) throw CertificateError;
 * equality failures return false.
 */
bool check_certificate(const Front& front, const PointSet& points,
                       const Certificate& cert);

}  // namespace hvapprox

#endif  // HVAPPROX_APPROXIMATION_HPP
