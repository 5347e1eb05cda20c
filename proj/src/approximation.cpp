#include "hvapprox/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hvapprox/errors.hpp"

namespace hvapprox {

namespace {

constexpr double kCertRelTol = 1e-8;
constexpr int kBisectionMaxIter = 200;

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

WorstPoint interval_worst_point(const Front& front, double xi, double xj) {
  if (!(xi < xj))
    throw std::invalid_argument("interval_worst_point requires xi < xj");
  xi = front.clamp_x(xi);
  xj = front.clamp_x(xj);

  const double fj = front.eval(xj);
  auto g = [&](double x) { return x * fj - xi * front.eval(x); };

  double lo = xi;
  double hi = xj;
  if (!(g(lo) <= 0.0 && g(hi) >= 0.0)) {
    std::ostringstream os;
    os << "worst-point bracket failure on [" << xi << ", " << xj
       << "]: g(lo)=" << g(lo) << " g(hi)=" << g(hi);
    throw SolverError(os.str());
  }

  const double x_tol = 1e-12 * std::max(1.0, front.x_max() - front.x_min());
  for (int it = 0; it < kBisectionMaxIter && (hi - lo) > x_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double x = 0.5 * (lo + hi);
  return {x, x / xi};
}

ApproxResult ratio(const Front& front, const PointSet& points) {
  const auto& xs = points.xs();
  const std::size_t mu = xs.size();

  ApproxResult result;
  result.per_interval.reserve(mu + 1);

  // Left boundary piece [x_min, x_1]: the f-constraint binds at x_min.
  result.per_interval.push_back(
      {0, front.x_min(), front.y_max() / front.eval(xs.front())});

  for (std::size_t i = 0; i + 1 < mu; ++i) {
    if (xs[i + 1] - xs[i] <= 0.0) {
      result.per_interval.push_back({i + 1, xs[i], 1.0});
      continue;
    }
    const WorstPoint wp = interval_worst_point(front, xs[i], xs[i + 1]);
    result.per_interval.push_back({i + 1, wp.x, wp.ratio});
  }

  // Right boundary piece [x_mu, x_max]: the x-constraint binds at x_max.
  result.per_interval.push_back({mu, front.x_max(), front.x_max() / xs.back()});

  result.delta = 1.0;
  result.witness_x = xs.front();
  bool found = false;
  for (const auto& term : result.per_interval) {
    if (!found || term.ratio > result.delta) {
      result.delta = term.ratio;
      result.witness_x = term.worst_x;
      found = true;
    }
  }
  result.delta = std::max(result.delta, 1.0);
  return result;
}

Certificate make_certificate(const Front& front, const PointSet& points,
                             double delta, CertificateMode mode) {
  const auto& xs = points.xs();
  Certificate cert;
  cert.delta = delta;
  cert.mode = mode;
  cert.zs.resize(xs.size() + 1);
  cert.zs.front() = front.x_min();
  for (std::size_t i = 1; i < xs.size(); ++i) cert.zs[i] = delta * xs[i - 1];
  cert.zs.back() = front.x_max();
  return cert;
}

bool check_certificate(const Front& front, const PointSet& points,
                       const Certificate& cert) {
  const auto& xs = points.xs();
  const std::size_t mu = xs.size();

  if (cert.zs.size() != mu + 1) {
    std::ostringstream os;
    os << "certificate has " << cert.zs.size() << " auxiliary points, expected "
       << (mu + 1);
    throw CertificateError(os.str());
  }
  if (!(cert.delta > 1.0))
    throw CertificateError("certificate delta must exceed 1");
  if (cert.mode == CertificateMode::fixed_endpoints && mu < 2)
    throw CertificateError("fixed-endpoints certificate needs mu >= 2");

  const double tol_x =
      1e-9 * std::max({1.0, std::abs(front.x_min()), std::abs(front.x_max())});
  auto require_between = [&](double z, double lo, double hi, std::size_t i) {
    if (z < lo - tol_x || z > hi + tol_x) {
      std::ostringstream os;
      os << "certificate interleaving violated at z_" << i << "=" << z
         << " not in [" << lo << ", " << hi << "]";
      throw CertificateError(os.str());
    }
  };
  require_between(cert.zs.front(), front.x_min(), xs.front(), 0);
  for (std::size_t i = 1; i < mu; ++i)
    require_between(cert.zs[i], xs[i - 1], xs[i], i);
  require_between(cert.zs.back(), xs.back(), front.x_max(), mu);

  const double delta = cert.delta;
  auto equals_delta = [&](double value) {
    return close_rel(value, delta, kCertRelTol);
  };

  // Interior equalities, both modes: delta = z_i/x_i = f(z_i)/f(x_{i+1}).
  for (std::size_t i = 1; i < mu; ++i) {
    if (!equals_delta(cert.zs[i] / xs[i - 1])) return false;
    if (!equals_delta(front.eval(cert.zs[i]) / front.eval(xs[i]))) return false;
  }

  if (cert.mode == CertificateMode::fixed_endpoints) {
    if (std::abs(xs.front() - front.x_min()) > tol_x) return false;
    if (std::abs(xs.back() - front.x_max()) > tol_x) return false;
    return true;
  }

  // Free endpoints: boundary pieces enter with z_0 = x_min, z_mu = x_max.
  if (std::abs(cert.zs.front() - front.x_min()) > tol_x) return false;
  if (std::abs(cert.zs.back() - front.x_max()) > tol_x) return false;
  if (!equals_delta(front.eval(cert.zs.front()) / front.eval(xs.front())))
    return false;
  if (!equals_delta(cert.zs.back() / xs.back())) return false;
  return true;
}

}  // namespace hvapprox
