#ifndef HVAPPROX_FRONT_HPP
#define HVAPPROX_FRONT_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hvapprox {

enum class FrontKind { linear, reciprocal, power };

std::string to_string(FrontKind kind);

/**
 * A bi-objective Pareto front y = f(x): a continuous, strictly decreasing
 * curve on a closed interval [x_min, x_max] with x_min > 0 and f(x_max) > 0.
 *
 * Three families are supported:
 *  - linear      f(x) = c*x + d         on [1, (1-d)/c],  c < 0, d > 1 - c
 *  - reciprocal  f(x) = c/x             on [1, c],        c > 1
 *  - power       f(x) = y_mu - (y_mu - y_1) * (1 - u^p)^(1/p),
 *                u = (x - x_1)/(x_mu - x_1), on [x_1, x_mu], p > 0
 *
 * Parameters are validated eagerly at construction. Fronts are immutable
 * values and safe to share across threads.
 */
class Front {
 public:
  static Front linear(double slope_c, double intercept_d);
  static Front reciprocal(double scale_c);
  static Front power(double p, double x1, double y1, double x_mu, double y_mu);

  FrontKind kind() const;

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  /// f(x_max), the smallest attained value.
  double y_min() const { return y_min_; }
  /// f(x_min), the largest attained value.
  double y_max() const { return y_max_; }

  std::pair<double, double> domain() const { return {x_min_, x_max_}; }

  /// f(x). Coordinates within `domain_tolerance()` of the domain are clamped
  /// inside; anything farther out throws std::out_of_range naming x.
  double eval(double x) const;

  /// x with f(x) = y, exact for linear/reciprocal, bisection (1e-12 absolute
  /// on x, scaled by the domain span) for the power family.
  double inverse(double y) const;

  /// f'(x); analytic everywhere it is finite, one-sided finite difference at
  /// power-family endpoints where the analytic form degenerates. Endpoint
  /// slopes can be arbitrarily large in magnitude for p != 1.
  double slope(double x) const;

  /// Absolute slack used when clamping x into [x_min, x_max].
  double domain_tolerance() const;
  /// Absolute slack used when clamping y into [y_min, y_max].
  double range_tolerance() const;

  /// Clamp x into the domain; throws std::out_of_range beyond tolerance.
  double clamp_x(double x) const;

  /// One-line description, e.g. "linear c=-1 d=3".
  std::string describe() const;

  // Parameter access for the closed-form layer.
  struct Linear {
    double c;
    double d;
  };
  struct Reciprocal {
    double c;
  };
  struct Power {
    double p;
    double x1;
    double y1;
    double x_mu;
    double y_mu;
  };

  const Linear* as_linear() const { return std::get_if<Linear>(&params_); }
  const Reciprocal* as_reciprocal() const {
    return std::get_if<Reciprocal>(&params_);
  }
  const Power* as_power() const { return std::get_if<Power>(&params_); }

  bool operator==(const Front& other) const = default;

 private:
  using Params = std::variant<Linear, Reciprocal, Power>;
  explicit Front(Params params);

  Params params_;
  double x_min_ = 0;
  double x_max_ = 0;
  double y_min_ = 0;
  double y_max_ = 0;
};

/// Parse a front specification of the form used on the command line:
/// "linear c=-1 d=3", "reciprocal c=2", "power p=2 x1=1 y1=2 xmu=2 ymu=1".
/// A leading "kind=" on the first token is accepted too.
Front parse_front(const std::vector<std::string>& tokens);
Front parse_front(const std::string& spec);

}  // namespace hvapprox

#endif  // HVAPPROX_FRONT_HPP
