#include "hvapprox/front.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hvapprox {

namespace {

constexpr double kDomainEps = 1e-12;
constexpr int kBisectionMaxIter = 200;

std::string format_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

[[noreturn]] void throw_out_of_domain(const char* what, double value,
                                      double lo, double hi) {
  std::ostringstream os;
  os << what << " " << format_num(value) << " outside [" << format_num(lo)
     << ", " << format_num(hi) << "]";
  throw std::out_of_range(os.str());
}

}  // namespace

std::string to_string(FrontKind kind) {
  switch (kind) {
    case FrontKind::linear:
      return "linear";
    case FrontKind::reciprocal:
      return "reciprocal";
    case FrontKind::power:
      return "power";
  }
  return "unknown";
}

Front::Front(Params params) : params_(std::move(params)) {
  if (const auto* lin = std::get_if<Linear>(&params_)) {
    x_min_ = 1.0;
    x_max_ = (1.0 - lin->d) / lin->c;
    y_min_ = 1.0;
    y_max_ = lin->c + lin->d;
  } else if (const auto* rec = std::get_if<Reciprocal>(&params_)) {
    x_min_ = 1.0;
    x_max_ = rec->c;
    y_min_ = 1.0;
    y_max_ = rec->c;
  } else {
    const auto& pw = std::get<Power>(params_);
    x_min_ = pw.x1;
    x_max_ = pw.x_mu;
    y_min_ = pw.y_mu;
    y_max_ = pw.y1;
  }
}

Front Front::linear(double slope_c, double intercept_d) {
  if (!(slope_c < 0.0))
    throw std::invalid_argument("linear front requires c < 0, got c=" +
                                format_num(slope_c));
  if (!(intercept_d > 1.0 - slope_c))
    throw std::invalid_argument("linear front requires d > 1 - c, got d=" +
                                format_num(intercept_d) +
                                " with c=" + format_num(slope_c));
  return Front(Linear{slope_c, intercept_d});
}

Front Front::reciprocal(double scale_c) {
  if (!(scale_c > 1.0))
    throw std::invalid_argument("reciprocal front requires c > 1, got c=" +
                                format_num(scale_c));
  return Front(Reciprocal{scale_c});
}

Front Front::power(double p, double x1, double y1, double x_mu, double y_mu) {
  if (!(p > 0.0))
    throw std::invalid_argument("power front requires p > 0, got p=" +
                                format_num(p));
  if (!(x1 > 0.0 && y1 > 0.0 && x_mu > 0.0 && y_mu > 0.0))
    throw std::invalid_argument("power front corners must be positive");
  if (!(x1 < x_mu))
    throw std::invalid_argument("power front requires x1 < xmu, got x1=" +
                                format_num(x1) + " xmu=" + format_num(x_mu));
  if (!(y_mu < y1))
    throw std::invalid_argument("power front requires ymu < y1, got y1=" +
                                format_num(y1) + " ymu=" + format_num(y_mu));
  return Front(Power{p, x1, y1, x_mu, y_mu});
}

FrontKind Front::kind() const {
  if (std::holds_alternative<Linear>(params_)) return FrontKind::linear;
  if (std::holds_alternative<Reciprocal>(params_)) return FrontKind::reciprocal;
  return FrontKind::power;
}

double Front::domain_tolerance() const {
  return kDomainEps * std::max({1.0, std::abs(x_min_), std::abs(x_max_)});
}

double Front::range_tolerance() const {
  return kDomainEps * std::max({1.0, std::abs(y_min_), std::abs(y_max_)});
}

double Front::clamp_x(double x) const {
  const double tol = domain_tolerance();
  if (x < x_min_ - tol || x > x_max_ + tol)
    throw_out_of_domain("x coordinate", x, x_min_, x_max_);
  return std::clamp(x, x_min_, x_max_);
}

double Front::eval(double x) const {
  x = clamp_x(x);
  if (const auto* lin = std::get_if<Linear>(&params_))
    return lin->c * x + lin->d;
  if (const auto* rec = std::get_if<Reciprocal>(&params_)) return rec->c / x;

  const auto& pw = std::get<Power>(params_);
  const double u = (x - pw.x1) / (pw.x_mu - pw.x1);
  // For p < 1 the inner term can round below zero at u = 1; the front is
  // extended there by continuity, f(x_mu) = y_mu.
  const double inner = std::max(0.0, 1.0 - std::pow(u, pw.p));
  return pw.y_mu + (pw.y1 - pw.y_mu) * std::pow(inner, 1.0 / pw.p);
}

double Front::inverse(double y) const {
  const double tol = range_tolerance();
  if (y < y_min_ - tol || y > y_max_ + tol)
    throw_out_of_domain("y value", y, y_min_, y_max_);
  y = std::clamp(y, y_min_, y_max_);

  if (const auto* lin = std::get_if<Linear>(&params_))
    return std::clamp((y - lin->d) / lin->c, x_min_, x_max_);
  if (const auto* rec = std::get_if<Reciprocal>(&params_))
    return std::clamp(rec->c / y, x_min_, x_max_);

  // Power family: bisection on eval, which is strictly decreasing. Runs to
  // a few ulps so that steep front ends stay accurate in f as well.
  double lo = x_min_;
  double hi = x_max_;
  const double x_tol = 1e-15 * std::max(1.0, x_max_ - x_min_);
  for (int it = 0; it < kBisectionMaxIter && (hi - lo) > x_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eval(mid) > y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double Front::slope(double x) const {
  x = clamp_x(x);
  if (const auto* lin = std::get_if<Linear>(&params_)) return lin->c;
  if (const auto* rec = std::get_if<Reciprocal>(&params_))
    return -rec->c / (x * x);

  const auto& pw = std::get<Power>(params_);
  const double span = pw.x_mu - pw.x1;
  const double u = (x - pw.x1) / span;
  const double inner = 1.0 - std::pow(u, pw.p);
  double d = 0.0;
  if (u > 0.0 && inner > 0.0) {
    d = -(pw.y1 - pw.y_mu) * std::pow(u, pw.p - 1.0) *
        std::pow(inner, (1.0 - pw.p) / pw.p) / span;
  }
  if (std::isfinite(d) && u > 0.0 && inner > 0.0) return d;

  // Endpoint (or degenerate analytic form): one-sided difference.
  const double h = 1e-9 * span;
  if (x + h <= x_max_) return (eval(x + h) - eval(x)) / h;
  return (eval(x) - eval(x - h)) / h;
}

std::string Front::describe() const {
  std::ostringstream os;
  if (const auto* lin = std::get_if<Linear>(&params_)) {
    os << "linear c=" << format_num(lin->c) << " d=" << format_num(lin->d);
  } else if (const auto* rec = std::get_if<Reciprocal>(&params_)) {
    os << "reciprocal c=" << format_num(rec->c);
  } else {
    const auto& pw = std::get<Power>(params_);
    os << "power p=" << format_num(pw.p) << " x1=" << format_num(pw.x1)
       << " y1=" << format_num(pw.y1) << " xmu=" << format_num(pw.x_mu)
       << " ymu=" << format_num(pw.y_mu);
  }
  return os.str();
}

namespace {

double parse_value(const std::string& token, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("front parameter " + key +
                                ": cannot parse number '" + token + "'");
  }
}

}  // namespace

Front parse_front(const std::vector<std::string>& tokens) {
  if (tokens.empty())
    throw std::invalid_argument("empty front specification");

  std::string kind = tokens[0];
  if (kind.rfind("kind=", 0) == 0) kind = kind.substr(5);

  std::vector<std::pair<std::string, double>> kv;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("front parameter '" + tokens[i] +
                                  "' is not of the form key=value");
    const std::string key = tokens[i].substr(0, eq);
    kv.emplace_back(key, parse_value(tokens[i].substr(eq + 1), key));
  }

  auto get = [&](const std::string& key) {
    for (const auto& [k, v] : kv)
      if (k == key) return v;
    throw std::invalid_argument("front kind '" + kind +
                                "' missing parameter " + key);
  };

  if (kind == "linear") return Front::linear(get("c"), get("d"));
  if (kind == "reciprocal") return Front::reciprocal(get("c"));
  if (kind == "power")
    return Front::power(get("p"), get("x1"), get("y1"), get("xmu"),
                        get("ymu"));
  throw std::invalid_argument("unknown front kind '" + kind +
                              "' (expected linear, reciprocal, or power)");
}

Front parse_front(const std::string& spec) {
  std::vector<std::string> tokens;
  std::istringstream is(spec);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return parse_front(tokens);
}

}  // namespace hvapprox
