// Command-line driver: exact hypervolume and approximation-ratio queries,
// optimal point distributions, and parameter sweeps emitting CSV/JSON.
//
// Exit codes: 0 success, 2 validation error, 3 solver error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hvapprox/approximation.hpp"
#include "hvapprox/closed_form.hpp"
#include "hvapprox/errors.hpp"
#include "hvapprox/format.hpp"
#include "hvapprox/front.hpp"
#include "hvapprox/hypervolume.hpp"
#include "hvapprox/numeric.hpp"
#include "hvapprox/point_set.hpp"
#include "hvapprox/sweep.hpp"

namespace {

using namespace hvapprox;

std::vector<double> parse_csv_doubles(const std::string& text,
                                      const char* what) {
  std::vector<double> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(token, &pos));
      if (pos != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) +
                                  ": cannot parse number '" + token + "'");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

ReferencePoint parse_ref(const std::string& text) {
  const auto vals = parse_csv_doubles(text, "--ref");
  if (vals.size() != 2)
    throw std::invalid_argument("--ref expects two values r1,r2");
  return {vals[0], vals[1]};
}

RangeSpec parse_range(const std::string& text, const char* what) {
  // start:stop:steps
  RangeSpec range;
  std::istringstream is(text);
  std::string a, b, c;
  if (!std::getline(is, a, ':') || !std::getline(is, b, ':') ||
      !std::getline(is, c))
    throw std::invalid_argument(std::string(what) +
                                " expects start:stop:steps");
  try {
    range.start = std::stod(a);
    range.stop = std::stod(b);
    range.steps = std::stoi(c);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) +
                                ": cannot parse '" + text + "'");
  }
  return range;
}

struct CommonArgs {
  std::vector<std::string> front_tokens;
  std::string format = "csv";
  bool verbose = false;
};

Front front_from(const CommonArgs& args) {
  if (args.front_tokens.empty())
    throw std::invalid_argument("--front is required");
  return parse_front(args.front_tokens);
}

void emit(const std::string& text) { std::fwrite(text.data(), 1, text.size(), stdout); }

int run_hyp(const CommonArgs& common, const std::string& points_text,
            const std::string& ref_text) {
  const Front front = front_from(common);
  const PointSet points(front, parse_csv_doubles(points_text, "--points"));
  const ReferencePoint ref = parse_ref(ref_text);
  const HypResult res = hyp2d_info(front, points, ref);
  if (res.no_contributing_points())
    std::cerr << "note: no contributing points\n";
  else if (res.dropped > 0)
    std::cerr << "note: " << res.dropped
              << " point(s) had no positive contribution\n";
  if (common.format == "json") {
    nlohmann::json j{{"value", res.value},
                     {"contributing", res.contributing},
                     {"dropped", res.dropped}};
    emit(j.dump(2) + "\n");
  } else {
    emit(format_g12(res.value) + "\n");
  }
  return 0;
}

int run_ratio(const CommonArgs& common, const std::string& points_text,
              bool table) {
  const Front front = front_from(common);
  const PointSet points(front, parse_csv_doubles(points_text, "--points"));
  const ApproxResult res = ratio(front, points);
  if (common.format == "json") {
    nlohmann::json j{{"delta", res.delta}, {"witness_x", res.witness_x}};
    auto& terms = j["per_interval"] = nlohmann::json::array();
    for (const auto& t : res.per_interval)
      terms.push_back({{"index", t.index},
                       {"worst_x", t.worst_x},
                       {"ratio", t.ratio}});
    emit(j.dump(2) + "\n");
  } else if (table) {
    std::string out = "index,worst_x,ratio\n";
    for (const auto& t : res.per_interval)
      out += std::to_string(t.index) + "," + format_g12(t.worst_x) + "," +
             format_g12(t.ratio) + "\n";
    emit(out);
  } else {
    emit(format_g12(res.delta) + "\n");
  }
  return 0;
}

int run_dist(const CommonArgs& common, int mu, const std::string& objective,
             const std::string& ref_text, bool fixed_endpoints,
             unsigned long long seed, int max_iters) {
  const Front front = front_from(common);
  SolverOptions opts;
  opts.seed = seed;
  opts.verbose = common.verbose;
  if (max_iters > 0) opts.max_iters = max_iters;

  std::optional<ReferencePoint> ref;
  if (!ref_text.empty()) ref = parse_ref(ref_text);

  std::optional<PointSet> points;
  std::optional<double> delta;
  std::optional<RefCase> regime;

  if (objective == "hyp") {
    if (fixed_endpoints) {
      if (const auto* lin = front.as_linear())
        points = linear_hyp_dist(lin->c, lin->d, mu);
      else if (const auto* rec = front.as_reciprocal())
        points = convex_hyp_dist(rec->c, mu);
      else if (mu == 2)
        points = PointSet(front, {front.x_min(), front.x_max()});
      else
        points = maximize_hypervolume(front, mu,
                                      {front.x_min() - 1, front.y_min() - 1},
                                      true, opts)
                     .points;
    } else {
      if (!ref)
        throw std::invalid_argument(
            "dist --objective hyp needs --ref or --fixed-endpoints");
      if (const auto* lin = front.as_linear()) {
        RefDist d = linear_hyp_dist_ref(lin->c, lin->d, mu, *ref);
        points = std::move(d.points);
        regime = d.regime.case_id;
      } else if (const auto* rec = front.as_reciprocal()) {
        RefDist d = convex_hyp_dist_ref(rec->c, mu, *ref);
        points = std::move(d.points);
        regime = d.regime.case_id;
      } else {
        points = maximize_hypervolume(front, mu, *ref, false, opts).points;
      }
    }
  } else if (objective == "app") {
    if (fixed_endpoints) {
      if (const auto* lin = front.as_linear())
        points = linear_hyp_dist(lin->c, lin->d, mu);
      else if (const auto* rec = front.as_reciprocal())
        points = convex_hyp_dist(rec->c, mu);
      else {
        auto res = optimal_approximation(front, mu, true, opts);
        points = std::move(res.points);
        delta = res.delta;
      }
      if (!delta) delta = ratio(front, *points).delta;
    } else {
      if (const auto* lin = front.as_linear()) {
        auto res = linear_opt_app_dist(lin->c, lin->d, mu);
        points = std::move(res.points);
        delta = res.delta;
      } else if (const auto* rec = front.as_reciprocal()) {
        auto res = convex_opt_app_dist(rec->c, mu);
        points = std::move(res.points);
        delta = res.delta;
      } else {
        auto res = optimal_approximation(front, mu, false, opts);
        points = std::move(res.points);
        delta = res.delta;
      }
    }
  } else {
    throw std::invalid_argument("--objective must be hyp or app");
  }

  if (common.format == "json") {
    nlohmann::json j;
    auto& arr = j["points"] = nlohmann::json::array();
    for (double x : *points) arr.push_back({{"x", x}, {"fx", front.eval(x)}});
    if (delta) j["delta"] = *delta;
    if (regime) j["case"] = to_string(*regime);
    emit(j.dump(2) + "\n");
  } else {
    std::string out = "x,fx\n";
    for (double x : *points)
      out += format_g12(x) + "," + format_g12(front.eval(x)) + "\n";
    emit(out);
  }
  return 0;
}

int run_sweep_cmd(const CommonArgs& common, const std::string& axis, int mu,
                  const std::string& range_text, bool log_scale,
                  const std::string& r1_text, const std::string& r2_text,
                  const std::string& objective, const std::string& endpoints,
                  const std::string& ref_text, unsigned long long seed,
                  const std::string& out_path) {
  SweepSpec spec(front_from(common));
  spec.mu = mu;
  spec.solver.seed = seed;
  spec.solver.verbose = common.verbose;

  if (axis == "mu")
    spec.axis = SweepAxis::mu;
  else if (axis == "scaling")
    spec.axis = SweepAxis::scaling;
  else if (axis == "p")
    spec.axis = SweepAxis::p;
  else if (axis == "ref-grid")
    spec.axis = SweepAxis::ref_grid;
  else
    throw std::invalid_argument("--axis must be mu, scaling, p, or ref-grid");

  if (spec.axis == SweepAxis::ref_grid) {
    if (r1_text.empty() || r2_text.empty())
      throw std::invalid_argument("ref-grid sweeps need --r1 and --r2 ranges");
    spec.r1_range = parse_range(r1_text, "--r1");
    spec.r2_range = parse_range(r2_text, "--r2");
  } else {
    if (range_text.empty())
      throw std::invalid_argument("sweep needs --range start:stop:steps");
    spec.range = parse_range(range_text, "--range");
    spec.range.log_scale = log_scale;
  }

  if (objective == "hyp")
    spec.objectives = ObjectiveSet::hyp;
  else if (objective == "app")
    spec.objectives = ObjectiveSet::app;
  else if (objective == "both")
    spec.objectives = ObjectiveSet::both;
  else
    throw std::invalid_argument("--objective must be hyp, app, or both");

  if (endpoints == "fixed")
    spec.endpoints = EndpointMode::fixed;
  else if (endpoints == "free")
    spec.endpoints = EndpointMode::free;
  else
    throw std::invalid_argument("--endpoints must be fixed or free");

  if (!ref_text.empty()) spec.ref = parse_ref(ref_text);

  const SweepTable table = run_sweep(spec);
  const std::string text =
      common.format == "json" ? to_json(table) : to_csv(table);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw std::invalid_argument("cannot open output file " + out_path);
    out << text;
  } else {
    emit(text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hvapprox: optimal hypervolume and multiplicative-approximation "
      "distributions on bi-objective Pareto fronts"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  CommonArgs common;
  app.add_option("--format", common.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--verbose", common.verbose, "Emit solver diagnostics");

  std::string points_text, ref_text, objective = "hyp", axis,
              endpoints = "fixed", range_text, r1_text, r2_text, out_path;
  int mu = 3;
  int max_iters = 0;
  bool table = false, fixed_endpoints = false, log_scale = false;
  unsigned long long seed = 0;

  auto add_front = [&](CLI::App* cmd) {
    cmd->add_option("--front", common.front_tokens,
                    "Front spec: linear c=.. d=.. | reciprocal c=.. | "
                    "power p=.. x1=.. y1=.. xmu=.. ymu=..")
        ->required()
        ->expected(-1);
  };

  CLI::App* hyp = app.add_subcommand(
      "hyp", "Hypervolume of a point set relative to a reference point");
  add_front(hyp);
  hyp->add_option("--points", points_text, "Comma-separated x-coordinates")
      ->required();
  hyp->add_option("--ref", ref_text, "Reference point r1,r2")->required();

  CLI::App* ratio_cmd =
      app.add_subcommand("ratio", "Approximation ratio of a point set");
  add_front(ratio_cmd);
  ratio_cmd->add_option("--points", points_text, "Comma-separated x-coordinates")
      ->required();
  ratio_cmd->add_flag("--table", table,
                      "Print the per-interval breakdown as CSV");

  CLI::App* dist = app.add_subcommand(
      "dist", "Optimal point distribution for an objective");
  add_front(dist);
  dist->add_option("--mu", mu, "Number of points")->required();
  dist->add_option("--objective", objective, "hyp or app")
      ->capture_default_str();
  dist->add_option("--ref", ref_text, "Reference point r1,r2");
  dist->add_flag("--fixed-endpoints", fixed_endpoints,
                 "Pin both extreme points");
  dist->add_option("--seed", seed, "Multistart seed")->capture_default_str();
  dist->add_option("--max-iters", max_iters,
                   "Cap on solver line searches (0 = default)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Parameter sweep emitting one CSV row per cell");
  add_front(sweep);
  sweep->add_option("--axis", axis, "mu, scaling, p, or ref-grid")->required();
  sweep->add_option("--mu", mu, "Number of points")->capture_default_str();
  sweep->add_option("--range", range_text, "Axis range start:stop:steps");
  sweep->add_flag("--log", log_scale, "Log-spaced axis values");
  sweep->add_option("--r1", r1_text, "ref-grid r1 range start:stop:steps");
  sweep->add_option("--r2", r2_text, "ref-grid r2 range start:stop:steps");
  sweep->add_option("--objective", objective, "hyp, app, or both")
      ->default_val(std::string("both"));
  sweep->add_option("--endpoints", endpoints, "fixed or free")
      ->capture_default_str();
  sweep->add_option("--ref", ref_text,
                    "Reference point for free-endpoint hyp objectives");
  sweep->add_option("--seed", seed, "Solver seed")->capture_default_str();
  sweep->add_option("--out", out_path, "Write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (hyp->parsed()) return run_hyp(common, points_text, ref_text);
    if (ratio_cmd->parsed()) return run_ratio(common, points_text, table);
    if (dist->parsed())
      return run_dist(common, mu, objective, ref_text, fixed_endpoints, seed,
                      max_iters);
    if (sweep->parsed())
      return run_sweep_cmd(common, axis, mu, range_text, log_scale, r1_text,
                           r2_text, objective, endpoints, ref_text, seed,
                           out_path);
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
