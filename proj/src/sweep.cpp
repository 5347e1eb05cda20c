#include "hvapprox/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hvapprox/approximation.hpp"
#include "hvapprox/closed_form.hpp"
#include "hvapprox/errors.hpp"
#include "hvapprox/format.hpp"

#include <json.hpp>

namespace hvapprox {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int pool_size(std::size_t cells) {
  int threads = 0;
  if (const char* env = std::getenv("HVAPPROX_THREADS")) {
    threads = std::atoi(env);
  }
  if (threads <= 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  return static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), cells));
}

/// Approximation ratio of the fixed-endpoints optimal hypervolume
/// distribution (closed form where available, numeric otherwise).
double hyp_ratio_fixed(const Front& front, int mu, const SolverOptions& opts) {
  if (const auto* lin = front.as_linear())
    return linear_hyp_ratio_fixed(lin->c, lin->d, mu);
  if (const auto* rec = front.as_reciprocal())
    return convex_hyp_ratio_fixed(rec->c, mu);
  if (mu == 2) {
    // Both endpoints pinned: nothing to optimize.
    return ratio(front, PointSet(front, {front.x_min(), front.x_max()})).delta;
  }
  const ReferencePoint below{front.x_min() - 1.0, front.y_min() - 1.0};
  const MaximizeResult res =
      maximize_hypervolume(front, mu, below, /*fixed_endpoints=*/true, opts);
  return ratio(front, res.points).delta;
}

double app_ratio_fixed(const Front& front, int mu, const SolverOptions& opts) {
  // For linear and reciprocal fronts the fixed-endpoints optima coincide
  // with the hypervolume ones, so the same closed forms apply.
  if (const auto* lin = front.as_linear())
    return linear_hyp_ratio_fixed(lin->c, lin->d, mu);
  if (const auto* rec = front.as_reciprocal())
    return convex_hyp_ratio_fixed(rec->c, mu);
  return optimal_approximation(front, mu, /*fixed_endpoints=*/true, opts)
      .delta;
}

double hyp_ratio_ref(const Front& front, int mu, ReferencePoint ref,
                     const SolverOptions& opts) {
  if (const auto* lin = front.as_linear())
    return linear_hyp_ratio_ref(lin->c, lin->d, mu, ref).overall;
  if (const auto* rec = front.as_reciprocal())
    return convex_hyp_ratio_ref(rec->c, mu, ref).overall;
  const MaximizeResult res =
      maximize_hypervolume(front, mu, ref, /*fixed_endpoints=*/false, opts);
  return ratio(front, res.points).delta;
}

double app_ratio_free(const Front& front, int mu, const SolverOptions& opts) {
  if (const auto* lin = front.as_linear())
    return linear_opt_app_dist(lin->c, lin->d, mu).delta;
  if (const auto* rec = front.as_reciprocal())
    return convex_opt_app_dist(rec->c, mu).delta;
  return optimal_approximation(front, mu, /*fixed_endpoints=*/false, opts)
      .delta;
}

std::string error_tag(const std::exception& e) {
  if (dynamic_cast<const DegenerateReferenceError*>(&e))
    return "degenerate-reference";
  if (dynamic_cast<const RegimeError*>(&e)) return "regime-error";
  if (dynamic_cast<const BudgetError*>(&e)) return "budget-error";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "convergence-error";
  if (dynamic_cast<const SolverError*>(&e)) return "solver-error";
  return "validation-error";
}

struct CellTask {
  std::vector<double> axis_values;  // leading axis columns
  std::optional<Front> front;
  int mu = 0;
  std::string assembly_error;  // nonempty when the cell front was invalid
};

}  // namespace

std::vector<double> RangeSpec::values() const {
  if (steps < 1) throw std::invalid_argument("sweep range needs steps >= 1");
  if (!(start <= stop))
    throw std::invalid_argument("sweep range must be ordered (start <= stop)");
  std::vector<double> out(steps);
  if (steps == 1) {
    out[0] = start;
    return out;
  }
  if (log_scale) {
    if (!(start > 0.0))
      throw std::invalid_argument("log-scaled sweep range needs start > 0");
    const double ls = std::log(start), le = std::log(stop);
    for (int i = 0; i < steps; ++i)
      out[i] = std::exp(ls + (le - ls) * i / (steps - 1));
  } else {
    for (int i = 0; i < steps; ++i)
      out[i] = start + (stop - start) * i / (steps - 1);
  }
  return out;
}

SweepTable run_sweep(const SweepSpec& spec) {
  const bool want_hyp = spec.objectives != ObjectiveSet::app;
  const bool want_app = spec.objectives != ObjectiveSet::hyp;

  // Assemble the per-cell tasks in deterministic order.
  std::vector<CellTask> tasks;
  SweepTable table;

  switch (spec.axis) {
    case SweepAxis::mu: {
      table.columns.push_back("mu");
      for (double v : spec.range.values()) {
        const int mu = static_cast<int>(std::lround(v));
        tasks.push_back({{static_cast<double>(mu)}, spec.front, mu, ""});
      }
      break;
    }
    case SweepAxis::scaling: {
      const auto* pw = spec.front.as_power();
      if (!pw)
        throw std::invalid_argument(
            "scaling sweeps vary x_mu and need a power front");
      table.columns.push_back("x_mu");
      for (double x_mu : spec.range.values()) {
        CellTask task{{x_mu}, std::nullopt, spec.mu, ""};
        try {
          task.front = Front::power(pw->p, pw->x1, pw->y1, x_mu, pw->y_mu);
        } catch (const std::exception& e) {
          task.assembly_error = error_tag(e);
        }
        tasks.push_back(std::move(task));
      }
      break;
    }
    case SweepAxis::p: {
      const auto* pw = spec.front.as_power();
      if (!pw)
        throw std::invalid_argument(
            "p sweeps vary the shape parameter and need a power front");
      table.columns.push_back("p");
      for (double p : spec.range.values()) {
        CellTask task{{p}, std::nullopt, spec.mu, ""};
        try {
          task.front = Front::power(p, pw->x1, pw->y1, pw->x_mu, pw->y_mu);
        } catch (const std::exception& e) {
          task.assembly_error = error_tag(e);
        }
        tasks.push_back(std::move(task));
      }
      break;
    }
    case SweepAxis::ref_grid: {
      table.columns.push_back("r1");
      table.columns.push_back("r2");
      const auto r1s = spec.r1_range.values();
      const auto r2s = spec.r2_range.values();
      const std::size_t cells = r1s.size() * r2s.size();
      if (cells > 1000000)
        throw std::invalid_argument("ref-grid sweep exceeds 10^6 cells");
      for (double r1 : r1s)
        for (double r2 : r2s)
          tasks.push_back({{r1, r2}, spec.front, spec.mu, ""});
      break;
    }
  }

  if (spec.axis == SweepAxis::ref_grid) {
    table.columns.push_back("approx_factor");
  } else {
    if (want_hyp) table.columns.push_back("hyp_ratio");
    if (want_app) table.columns.push_back("app_ratio");
  }
  table.columns.push_back("status");

  if (spec.axis != SweepAxis::ref_grid &&
      spec.endpoints == EndpointMode::free && want_hyp && !spec.ref)
    throw std::invalid_argument(
        "free-endpoint hypervolume sweeps need a reference point");

  table.values.assign(tasks.size(), {});
  table.status.assign(tasks.size(), "ok");

  auto compute_cell = [&](std::size_t idx) {
    const CellTask& task = tasks[idx];
    std::vector<double>& row = table.values[idx];
    row = task.axis_values;
    const std::size_t want =
        table.columns.size() - 1;  // all but the status column
    if (!task.assembly_error.empty()) {
      while (row.size() < want) row.push_back(kNaN);
      table.status[idx] = task.assembly_error;
      return;
    }
    const Front& front = *task.front;
    try {
      if (spec.axis == SweepAxis::ref_grid) {
        const ReferencePoint ref{task.axis_values[0], task.axis_values[1]};
        row.push_back(hyp_ratio_ref(front, task.mu, ref, spec.solver));
        return;
      }
      if (want_hyp) {
        row.push_back(spec.endpoints == EndpointMode::fixed
                          ? hyp_ratio_fixed(front, task.mu, spec.solver)
                          : hyp_ratio_ref(front, task.mu, *spec.ref,
                                          spec.solver));
      }
      if (want_app) {
        row.push_back(spec.endpoints == EndpointMode::fixed
                          ? app_ratio_fixed(front, task.mu, spec.solver)
                          : app_ratio_free(front, task.mu, spec.solver));
      }
    } catch (const std::exception& e) {
      while (row.size() < want) row.push_back(kNaN);
      table.status[idx] = error_tag(e);
    }
  };

  const int workers = pool_size(tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) compute_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size();
             i = next.fetch_add(1))
          compute_cell(i);
      });
    for (auto& t : pool) t.join();
  }

  return table;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (std::size_t r = 0; r < table.values.size(); ++r) {
    for (const double v : table.values[r]) {
      if (std::isnan(v))
        os << ',';
      else
        os << format_g12(v) << ',';
    }
    os << table.status[r] << '\n';
  }
  return os.str();
}

std::string to_json(const SweepTable& table) {
  nlohmann::json j;
  j["columns"] = table.columns;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (std::size_t r = 0; r < table.values.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const double v : table.values[r]) {
      if (std::isnan(v))
        row.push_back(nullptr);
      else
        row.push_back(v);
    }
    row.push_back(table.status[r]);
    rows.push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace hvapprox
