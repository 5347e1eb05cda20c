#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include <json.hpp>

#include "hvapprox/closed_form.hpp"
#include "hvapprox/sweep.hpp"
#include "test_util.hpp"

using namespace hvapprox;

TEST_CASE("mu sweep on a linear front matches the closed forms") {
  SweepSpec spec(Front::linear(-1, 3));
  spec.axis = SweepAxis::mu;
  spec.range = {2, 12, 11, false};
  const SweepTable table = run_sweep(spec);

  REQUIRE(table.columns ==
          std::vector<std::string>{"mu", "hyp_ratio", "app_ratio", "status"});
  REQUIRE(table.values.size() == 11);
  for (const auto& row : table.values) {
    const int mu = static_cast<int>(row[0]);
    CHECK(hvtest::close_abs(row[1], linear_hyp_ratio_fixed(-1, 3, mu), 1e-12));
    CHECK(hvtest::close_abs(row[2], linear_hyp_ratio_fixed(-1, 3, mu), 1e-12));
  }
  for (const auto& s : table.status) CHECK(s == "ok");
}

TEST_CASE("csv output is byte-stable across runs and worker counts") {
  SweepSpec spec(Front::power(2, 1, 2, 2, 1));
  spec.axis = SweepAxis::p;
  spec.range = {0.5, 3.0, 6, false};
  spec.mu = 4;

  const std::string first = to_csv(run_sweep(spec));
  const std::string second = to_csv(run_sweep(spec));
  CHECK(first == second);

  setenv("HVAPPROX_THREADS", "3", 1);
  const std::string threaded = to_csv(run_sweep(spec));
  setenv("HVAPPROX_THREADS", "1", 1);
  const std::string serial = to_csv(run_sweep(spec));
  unsetenv("HVAPPROX_THREADS");
  CHECK(threaded == first);
  CHECK(serial == first);
}

TEST_CASE("scaling sweep approaches the large-scale limits") {
  SweepSpec spec(Front::power(2, 1, 2, 2, 1));
  spec.axis = SweepAxis::scaling;
  spec.range = {2, 1e4, 4, true};
  spec.mu = 3;
  const SweepTable table = run_sweep(spec);
  REQUIRE(table.values.size() == 4);
  for (const auto& s : table.status) CHECK(s == "ok");
  const auto& last = table.values.back();
  CHECK(hvtest::close_rel(last[1], 4.0 / 3.0, 0.02));
  CHECK(hvtest::close_rel(last[2], std::sqrt(5.0) - 1.0, 0.02));
  // ratios grow with the scaling
  CHECK(table.values.front()[1] < last[1]);
}

TEST_CASE("p sweep: the linear case has matching optima, and symmetric mu=3 "
          "keeps them equal") {
  SweepSpec spec(Front::power(2, 1, 2, 2, 1));
  spec.axis = SweepAxis::p;
  spec.range = {0.5, 2.0, 4, false};  // includes p = 1
  spec.mu = 3;
  const SweepTable table = run_sweep(spec);
  for (const auto& row : table.values) {
    CHECK(hvtest::close_abs(row[1], row[2], 1e-6));
  }
}

TEST_CASE("mu sweep on a power front: optimum ordering and decay") {
  SweepSpec spec(Front::power(2, 1, 2, 2, 1));
  spec.axis = SweepAxis::mu;
  spec.range = {2, 8, 7, false};
  const SweepTable table = run_sweep(spec);
  double prev_app = 1e9;
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    CHECK(table.status[i] == "ok");
    const auto& row = table.values[i];
    // the approximation optimum can never be worse than the
    // hypervolume-optimal set's ratio
    CHECK(row[2] <= row[1] + 1e-9);
    CHECK(row[2] < prev_app);  // more points approximate better
    prev_app = row[2];
  }
}

TEST_CASE("ref-grid sweep reproduces the closed-form map") {
  SweepSpec spec(Front::linear(-1, 3));
  spec.axis = SweepAxis::ref_grid;
  spec.mu = 10;
  spec.r1_range = {0, 2, 101, false};
  spec.r2_range = {0, 2, 101, false};
  const SweepTable table = run_sweep(spec);
  REQUIRE(table.values.size() == 101 * 101);
  REQUIRE(table.columns == std::vector<std::string>{"r1", "r2",
                                                    "approx_factor", "status"});

  // every valid cell equals the closed form; sample the full diagonal band
  int ok_cells = 0;
  double min_value = 1e9;
  double min_r1 = 0, min_r2 = 0;
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    const auto& row = table.values[i];
    if (table.status[i] != "ok") {
      CHECK(std::isnan(row[2]));
      continue;
    }
    ++ok_cells;
    CHECK(hvtest::close_abs(
        row[2], linear_hyp_ratio_ref(-1, 3, 10, {row[0], row[1]}).overall,
        1e-9));
    if (row[2] < min_value) {
      min_value = row[2];
      min_r1 = row[0];
      min_r2 = row[1];
    }
  }
  CHECK(ok_cells > 5000);
  CHECK(ok_cells < static_cast<int>(table.values.size()));  // degenerate cells exist

  // the best cell sits next to (30/31, 30/31) with value ~31/30
  CHECK(hvtest::close_abs(min_r1, 30.0 / 31, 0.03));
  CHECK(hvtest::close_abs(min_r2, 30.0 / 31, 0.03));
  CHECK(hvtest::close_abs(min_value, 31.0 / 30, 0.002));
}

TEST_CASE("ref-grid closed forms cross-check against the numeric optimizer") {
  // overlap sample: reciprocal front cells computed both ways
  SweepSpec spec(Front::reciprocal(2));
  spec.axis = SweepAxis::ref_grid;
  spec.mu = 5;
  spec.r1_range = {0.1, 1.2, 10, false};
  spec.r2_range = {0.1, 1.2, 10, false};
  spec.solver.multistart_count = 4;
  const SweepTable table = run_sweep(spec);

  int checked = 0;
  for (std::size_t i = 0; i < table.values.size() && checked < 100; ++i) {
    if (table.status[i] != "ok") continue;
    const auto& row = table.values[i];
    const MaximizeResult nm = maximize_hypervolume(
        Front::reciprocal(2), 5, {row[0], row[1]}, false, spec.solver);
    const double numeric_ratio = ratio(Front::reciprocal(2), nm.points).delta;
    CHECK(hvtest::close_abs(row[2], numeric_ratio, 2e-6));
    ++checked;
  }
  CHECK(checked >= 90);
}

TEST_CASE("cell failures land in the status column and the sweep continues") {
  SweepSpec spec(Front::linear(-1, 3));
  spec.axis = SweepAxis::ref_grid;
  spec.mu = 4;
  spec.r1_range = {1.8, 2.6, 3, false};  // partially beyond x_max = 2
  spec.r2_range = {0.0, 0.5, 2, false};
  const SweepTable table = run_sweep(spec);
  REQUIRE(table.values.size() == 6);
  bool saw_ok = false, saw_degenerate = false;
  for (const auto& s : table.status) {
    if (s == "ok") saw_ok = true;
    if (s == "degenerate-reference") saw_degenerate = true;
  }
  CHECK(saw_ok);
  CHECK(saw_degenerate);
}

TEST_CASE("free-endpoint sweeps need a reference for the hyp objective") {
  SweepSpec spec(Front::linear(-1, 3));
  spec.axis = SweepAxis::mu;
  spec.range = {2, 5, 4, false};
  spec.endpoints = EndpointMode::free;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);

  spec.ref = ReferencePoint{0.0, 0.0};
  const SweepTable table = run_sweep(spec);
  for (const auto& s : table.status) CHECK(s == "ok");
  // free-endpoint app column: closed-form optimum values
  for (const auto& row : table.values) {
    const int mu = static_cast<int>(row[0]);
    CHECK(hvtest::close_abs(row[2], linear_opt_app_dist(-1, 3, mu).delta,
                            1e-12));
  }
}

TEST_CASE("json mirror carries the same table") {
  SweepSpec spec(Front::linear(-1, 3));
  spec.axis = SweepAxis::mu;
  spec.range = {2, 4, 3, false};
  const SweepTable table = run_sweep(spec);
  const auto j = nlohmann::json::parse(to_json(table));
  REQUIRE(j["columns"].size() == 4);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0][0] == 2);
  CHECK(j["rows"][0][3] == "ok");
  CHECK(hvtest::close_abs(j["rows"][2][1].get<double>(),
                          linear_hyp_ratio_fixed(-1, 3, 4), 1e-12));
}

TEST_CASE("range validation") {
  CHECK_THROWS_AS((RangeSpec{2, 1, 5, false}).values(),
                  std::invalid_argument);
  CHECK_THROWS_AS((RangeSpec{1, 2, 0, false}).values(), std::invalid_argument);
  CHECK_THROWS_AS((RangeSpec{0, 2, 5, true}).values(), std::invalid_argument);
  CHECK((RangeSpec{5, 5, 1, false}).values() == std::vector<double>{5.0});

  SweepSpec grid(Front::linear(-1, 3));
  grid.axis = SweepAxis::ref_grid;
  grid.r1_range = {0, 1, 2000, false};
  grid.r2_range = {0, 1, 2000, false};
  CHECK_THROWS_AS(run_sweep(grid), std::invalid_argument);

  SweepSpec scaling(Front::linear(-1, 3));
  scaling.axis = SweepAxis::scaling;
  scaling.range = {2, 10, 3, false};
  CHECK_THROWS_AS(run_sweep(scaling), std::invalid_argument);
}
