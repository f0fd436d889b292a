// Copyright 2026 The opendata-egt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "egt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "egt/error.hpp"

namespace egt {
namespace {

GameParameters Fig3Base() {
  GameParameters g;
  g.c1 = 6;
  g.c3 = 5;
  g.v2 = 1;
  g.r1 = 2;
  g.l1 = 5;
  g.l2 = 7;
  g.p = 3;
  g.r2 = 4;
  // Free in the base set; each figure overrides the ones it varies.
  g.c2 = 4;
  g.v1 = 3;
  g.f = 1;
  g.alpha = 0.6;
  return g;
}

std::vector<Preset> BuildRegistry() {
  std::vector<Preset> presets;
  auto fig2 = [&](std::string name, GameParameters g, std::string source) {
    presets.push_back({std::move(name), g, {0.5, 0.5, 0.5}, std::move(source)});
  };
  fig2("fig2a", {8, 10, 6, 5, 3, 2, 5, 2, 2, 8, 3, 0.7},
       "figure 2(a) parameter set, settles at (0,0,1); (1,1,1) is also stable");
  fig2("fig2b", {15, 10, 6, 10, 8, 4, 8, 2, 5, 10, 3, 0.8},
       "figure 2(b) parameter set, ESS at (0,1,1)");
  fig2("fig2c", {4, 13, 6, 8, 5, 3, 6, 5, 1, 7, 3, 0.2},
       "figure 2(c) parameter set, ESS at (1,0,1)");
  fig2("fig2d", {8, 6, 7, 10, 8, 4, 5, 4, 3, 9, 4, 0.7},
       "figure 2(d) parameter set, ESS at (1,1,1)");
  presets.push_back({"fig3-base", Fig3Base(), {0.5, 0.5, 0.5},
                     "figure 3 fixed parameters; C2=4, V1=3, F=1, alpha=0.6 unless swept"});
  presets.push_back({"fig4-base", Fig3Base(), {0.5, 0.5, 0.5},
                     "figure 4 fixed parameters; F=1, V1 and C2 swept"});
  presets.push_back({"fig5-base", Fig3Base(), {0.5, 0.5, 0.5},
                     "figure 5 fixed parameters; crossed with alpha in {0.30, 0.60, 0.90}"});
  return presets;
}

void RequireAscending(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) {
    throw Error(ErrorCode::kInvalidInput, std::string(name) + " grid is empty");
  }
  for (double v : grid) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidInput, std::string(name) + " grid has a non-finite value");
    }
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string(name) + " grid must be strictly ascending");
    }
  }
}

void RequireAlphaGrid(const std::vector<double>& grid) {
  RequireAscending(grid, "alpha");
  if (grid.front() < 0.0 || grid.back() > 1.0) {
    throw Error(ErrorCode::kAlphaOutOfRange, "alpha grid must lie within [0,1]");
  }
}

void RequireSweepParam(Param param) {
  if (!IsSweepParam(param)) {
    throw Error(ErrorCode::kInvalidInput,
                "sweeps vary one of c2, v1 or f, not '" + std::string(ParamName(param)) + "'");
  }
}

// Runs task(i) for i in [0, count) on a small worker pool. Results go into
// caller-owned slots, so completion order does not matter.
void ParallelFor(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct CellOutcome {
  double y = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;
  std::string failure;
};

CellOutcome RunCell(const GameParameters& params, const PopulationState& initial,
                    const IntegratorConfig& config, const SweepOptions& options,
                    const std::string& where) {
  CellOutcome out;
  try {
    std::optional<Convergence> convergence;
    out.y = FinalState(params, initial, config, &convergence).y;
    out.converged = convergence.has_value();
  } catch (const StepDivergedError& e) {
    if (!options.nan_on_failure) {
      throw StepDivergedError(e.time(), where + ": " + e.what());
    }
    out.failure = where + ": " + e.what();
  }
  return out;
}

std::string FormatLabel(Param param, double value) {
  std::ostringstream os;
  os << ParamName(param) << "=" << value;
  return os.str();
}

}  // namespace

const std::vector<Preset>& PresetRegistry() {
  static const std::vector<Preset> registry = BuildRegistry();
  return registry;
}

std::optional<Preset> FindPreset(const std::string& name) {
  for (const Preset& preset : PresetRegistry()) {
    if (preset.name == name) return preset;
  }
  return std::nullopt;
}

bool IsSweepParam(Param param) {
  return param == Param::kC2 || param == Param::kV1 || param == Param::kF;
}

std::vector<double> Linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  if (n > 0) out.back() = hi;
  return out;
}

SweepResult SweepAlpha(const GameParameters& base, const std::vector<double>& alpha_grid,
                       Param vary, const std::vector<double>& vary_values,
                       const PopulationState& initial, const IntegratorConfig& config,
                       const SweepOptions& options) {
  RequireAlphaGrid(alpha_grid);
  RequireSweepParam(vary);
  if (vary_values.empty()) throw Error(ErrorCode::kInvalidInput, "no values to vary");
  ValidateConfig(config);
  ValidateState(initial);

  SweepResult result;
  result.vary = vary;
  result.alpha_grid = alpha_grid;
  result.fixed = base;
  for (double value : vary_values) {
    SweepSeries series;
    series.label = FormatLabel(vary, value);
    series.vary_value = value;
    series.final_y.assign(alpha_grid.size(), 0.0);
    series.converged.assign(alpha_grid.size(), false);
    result.series.push_back(std::move(series));
  }

  const std::size_t n_alpha = alpha_grid.size();
  std::vector<CellOutcome> outcomes(vary_values.size() * n_alpha);
  ParallelFor(outcomes.size(), options.threads, [&](std::size_t k) {
    const std::size_t s = k / n_alpha;
    const std::size_t a = k % n_alpha;
    GameParameters params = base;
    SetParam(params, vary, vary_values[s]);
    params.alpha = alpha_grid[a];
    ValidateParams(params);
    std::ostringstream where;
    where << "sweep cell (" << ParamName(vary) << "=" << vary_values[s]
          << ", alpha=" << alpha_grid[a] << ")";
    outcomes[k] = RunCell(params, initial, config, options, where.str());
  });

  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    SweepSeries& series = result.series[k / n_alpha];
    series.final_y[k % n_alpha] = outcomes[k].y;
    series.converged[k % n_alpha] = outcomes[k].converged;
    if (!outcomes[k].failure.empty()) result.failures.push_back(outcomes[k].failure);
  }
  return result;
}

HeatmapResult HeatmapV1C2(const GameParameters& base, const std::vector<double>& v1_grid,
                          const std::vector<double>& c2_grid, const PopulationState& initial,
                          const IntegratorConfig& config, const SweepOptions& options) {
  RequireAscending(v1_grid, "v1");
  RequireAscending(c2_grid, "c2");
  ValidateConfig(config);
  ValidateState(initial);
  ValidateParams(base);

  HeatmapResult result;
  result.v1_grid = v1_grid;
  result.c2_grid = c2_grid;
  result.fixed = base;

  const std::size_t cols = c2_grid.size();
  std::vector<CellOutcome> outcomes(v1_grid.size() * cols);
  ParallelFor(outcomes.size(), options.threads, [&](std::size_t k) {
    GameParameters params = base;
    params.v1 = v1_grid[k / cols];
    params.c2 = c2_grid[k % cols];
    std::ostringstream where;
    where << "heat-map cell (v1=" << params.v1 << ", c2=" << params.c2 << ")";
    outcomes[k] = RunCell(params, initial, config, options, where.str());
  });

  result.cells.assign(v1_grid.size(), std::vector<double>(cols, 0.0));
  result.converged.assign(v1_grid.size(), std::vector<bool>(cols, false));
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    result.cells[k / cols][k % cols] = outcomes[k].y;
    result.converged[k / cols][k % cols] = outcomes[k].converged;
    if (!outcomes[k].failure.empty()) result.failures.push_back(outcomes[k].failure);
  }
  return result;
}

std::vector<Trajectory> TraceBundle(const GameParameters& base, Param vary,
                                    const std::vector<double>& vary_values,
                                    const std::vector<double>& alpha_values,
                                    const PopulationState& initial,
                                    const IntegratorConfig& config,
                                    const SweepOptions& options) {
  RequireSweepParam(vary);
  for (double alpha : alpha_values) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw Error(ErrorCode::kAlphaOutOfRange, "alpha values must lie within [0,1]");
    }
  }
  ValidateConfig(config);
  ValidateState(initial);

  const std::size_t n_vary = vary_values.size();
  std::vector<Trajectory> bundle(alpha_values.size() * n_vary);
  ParallelFor(bundle.size(), options.threads, [&](std::size_t k) {
    GameParameters params = base;
    params.alpha = alpha_values[k / n_vary];
    SetParam(params, vary, vary_values[k % n_vary]);
    ValidateParams(params);
    try {
      bundle[k] = Integrate(params, initial, config);
    } catch (const StepDivergedError& e) {
      std::ostringstream where;
      where << "trace (alpha=" << params.alpha << ", " << ParamName(vary) << "="
            << vary_values[k % n_vary] << "): " << e.what();
      throw StepDivergedError(e.time(), where.str());
    }
  });
  return bundle;
}

std::optional<double> JumpThreshold(const std::vector<double>& grid,
                                    const std::vector<double>& values, double level) {
  for (std::size_t i = 0; i < grid.size() && i < values.size(); ++i) {
    if (values[i] >= level) return grid[i];
  }
  return std::nullopt;
}

std::optional<AlphaSweepSetup> FindAlphaSweepSetup(const std::string& id) {
  AlphaSweepSetup setup;
  setup.id = id;
  setup.base = Fig3Base();
  setup.alpha_grid = Linspace(0.0, 1.0, 101);
  if (id == "fig3a") {
    setup.vary = Param::kC2;
    setup.vary_values = {3.4, 3.6, 3.8, 4.0};
    setup.base.v1 = 2;
    setup.base.f = 1;
  } else if (id == "fig3b") {
    setup.vary = Param::kV1;
    setup.vary_values = {1.5, 2.5, 3.5, 4.5};
    setup.base.c2 = 4;
    setup.base.f = 1;
  } else if (id == "fig3c") {
    setup.vary = Param::kF;
    setup.vary_values = {0.3, 0.7, 1.1, 1.5};
    setup.base.c2 = 4;
    setup.base.v1 = 3;
  } else {
    return std::nullopt;
  }
  return setup;
}

std::optional<HeatmapSetup> FindHeatmapSetup(const std::string& id) {
  HeatmapSetup setup;
  setup.id = id;
  setup.base = Fig3Base();
  setup.base.f = 1;
  setup.v1_grid = Linspace(1.0, 5.0, 41);
  setup.c2_grid = Linspace(3.0, 7.0, 41);
  if (id == "fig4a") {
    setup.base.alpha = 0.30;
  } else if (id == "fig4b") {
    setup.base.alpha = 0.60;
  } else if (id == "fig4c") {
    setup.base.alpha = 0.90;
  } else {
    return std::nullopt;
  }
  return setup;
}

std::vector<TraceSetup> Fig5TraceSetups() {
  const std::vector<double> alphas = {0.30, 0.60, 0.90};
  std::vector<TraceSetup> setups;

  TraceSetup by_c2{"fig5-c2", Fig3Base(), Param::kC2, {3.4, 3.6, 3.8, 4.0}, alphas};
  by_c2.base.v1 = 3;
  by_c2.base.f = 1;
  setups.push_back(by_c2);

  TraceSetup by_v1{"fig5-v1", Fig3Base(), Param::kV1, {1.5, 2.5, 3.5, 4.5}, alphas};
  by_v1.base.c2 = 4;
  by_v1.base.f = 1;
  setups.push_back(by_v1);

  TraceSetup by_f{"fig5-f", Fig3Base(), Param::kF, {1, 2, 3, 4}, alphas};
  by_f.base.c2 = 4;
  by_f.base.v1 = 3;
  setups.push_back(by_f);
  return setups;
}

}  // namespace egt
