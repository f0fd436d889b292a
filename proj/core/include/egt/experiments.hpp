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

#ifndef EGT_EXPERIMENTS_HPP_
#define EGT_EXPERIMENTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "egt/dynamics.hpp"
#include "egt/model.hpp"

namespace egt {

struct Preset {
  std::string name;
  GameParameters params;
  PopulationState initial{0.5, 0.5, 0.5};
  std::string source;
};

// fig2a..fig2d, fig3-base, fig4-base, fig5-base.
const std::vector<Preset>& PresetRegistry();
std::optional<Preset> FindPreset(const std::string& name);

struct SweepOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Record failed integrations as NaN instead of throwing.
  bool nan_on_failure = false;
};

struct SweepSeries {
  std::string label;
  double vary_value = 0.0;
  std::vector<double> final_y;
  std::vector<bool> converged;
};

struct SweepResult {
  Param vary = Param::kC2;
  std::vector<double> alpha_grid;
  std::vector<SweepSeries> series;
  GameParameters fixed;
  std::vector<std::string> failures;
};

struct HeatmapResult {
  std::vector<double> v1_grid;
  std::vector<double> c2_grid;
  // cells[i][j] is the final y for v1_grid[i], c2_grid[j].
  std::vector<std::vector<double>> cells;
  std::vector<std::vector<bool>> converged;
  GameParameters fixed;
  std::vector<std::string> failures;
};

// The three parameters the figures vary against alpha.
bool IsSweepParam(Param param);

// `n` evenly spaced values from `lo` to `hi` inclusive.
std::vector<double> Linspace(double lo, double hi, std::size_t n);

SweepResult SweepAlpha(const GameParameters& base, const std::vector<double>& alpha_grid,
                       Param vary, const std::vector<double>& vary_values,
                       const PopulationState& initial, const IntegratorConfig& config = {},
                       const SweepOptions& options = {});

HeatmapResult HeatmapV1C2(const GameParameters& base, const std::vector<double>& v1_grid,
                          const std::vector<double>& c2_grid, const PopulationState& initial,
                          const IntegratorConfig& config = {}, const SweepOptions& options = {});

// One trajectory per (alpha, vary value) pair, alpha-major.
std::vector<Trajectory> TraceBundle(const GameParameters& base, Param vary,
                                    const std::vector<double>& vary_values,
                                    const std::vector<double>& alpha_values,
                                    const PopulationState& initial,
                                    const IntegratorConfig& config = {},
                                    const SweepOptions& options = {});

// Smallest grid value at which the series reaches `level`; nullopt when it
// never does. A series already at the level on the first grid point reports
// that point.
std::optional<double> JumpThreshold(const std::vector<double>& grid,
                                    const std::vector<double>& values, double level = 0.5);

// Figure setups used by the CLI and the acceptance suite.
struct AlphaSweepSetup {
  std::string id;
  GameParameters base;
  Param vary = Param::kC2;
  std::vector<double> vary_values;
  std::vector<double> alpha_grid;
};

struct HeatmapSetup {
  std::string id;
  GameParameters base;
  std::vector<double> v1_grid;
  std::vector<double> c2_grid;
};

struct TraceSetup {
  std::string id;
  GameParameters base;
  Param vary = Param::kC2;
  std::vector<double> vary_values;
  std::vector<double> alpha_values;
};

// fig3a, fig3b, fig3c.
std::optional<AlphaSweepSetup> FindAlphaSweepSetup(const std::string& id);
// fig4a, fig4b, fig4c (alpha 0.30, 0.60, 0.90; 41 x 41 grid).
std::optional<HeatmapSetup> FindHeatmapSetup(const std::string& id);
// The three fig5 panel rows: c2, v1 and f, each crossed with alpha.
std::vector<TraceSetup> Fig5TraceSetups();

}  // namespace egt

#endif  // EGT_EXPERIMENTS_HPP_
