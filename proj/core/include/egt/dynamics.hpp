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

#ifndef EGT_DYNAMICS_HPP_
#define EGT_DYNAMICS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "egt/error.hpp"
#include "egt/model.hpp"

namespace egt {

// Excursions outside the unit cube up to this size are clamped; anything
// larger is reported as a diverged step.
inline constexpr double kBoxTolerance = 1e-9;

struct IntegratorConfig {
  double dt = 0.01;
  double t_max = 50.0;
  std::size_t sample_stride = 1;
  double rhs_tol = 1e-9;
  double corner_tol = 1e-6;
  // When false the integration always runs to t_max.
  bool stop_on_convergence = true;
};

// Throws kInvalidInput for dt <= 0, negative or non-finite t_max, a zero
// stride or non-positive tolerances.
void ValidateConfig(const IntegratorConfig& config);

struct TrajectorySample {
  double t = 0.0;
  PopulationState state;
};

struct Convergence {
  PopulationState limit;
  double t = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::optional<Convergence> converged_to;
  GameParameters params;
  PopulationState initial;

  const PopulationState& final_state() const { return samples.back().state; }
};

// One classical Runge-Kutta step. The result is clamped into [0,1]^3 when it
// leaves the box by at most kBoxTolerance; larger excursions throw
// StepDivergedError. `t` is only used to annotate that error.
PopulationState Step(const GameParameters& params, const PopulationState& state, double dt,
                     double t = 0.0);

// Same as Step but also reports the largest pre-clamp excursion outside the
// box (0 when the raw update stayed inside).
PopulationState Step(const GameParameters& params, const PopulationState& state, double dt,
                     double t, double& excursion);

Trajectory Integrate(const GameParameters& params, const PopulationState& initial,
                     const IntegratorConfig& config = {});

// Like Integrate, but a diverged step ends the run instead of throwing: the
// samples recorded so far are kept and the error is returned via `failure`.
Trajectory IntegrateCapturingFailure(const GameParameters& params, const PopulationState& initial,
                                     const IntegratorConfig& config,
                                     std::optional<StepDivergedError>& failure);

// Integrate without retaining samples. Also reports the convergence record,
// if any, through `converged`.
PopulationState FinalState(const GameParameters& params, const PopulationState& initial,
                           const IntegratorConfig& config = {},
                           std::optional<Convergence>* converged = nullptr);

// Infinity-norm distance from `state` to the nearest pure profile.
double DistanceToNearestCorner(const PopulationState& state);

}  // namespace egt

#endif  // EGT_DYNAMICS_HPP_
