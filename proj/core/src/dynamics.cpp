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

#include "egt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "egt/error.hpp"

namespace egt {

void ValidateConfig(const IntegratorConfig& c) {
  if (!(c.dt > 0.0) || !std::isfinite(c.dt)) {
    throw Error(ErrorCode::kInvalidInput, "integrator dt must be positive and finite");
  }
  if (!(c.t_max >= 0.0) || !std::isfinite(c.t_max)) {
    throw Error(ErrorCode::kInvalidInput, "integrator t_max must be non-negative and finite");
  }
  if (c.sample_stride == 0) {
    throw Error(ErrorCode::kInvalidInput, "sample stride must be at least 1");
  }
  if (!(c.rhs_tol > 0.0) || !(c.corner_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "convergence tolerances must be positive");
  }
}

namespace {

PopulationState Advance(const PopulationState& s, const ReplicatorVelocity& v, double h) {
  return {s.x + h * v.dx_dt, s.y + h * v.dy_dt, s.z + h * v.dz_dt};
}

double ClampCoordinate(double value, double& excursion) {
  if (value < 0.0) {
    excursion = std::max(excursion, -value);
    return 0.0;
  }
  if (value > 1.0) {
    excursion = std::max(excursion, value - 1.0);
    return 1.0;
  }
  return value;
}

}  // namespace

PopulationState Step(const GameParameters& params, const PopulationState& s, double dt, double t,
                     double& excursion) {
  const ReplicatorVelocity k1 = ReplicatorRhs(params, s);
  const ReplicatorVelocity k2 = ReplicatorRhs(params, Advance(s, k1, 0.5 * dt));
  const ReplicatorVelocity k3 = ReplicatorRhs(params, Advance(s, k2, 0.5 * dt));
  const ReplicatorVelocity k4 = ReplicatorRhs(params, Advance(s, k3, dt));

  const double w = dt / 6.0;
  const PopulationState raw{
      s.x + w * (k1.dx_dt + 2.0 * k2.dx_dt + 2.0 * k3.dx_dt + k4.dx_dt),
      s.y + w * (k1.dy_dt + 2.0 * k2.dy_dt + 2.0 * k3.dy_dt + k4.dy_dt),
      s.z + w * (k1.dz_dt + 2.0 * k2.dz_dt + 2.0 * k3.dz_dt + k4.dz_dt)};

  excursion = 0.0;
  const PopulationState clamped{ClampCoordinate(raw.x, excursion),
                                ClampCoordinate(raw.y, excursion),
                                ClampCoordinate(raw.z, excursion)};
  if (!(excursion <= kBoxTolerance)) {
    std::ostringstream msg;
    msg << "integration step at t=" << t << " left the unit cube: (" << raw.x << ", " << raw.y
        << ", " << raw.z << ")";
    throw StepDivergedError(t, msg.str());
  }
  return clamped;
}

PopulationState Step(const GameParameters& params, const PopulationState& state, double dt,
                     double t) {
  double excursion = 0.0;
  return Step(params, state, dt, t, excursion);
}

double DistanceToNearestCorner(const PopulationState& s) {
  auto to_nearest = [](double v) { return std::min(v, 1.0 - v); };
  return std::max({to_nearest(s.x), to_nearest(s.y), to_nearest(s.z)});
}

namespace {

bool HasConverged(const GameParameters& params, const PopulationState& s,
                  const IntegratorConfig& config) {
  return MaxAbs(ReplicatorRhs(params, s)) < config.rhs_tol ||
         DistanceToNearestCorner(s) < config.corner_tol;
}

// Drives the fixed-step loop; `on_sample` sees every recorded sample.
template <typename OnSample>
std::optional<Convergence> Run(const GameParameters& params, const PopulationState& initial,
                               const IntegratorConfig& config, OnSample&& on_sample,
                               PopulationState& final_state) {
  ValidateConfig(config);
  ValidateState(initial);

  PopulationState state = initial;
  on_sample(0.0, state);
  if (config.stop_on_convergence && HasConverged(params, state, config)) {
    final_state = state;
    return Convergence{state, 0.0};
  }

  // Time is k*dt rather than an accumulated sum; the last step is shortened
  // to land exactly on t_max.
  const auto steps = static_cast<long long>(std::ceil(config.t_max / config.dt - 1e-9));
  for (long long k = 1; k <= steps; ++k) {
    const double t_prev = static_cast<double>(k - 1) * config.dt;
    const double t = k == steps ? config.t_max : static_cast<double>(k) * config.dt;
    state = Step(params, state, t - t_prev, t_prev);

    const bool converged = config.stop_on_convergence && HasConverged(params, state, config);
    if (converged || k == steps || k % static_cast<long long>(config.sample_stride) == 0) {
      on_sample(t, state);
    }
    if (converged) {
      final_state = state;
      return Convergence{state, t};
    }
  }
  final_state = state;
  return std::nullopt;
}

}  // namespace

Trajectory Integrate(const GameParameters& params, const PopulationState& initial,
                     const IntegratorConfig& config) {
  Trajectory trajectory;
  trajectory.params = params;
  trajectory.initial = initial;
  PopulationState last;
  trajectory.converged_to = Run(
      params, initial, config,
      [&](double t, const PopulationState& s) { trajectory.samples.push_back({t, s}); }, last);
  return trajectory;
}

Trajectory IntegrateCapturingFailure(const GameParameters& params, const PopulationState& initial,
                                     const IntegratorConfig& config,
                                     std::optional<StepDivergedError>& failure) {
  failure.reset();
  Trajectory trajectory;
  trajectory.params = params;
  trajectory.initial = initial;
  PopulationState last;
  try {
    trajectory.converged_to = Run(
        params, initial, config,
        [&](double t, const PopulationState& s) { trajectory.samples.push_back({t, s}); },
        last);
  } catch (const StepDivergedError& e) {
    failure = e;
  }
  return trajectory;
}

PopulationState FinalState(const GameParameters& params, const PopulationState& initial,
                           const IntegratorConfig& config, std::optional<Convergence>* converged) {
  PopulationState last;
  auto result = Run(params, initial, config, [](double, const PopulationState&) {}, last);
  if (converged != nullptr) *converged = result;
  return last;
}

}  // namespace egt
