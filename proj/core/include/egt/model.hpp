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

#ifndef EGT_MODEL_HPP_
#define EGT_MODEL_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace egt {

// Constants of the provider / user / regulator game. All payoff quantities
// are in abstract utility units; alpha is the users' data mining capability.
struct GameParameters {
  double c1 = 0.0;     // cost of providing high-quality data
  double c2 = 0.0;     // cost of acquiring data
  double c3 = 0.0;     // cost of regulating
  double v1 = 0.0;     // value of high-quality data
  double v2 = 0.0;     // value of low-quality data
  double r1 = 0.0;     // provider/user synergy when high-quality data is acquired
  double r2 = 0.0;     // regulator reward for the fully cooperative outcome
  double l1 = 0.0;     // provider loss when low-quality data is acquired
  double l2 = 0.0;     // user loss when competitors acquire high-quality data
  double p = 0.0;      // regulator income for regulating
  double f = 0.0;      // reward / penalty applied under regulation
  double alpha = 0.0;  // data mining capability, in [0,1]

  friend bool operator==(const GameParameters&, const GameParameters&) = default;
};

enum class Param { kC1, kC2, kC3, kV1, kV2, kR1, kR2, kL1, kL2, kP, kF, kAlpha };

inline constexpr std::array<Param, 12> kAllParams = {
    Param::kC1, Param::kC2, Param::kC3, Param::kV1, Param::kV2, Param::kR1,
    Param::kR2, Param::kL1, Param::kL2, Param::kP,  Param::kF,  Param::kAlpha};

// Lower-case key used in parameter files ("c1", ..., "alpha").
std::string_view ParamName(Param param);
std::optional<Param> ParseParamName(std::string_view name);
double GetParam(const GameParameters& params, Param param);
void SetParam(GameParameters& params, Param param, double value);

// Cooperator fractions: x providers opening high-quality data, y users
// acquiring data, z regulators regulating.
struct PopulationState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const PopulationState&, const PopulationState&) = default;
};

struct ExpectedPayoffs {
  double e_p1 = 0.0;  // provider, high quality
  double e_p2 = 0.0;  // provider, low quality
  double e_u1 = 0.0;  // user, acquire
  double e_u2 = 0.0;  // user, not acquire
  double e_r1 = 0.0;  // regulator, regulate
  double e_r2 = 0.0;  // regulator, not regulate; identically zero
};

struct AveragePayoffs {
  double provider = 0.0;
  double user = 0.0;
  double regulator = 0.0;
};

struct ReplicatorVelocity {
  double dx_dt = 0.0;
  double dy_dt = 0.0;
  double dz_dt = 0.0;
};

// One cell of the 2x2x2 payoff table.
struct PayoffCell {
  double provider = 0.0;
  double user = 0.0;
  double regulator = 0.0;
};

// Checks finiteness and alpha in [0,1]. With `realistic` set, additionally
// requires c1 > 0 and p > c3. Returns the parameters unchanged or throws
// egt::Error naming the offending field.
GameParameters ValidateParams(const GameParameters& raw, bool realistic = false);

// Throws kInvalidInput unless every coordinate is finite and in [0,1].
PopulationState ValidateState(const PopulationState& state);

PayoffCell PayoffCellFor(const GameParameters& params, bool provider_high_quality,
                         bool user_acquires, bool regulator_regulates);

ExpectedPayoffs ComputeExpectedPayoffs(const GameParameters& params,
                                       const PopulationState& state);

AveragePayoffs ComputeAveragePayoffs(const PopulationState& state,
                                     const ExpectedPayoffs& payoffs);

// Payoff advantage of the cooperative strategy for each population:
// E_p1 - E_p2, E_u1 - E_u2, E_r1 - E_r2 in factored closed form.
struct PayoffGaps {
  double provider = 0.0;
  double user = 0.0;
  double regulator = 0.0;
};
PayoffGaps ComputePayoffGaps(const GameParameters& params, const PopulationState& state);

// Replicator vector field in factored form x(1-x)(E_p1 - E_p2), ...
ReplicatorVelocity ReplicatorRhs(const GameParameters& params, const PopulationState& state);

// The same field written as x(E_p1 - mean payoff), ... Kept separate so the
// two algebraic routes can be compared.
ReplicatorVelocity ReplicatorRhsDefinitional(const GameParameters& params,
                                             const PopulationState& state);

double MaxAbs(const ReplicatorVelocity& v);

}  // namespace egt

#endif  // EGT_MODEL_HPP_
