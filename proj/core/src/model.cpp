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

#include "egt/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "egt/error.hpp"

namespace egt {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kInfeasibleRegime: return "InfeasibleRegime";
    case ErrorCode::kNotACorner: return "NotACorner";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kStepDiverged: return "StepDiverged";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string_view ParamName(Param param) {
  switch (param) {
    case Param::kC1: return "c1";
    case Param::kC2: return "c2";
    case Param::kC3: return "c3";
    case Param::kV1: return "v1";
    case Param::kV2: return "v2";
    case Param::kR1: return "r1";
    case Param::kR2: return "r2";
    case Param::kL1: return "l1";
    case Param::kL2: return "l2";
    case Param::kP: return "p";
    case Param::kF: return "f";
    case Param::kAlpha: return "alpha";
  }
  return "";
}

std::optional<Param> ParseParamName(std::string_view name) {
  for (Param param : kAllParams) {
    if (ParamName(param) == name) return param;
  }
  return std::nullopt;
}

namespace {

double& ParamRef(GameParameters& params, Param param) {
  switch (param) {
    case Param::kC1: return params.c1;
    case Param::kC2: return params.c2;
    case Param::kC3: return params.c3;
    case Param::kV1: return params.v1;
    case Param::kV2: return params.v2;
    case Param::kR1: return params.r1;
    case Param::kR2: return params.r2;
    case Param::kL1: return params.l1;
    case Param::kL2: return params.l2;
    case Param::kP: return params.p;
    case Param::kF: return params.f;
    case Param::kAlpha: return params.alpha;
  }
  throw std::logic_error("unhandled Param");
}

}  // namespace

double GetParam(const GameParameters& params, Param param) {
  return ParamRef(const_cast<GameParameters&>(params), param);
}

void SetParam(GameParameters& params, Param param, double value) {
  ParamRef(params, param) = value;
}

GameParameters ValidateParams(const GameParameters& raw, bool realistic) {
  for (Param param : kAllParams) {
    if (!std::isfinite(GetParam(raw, param))) {
      throw Error(ErrorCode::kNonFinite,
                  "parameter '" + std::string(ParamName(param)) + "' is not finite");
    }
  }
  if (raw.alpha < 0.0 || raw.alpha > 1.0) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "parameter 'alpha' = " + std::to_string(raw.alpha) + " is outside [0,1]");
  }
  if (realistic) {
    if (!(raw.c1 > 0.0)) {
      throw Error(ErrorCode::kInfeasibleRegime,
                  "parameter 'c1' must be positive in the realistic regime");
    }
    if (!(raw.p > raw.c3)) {
      throw Error(ErrorCode::kInfeasibleRegime,
                  "parameters 'p' and 'c3' must satisfy p > c3 in the realistic regime");
    }
  }
  return raw;
}

PopulationState ValidateState(const PopulationState& state) {
  const std::array<std::pair<const char*, double>, 3> coords = {
      {{"x", state.x}, {"y", state.y}, {"z", state.z}}};
  for (const auto& [name, value] : coords) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string("state coordinate '") + name + "' must lie in [0,1]");
    }
  }
  return state;
}

PayoffCell PayoffCellFor(const GameParameters& g, bool provider_high_quality,
                         bool user_acquires, bool regulator_regulates) {
  const double regulator = regulator_regulates
                               ? g.p - g.c3 + (provider_high_quality && user_acquires ? g.r2 : 0.0)
                               : 0.0;
  const double reg_f = regulator_regulates ? g.f : 0.0;

  double provider = 0.0;
  double user = 0.0;
  if (provider_high_quality) {
    provider = reg_f - g.c1 + (user_acquires ? g.r1 : 0.0);
    user = user_acquires ? g.r1 + reg_f + g.alpha * g.v1 - g.c2 : -reg_f - g.l2;
  } else {
    provider = -reg_f - (user_acquires ? g.l1 : 0.0);
    user = user_acquires ? reg_f + g.alpha * g.v2 - g.c2 : -reg_f;
  }
  return {provider, user, regulator};
}

ExpectedPayoffs ComputeExpectedPayoffs(const GameParameters& g, const PopulationState& s) {
  ExpectedPayoffs e;
  e.e_p1 = s.z * g.f + s.y * g.r1 - g.c1;
  e.e_p2 = -s.z * g.f - s.y * g.l1;
  e.e_u1 = s.z * g.f + s.x * g.r1 + s.x * g.alpha * (g.v1 - g.v2) + g.alpha * g.v2 - g.c2;
  e.e_u2 = -s.z * g.f - s.x * g.l2;
  e.e_r1 = s.x * s.y * g.r2 + g.p - g.c3;
  e.e_r2 = 0.0;
  return e;
}

AveragePayoffs ComputeAveragePayoffs(const PopulationState& s, const ExpectedPayoffs& e) {
  return {s.x * e.e_p1 + (1.0 - s.x) * e.e_p2, s.y * e.e_u1 + (1.0 - s.y) * e.e_u2,
          s.z * e.e_r1 + (1.0 - s.z) * e.e_r2};
}

PayoffGaps ComputePayoffGaps(const GameParameters& g, const PopulationState& s) {
  return {2.0 * s.z * g.f + s.y * g.r1 + s.y * g.l1 - g.c1,
          2.0 * s.z * g.f + s.x * g.r1 + s.x * g.l2 + s.x * g.alpha * (g.v1 - g.v2) +
              g.alpha * g.v2 - g.c2,
          s.x * s.y * g.r2 + g.p - g.c3};
}

ReplicatorVelocity ReplicatorRhsDefinitional(const GameParameters& params,
                                             const PopulationState& s) {
  const ExpectedPayoffs e = ComputeExpectedPayoffs(params, s);
  const AveragePayoffs avg = ComputeAveragePayoffs(s, e);
  return {s.x * (e.e_p1 - avg.provider), s.y * (e.e_u1 - avg.user),
          s.z * (e.e_r1 - avg.regulator)};
}

ReplicatorVelocity ReplicatorRhs(const GameParameters& params, const PopulationState& s) {
  const PayoffGaps gap = ComputePayoffGaps(params, s);
  const ReplicatorVelocity v{s.x * (1.0 - s.x) * gap.provider, s.y * (1.0 - s.y) * gap.user,
                             s.z * (1.0 - s.z) * gap.regulator};
#ifdef EGT_INTERNAL_CHECKS
  const ReplicatorVelocity d = ReplicatorRhsDefinitional(params, s);
  const ExpectedPayoffs e = ComputeExpectedPayoffs(params, s);
  auto agrees = [](double a, double b, double payoff_scale) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b), payoff_scale});
  };
  if (!agrees(v.dx_dt, d.dx_dt, std::abs(e.e_p1) + std::abs(e.e_p2)) ||
      !agrees(v.dy_dt, d.dy_dt, std::abs(e.e_u1) + std::abs(e.e_u2)) ||
      !agrees(v.dz_dt, d.dz_dt, std::abs(e.e_r1))) {
    throw std::logic_error("replicator field disagrees with its definitional form");
  }
#endif
  return v;
}

double MaxAbs(const ReplicatorVelocity& v) {
  return std::max({std::abs(v.dx_dt), std::abs(v.dy_dt), std::abs(v.dz_dt)});
}

}  // namespace egt
