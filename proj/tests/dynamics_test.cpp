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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "egt/dynamics.hpp"
#include "egt/error.hpp"
#include "egt/experiments.hpp"
#include "egt/stability.hpp"
#include "test_support.hpp"

namespace egt {
namespace {

using testing::Fig2aParams;
using testing::MaxAbsDiff;
using testing::RandomParams;

GameParameters Preset(const std::string& name) { return FindPreset(name)->params; }

TEST(Step, CornerIsFixed) {
  std::mt19937_64 rng(41);
  const GameParameters g = RandomParams(rng);
  for (const PopulationState& c : Corners()) EXPECT_EQ(Step(g, c, 0.01), c);
}

TEST(Step, Fig2aMovesAlongRhsSigns) {
  const PopulationState s{0.5, 0.5, 0.5};
  const PopulationState next = Step(Fig2aParams(), s, 0.01);
  EXPECT_LT(next.x, s.x);
  EXPECT_LT(next.y, s.y);
  EXPECT_GT(next.z, s.z);
}

TEST(Step, HugeStepDivergesWithTime) {
  try {
    Step(Fig2aParams(), {0.5, 0.5, 0.5}, 10.0, 3.5);
    FAIL();
  } catch (const StepDivergedError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStepDiverged);
    EXPECT_EQ(e.time(), 3.5);
  }
}

TEST(Step, LocalErrorShrinksLikeFifthPower) {
  const GameParameters g = Fig2aParams();
  const PopulationState s{0.3, 0.6, 0.4};
  auto local_error = [&](double h) {
    const PopulationState one = Step(g, s, h);
    const PopulationState two = Step(g, Step(g, s, h / 2), h / 2);
    return MaxAbsDiff(one, two);
  };
  const double ratio = local_error(0.04) / local_error(0.02);
  EXPECT_GT(ratio, 24.0);  // 2^5 = 32 asymptotically
}

TEST(Integrate, Fig2aMonotoneToRegulatorCorner) {
  const Trajectory t = Integrate(Fig2aParams(), {0.5, 0.5, 0.5});
  ASSERT_TRUE(t.converged_to.has_value());
  EXPECT_LT(MaxAbsDiff(t.final_state(), {0, 0, 1}), 1e-3);
  EXPECT_EQ(t.samples.front().t, 0.0);
  EXPECT_EQ(t.samples.front().state, (PopulationState{0.5, 0.5, 0.5}));
  for (std::size_t i = 1; i < t.samples.size(); ++i) {
    EXPECT_GT(t.samples[i].t, t.samples[i - 1].t);
    EXPECT_LE(t.samples[i].state.x, t.samples[i - 1].state.x);
    EXPECT_LE(t.samples[i].state.y, t.samples[i - 1].state.y);
    EXPECT_GE(t.samples[i].state.z, t.samples[i - 1].state.z);
  }
}

TEST(Integrate, Fig2dReachesAllCooperate) {
  const Trajectory t = Integrate(Preset("fig2d"), {0.5, 0.5, 0.5});
  EXPECT_LT(MaxAbsDiff(t.final_state(), {1, 1, 1}), 1e-3);
}

TEST(Integrate, StartAtOriginConvergesImmediately) {
  const Trajectory t = Integrate(Fig2aParams(), {0, 0, 0});
  ASSERT_TRUE(t.converged_to.has_value());
  EXPECT_EQ(t.converged_to->t, 0.0);
  ASSERT_EQ(t.samples.size(), 1u);
  EXPECT_EQ(t.final_state(), (PopulationState{0, 0, 0}));
}

TEST(Integrate, ZeroHorizonGivesOnlyInitialSample) {
  IntegratorConfig config;
  config.t_max = 0;
  const Trajectory t = Integrate(Fig2aParams(), {0.5, 0.5, 0.5}, config);
  ASSERT_EQ(t.samples.size(), 1u);
  EXPECT_FALSE(t.converged_to.has_value());
}

TEST(Integrate, StrideAndLastSample) {
  IntegratorConfig config;
  config.t_max = 1.005;
  config.sample_stride = 10;
  config.stop_on_convergence = false;
  const Trajectory t = Integrate(Fig2aParams(), {0.5, 0.5, 0.5}, config);
  // t = 0, 0.1, ..., 1.0 and the shortened final step landing on 1.005.
  ASSERT_EQ(t.samples.size(), 12u);
  EXPECT_DOUBLE_EQ(t.samples[1].t, 0.1);
  EXPECT_EQ(t.samples.back().t, 1.005);
}

TEST(Integrate, InvalidConfigRejected) {
  IntegratorConfig config;
  config.dt = 0;
  EXPECT_THROW(Integrate(Fig2aParams(), {0.5, 0.5, 0.5}, config), Error);
  config = {};
  config.sample_stride = 0;
  EXPECT_THROW(Integrate(Fig2aParams(), {0.5, 0.5, 0.5}, config), Error);
  config = {};
  config.rhs_tol = -1;
  EXPECT_THROW(Integrate(Fig2aParams(), {0.5, 0.5, 0.5}, config), Error);
}

TEST(Integrate, CapturingFailureKeepsPartialSamples) {
  IntegratorConfig config;
  config.dt = 5.0;
  std::optional<StepDivergedError> failure;
  const Trajectory t = IntegrateCapturingFailure(Fig2aParams(), {0.5, 0.5, 0.5}, config, failure);
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(t.samples.size(), 1u);
  EXPECT_THROW(Integrate(Fig2aParams(), {0.5, 0.5, 0.5}, config), StepDivergedError);
}

TEST(FinalState, Fig2bAndFig2cAndCorner) {
  EXPECT_LT(MaxAbsDiff(FinalState(Preset("fig2b"), {0.5, 0.5, 0.5}), {0, 1, 1}), 1e-3);
  EXPECT_LT(MaxAbsDiff(FinalState(Preset("fig2c"), {0.5, 0.5, 0.5}), {1, 0, 1}), 1e-3);
  EXPECT_EQ(FinalState(Preset("fig2c"), {1, 1, 0}), (PopulationState{1, 1, 0}));
  const Trajectory t = Integrate(Preset("fig2c"), {0.5, 0.5, 0.5});
  EXPECT_EQ(FinalState(Preset("fig2c"), {0.5, 0.5, 0.5}), t.final_state());
}

// The limit from the centre is one of the ESS corners classify reports (for
// fig2a the one whose basin holds the centre).
TEST(DynamicsProperties, ConvergesToAnEss) {
  const std::pair<const char*, PopulationState> cases[] = {
      {"fig2a", {0, 0, 1}}, {"fig2b", {0, 1, 1}}, {"fig2c", {1, 0, 1}}, {"fig2d", {1, 1, 1}}};
  for (const auto& [name, expected] : cases) {
    const GameParameters g = Preset(name);
    bool is_ess = false;
    for (const auto& e : ClassifyAll(g).equilibria) {
      is_ess |= e.verdict.label == StabilityLabel::kESS && e.point.coords == expected;
    }
    EXPECT_TRUE(is_ess) << name;
    std::optional<Convergence> conv;
    FinalState(g, {0.5, 0.5, 0.5}, {}, &conv);
    ASSERT_TRUE(conv.has_value()) << name;
    EXPECT_LT(MaxAbsDiff(conv->limit, expected), IntegratorConfig{}.corner_tol) << name;
  }
}

TEST(DynamicsProperties, Fig2aSettlesByTimeFive) {
  IntegratorConfig config;
  config.t_max = 5;
  config.stop_on_convergence = false;
  EXPECT_LT(MaxAbsDiff(FinalState(Fig2aParams(), {0.5, 0.5, 0.5}, config), {0, 0, 1}), 0.05);
}

TEST(DynamicsProperties, StaysInBoxBeforeClamping) {
  std::mt19937_64 rng(42);
  IntegratorConfig config;
  config.t_max = 20;
  for (int i = 0; i < 500; ++i) {
    const GameParameters g = RandomParams(rng);
    PopulationState s = testing::RandomState(rng, 0.001, 0.999);
    double worst = 0.0;
    for (int k = 0; k < 2000; ++k) {
      double excursion = 0.0;
      s = Step(g, s, config.dt, k * config.dt, excursion);
      worst = std::max(worst, excursion);
    }
    EXPECT_LE(worst, kBoxTolerance) << i;
  }
}

TEST(DynamicsProperties, FacesStayExact) {
  std::mt19937_64 rng(43);
  IntegratorConfig config;
  config.t_max = 10;
  config.stop_on_convergence = false;
  for (int i = 0; i < 60; ++i) {
    const GameParameters g = RandomParams(rng);
    PopulationState s = testing::RandomState(rng, 0.05, 0.95);
    const int axis = i % 3;
    const double face = (i / 3) % 2;
    testing::Coord(s, axis) = face;
    for (const auto& sample : Integrate(g, s, config).samples) {
      PopulationState copy = sample.state;
      EXPECT_EQ(testing::Coord(copy, axis), face) << i;
    }
  }
}

// Step halving at t=10: each halving should shrink the change by about 16.
TEST(DynamicsProperties, FourthOrderConvergence) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 20; ++i) {
    const GameParameters g = RandomParams(rng, 1.0);
    const PopulationState s0 = testing::RandomState(rng, 0.1, 0.9);
    IntegratorConfig config;
    config.t_max = 10;
    config.stop_on_convergence = false;
    PopulationState finals[3];
    const double dts[3] = {0.2, 0.1, 0.05};
    for (int k = 0; k < 3; ++k) {
      config.dt = dts[k];
      finals[k] = FinalState(g, s0, config);
    }
    const double d1 = MaxAbsDiff(finals[0], finals[1]);
    const double d2 = MaxAbsDiff(finals[1], finals[2]);
    EXPECT_GE(d1 / d2, 8.0) << i << " d1=" << d1 << " d2=" << d2;
  }
}

}  // namespace
}  // namespace egt
