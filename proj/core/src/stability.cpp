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

#include "egt/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "egt/error.hpp"

namespace egt {

std::string_view StabilityLabelName(StabilityLabel label) {
  switch (label) {
    case StabilityLabel::kESS: return "ESS";
    case StabilityLabel::kUnstable: return "Unstable";
    case StabilityLabel::kSaddle: return "Saddle";
    case StabilityLabel::kNonHyperbolic: return "NonHyperbolic";
  }
  return "Unknown";
}

double JacobianMatrix::Determinant() const {
  const auto& m = entries;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double JacobianMatrix::PrincipalMinorSum() const {
  const auto& m = entries;
  return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
         (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
}

const std::array<PopulationState, 8>& Corners() {
  static const std::array<PopulationState, 8> corners = [] {
    std::array<PopulationState, 8> out{};
    for (int i = 0; i < 8; ++i) {
      out[i] = {static_cast<double>((i >> 2) & 1), static_cast<double>((i >> 1) & 1),
                static_cast<double>(i & 1)};
    }
    return out;
  }();
  return corners;
}

bool IsCorner(const PopulationState& s) {
  auto binary = [](double v) { return v == 0.0 || v == 1.0; };
  return binary(s.x) && binary(s.y) && binary(s.z);
}

JacobianMatrix ComputeJacobian(const GameParameters& g, const PopulationState& s) {
  const PayoffGaps gap = ComputePayoffGaps(g, s);
  const double vx = s.x * (1.0 - s.x);
  const double vy = s.y * (1.0 - s.y);
  const double vz = s.z * (1.0 - s.z);

  JacobianMatrix j;
  j(0, 0) = (1.0 - 2.0 * s.x) * gap.provider;
  j(0, 1) = vx * (g.r1 + g.l1);
  j(0, 2) = 2.0 * vx * g.f;
  j(1, 0) = vy * (g.r1 + g.l2 + g.alpha * (g.v1 - g.v2));
  j(1, 1) = (1.0 - 2.0 * s.y) * gap.user;
  j(1, 2) = 2.0 * vy * g.f;
  j(2, 0) = s.y * vz * g.r2;
  j(2, 1) = s.x * vz * g.r2;
  j(2, 2) = (1.0 - 2.0 * s.z) * gap.regulator;
  return j;
}

namespace {

// lambda^3 + a lambda^2 + b lambda + c
struct MonicCubic {
  double a, b, c;

  double operator()(double x) const { return ((x + a) * x + b) * x + c; }
  double Derivative(double x) const { return (3.0 * x + 2.0 * a) * x + b; }
};

// One real root of the cubic; in the three-real-root case the one of largest
// magnitude, which keeps the subsequent deflation well conditioned.
double RealRoot(const MonicCubic& cubic) {
  const double shift = cubic.a / 3.0;
  const double p = cubic.b - cubic.a * shift;
  const double q = 2.0 * shift * shift * shift - shift * cubic.b + cubic.c;
  const double half_q = q / 2.0;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  double t = 0.0;
  if (disc > 0.0) {
    const double big = -std::copysign(std::cbrt(std::abs(half_q) + std::sqrt(disc)), q);
    t = big + (big != 0.0 ? -third_p / big : 0.0);
  } else if (p < 0.0) {
    const double m = 2.0 * std::sqrt(-third_p);
    const double arg = std::clamp((3.0 * q / (2.0 * p)) * std::sqrt(-3.0 / p), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    double best = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double root = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift;
      if (k == 0 || std::abs(root) > std::abs(best)) best = root;
    }
    return best;
  }
  return t - shift;
}

double PolishRoot(const MonicCubic& cubic, double root) {
  double best = root;
  double best_residual = std::abs(cubic(root));
  double x = root;
  for (int iter = 0; iter < 8 && best_residual > 0.0; ++iter) {
    const double slope = cubic.Derivative(x);
    if (slope == 0.0) break;
    x -= cubic(x) / slope;
    const double residual = std::abs(cubic(x));
    if (!(residual < best_residual)) break;
    best = x;
    best_residual = residual;
  }
  return best;
}

}  // namespace

EigenTriple NumericEigenvalues(const JacobianMatrix& j) {
  const MonicCubic cubic{-j.Trace(), j.PrincipalMinorSum(), -j.Determinant()};
  const double r = PolishRoot(cubic, RealRoot(cubic));

  // Deflate to lambda^2 + a1 lambda + b1.
  const double a1 = cubic.a + r;
  const double b1 = cubic.b + r * a1;
  const double disc = a1 * a1 - 4.0 * b1;

  EigenTriple out;
  out.values[0] = r;
  if (disc >= 0.0) {
    const double q = -0.5 * (a1 + std::copysign(std::sqrt(disc), a1));
    out.values[1] = q;
    out.values[2] = q != 0.0 ? b1 / q : 0.0;
  } else {
    const double im = 0.5 * std::sqrt(-disc);
    out.values[1] = {-0.5 * a1, im};
    out.values[2] = {-0.5 * a1, -im};
  }
  std::sort(out.values.begin(), out.values.end(),
            [](const std::complex<double>& lhs, const std::complex<double>& rhs) {
              if (lhs.real() != rhs.real()) return lhs.real() > rhs.real();
              return lhs.imag() > rhs.imag();
            });
  return out;
}

namespace {

void RequireCorner(const PopulationState& corner) {
  if (!IsCorner(corner)) {
    throw Error(ErrorCode::kNotACorner, "state is not a pure-strategy profile in {0,1}^3");
  }
}

int CornerIndex(const PopulationState& corner) {
  return (static_cast<int>(corner.x) << 2) | (static_cast<int>(corner.y) << 1) |
         static_cast<int>(corner.z);
}

EigenTriple SortedReal(std::array<double, 3> diag) {
  std::sort(diag.begin(), diag.end(), std::greater<>());
  EigenTriple out;
  for (int i = 0; i < 3; ++i) out.values[i] = diag[i];
  return out;
}

using ConditionRow = std::array<Condition, 3>;

Condition Less(std::string text, double lhs, double rhs) {
  return {std::move(text), lhs, rhs, lhs < rhs};
}

// ESS conditions for each pure profile, indexed by CornerIndex. Written out
// as tabulated rather than derived from the Jacobian, so the eigenvalue route
// stays an independent check.
ConditionRow TabulatedConditions(const GameParameters& g, int index) {
  const double av1 = g.alpha * g.v1;
  const double av2 = g.alpha * g.v2;
  const double f2 = 2.0 * g.f;
  switch (index) {
    case 0:  // (0,0,0)
      return {Less("0 < C1", 0.0, g.c1), Less("alpha*V2 < C2", av2, g.c2),
              Less("P < C3", g.p, g.c3)};
    case 1:  // (0,0,1)
      return {Less("2F < C1", f2, g.c1), Less("2F + alpha*V2 < C2", f2 + av2, g.c2),
              Less("C3 < P", g.c3, g.p)};
    case 2:  // (0,1,0)
      return {Less("R1 + L1 < C1", g.r1 + g.l1, g.c1), Less("C2 < alpha*V2", g.c2, av2),
              Less("P < C3", g.p, g.c3)};
    case 3:  // (0,1,1)
      return {Less("2F + R1 + L1 < C1", f2 + g.r1 + g.l1, g.c1),
              Less("C2 < alpha*V2 + 2F", g.c2, av2 + f2), Less("C3 < P", g.c3, g.p)};
    case 4:  // (1,0,0)
      return {Less("C1 < 0", g.c1, 0.0),
              Less("R1 + L2 + alpha*V1 < C2", g.r1 + g.l2 + av1, g.c2),
              Less("P < C3", g.p, g.c3)};
    case 5:  // (1,0,1)
      return {Less("C1 < 2F", g.c1, f2),
              Less("2F + R1 + L2 + alpha*V1 < C2", f2 + g.r1 + g.l2 + av1, g.c2),
              Less("C3 < P", g.c3, g.p)};
    case 6:  // (1,1,0)
      return {Less("C1 < R1 + L1", g.c1, g.r1 + g.l1),
              Less("C2 < R1 + L2 + alpha*V1", g.c2, g.r1 + g.l2 + av1),
              Less("R2 + P < C3", g.r2 + g.p, g.c3)};
    case 7:  // (1,1,1)
      return {Less("C1 < 2F + R1 + L1", g.c1, f2 + g.r1 + g.l1),
              Less("C2 < 2F + R1 + L2 + alpha*V1", g.c2, f2 + g.r1 + g.l2 + av1),
              Less("C3 < R2 + P", g.c3, g.r2 + g.p)};
    default: break;
  }
  throw std::logic_error("corner index out of range");
}

}  // namespace

EigenTriple CornerEigenvalues(const GameParameters& params, const PopulationState& corner) {
  RequireCorner(corner);
  const PayoffGaps gap = ComputePayoffGaps(params, corner);
  return SortedReal({(1.0 - 2.0 * corner.x) * gap.provider, (1.0 - 2.0 * corner.y) * gap.user,
                     (1.0 - 2.0 * corner.z) * gap.regulator});
}

StabilityLabel LabelFromEigenvalues(const EigenTriple& eigenvalues, EquilibriumKind kind) {
  bool any_positive = false;
  bool any_negative = false;
  for (const auto& lambda : eigenvalues.values) {
    if (std::abs(lambda.real()) <= kHyperbolicityTol) return StabilityLabel::kNonHyperbolic;
    (lambda.real() > 0.0 ? any_positive : any_negative) = true;
  }
  if (!any_positive) return StabilityLabel::kESS;
  if (kind == EquilibriumKind::kInterior && any_negative) return StabilityLabel::kSaddle;
  return StabilityLabel::kUnstable;
}

StabilityVerdict ClassifyCorner(const GameParameters& params, const PopulationState& corner) {
  RequireCorner(corner);
  const ConditionRow row = TabulatedConditions(params, CornerIndex(corner));

  StabilityVerdict verdict;
  verdict.condition_trace.assign(row.begin(), row.end());
  const bool boundary = std::any_of(row.begin(), row.end(), [](const Condition& c) {
    return std::abs(c.lhs - c.rhs) <= kHyperbolicityTol;
  });
  const bool all_hold =
      std::all_of(row.begin(), row.end(), [](const Condition& c) { return c.satisfied; });
  verdict.label = boundary   ? StabilityLabel::kNonHyperbolic
                  : all_hold ? StabilityLabel::kESS
                             : StabilityLabel::kUnstable;

#ifdef EGT_INTERNAL_CHECKS
  const EigenTriple eig = CornerEigenvalues(params, corner);
  const bool clear_of_zero = std::all_of(eig.values.begin(), eig.values.end(), [](auto v) {
    return std::abs(v.real()) > 1e-6;
  });
  if (clear_of_zero &&
      LabelFromEigenvalues(eig, EquilibriumKind::kCorner) != verdict.label) {
    throw std::logic_error("tabulated ESS conditions disagree with corner eigenvalues");
  }
#endif
  return verdict;
}

std::vector<EquilibriumPoint> FindInteriorEquilibria(const GameParameters& g) {
  const double provider_den = g.r1 + g.l1;
  const double user_den = g.r1 + g.l2 + g.alpha * (g.v1 - g.v2);
  if (std::abs(provider_den) <= 1e-12) {
    throw Error(ErrorCode::kDegenerateDenominator, "R1 + L1 vanishes; interior search undefined");
  }
  if (std::abs(user_den) <= 1e-12) {
    throw Error(ErrorCode::kDegenerateDenominator,
                "R1 + L2 + alpha*(V1 - V2) vanishes; interior search undefined");
  }

  // The first two equilibrium equations are linear in (y, z) and (x, z).
  auto y_of = [&](double z) { return (g.c1 - 2.0 * z * g.f) / provider_den; };
  auto x_of = [&](double z) { return (g.c2 - g.alpha * g.v2 - 2.0 * z * g.f) / user_den; };
  auto residual_of = [&](double z) { return x_of(z) * y_of(z) * g.r2 + g.p - g.c3; };

  constexpr int kIntervals = 1024;
  std::array<double, kIntervals + 1> samples{};
  double max_abs = 0.0;
  for (int i = 0; i <= kIntervals; ++i) {
    samples[i] = residual_of(static_cast<double>(i) / kIntervals);
    max_abs = std::max(max_abs, std::abs(samples[i]));
  }
  // Identically zero: a continuum of equilibria, not isolated points.
  if (max_abs <= 1e-12) return {};

  std::vector<double> roots;
  for (int i = 0; i < kIntervals; ++i) {
    const double z0 = static_cast<double>(i) / kIntervals;
    if (samples[i] == 0.0) {
      if (i > 0) roots.push_back(z0);
      continue;
    }
    if (samples[i] * samples[i + 1] >= 0.0) continue;
    double lo = z0;
    double hi = static_cast<double>(i + 1) / kIntervals;
    double f_lo = samples[i];
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = residual_of(mid);
      if (f_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }

  std::vector<EquilibriumPoint> points;
  for (double z : roots) {
    const PopulationState s{x_of(z), y_of(z), z};
    auto open_unit = [](double v) { return v > 0.0 && v < 1.0; };
    if (!open_unit(s.x) || !open_unit(s.y) || !open_unit(s.z)) continue;
    const PayoffGaps gap = ComputePayoffGaps(g, s);
    const double residual =
        std::max({std::abs(gap.provider), std::abs(gap.user), std::abs(gap.regulator)});
    if (residual >= 1e-10) continue;
    points.push_back({s, EquilibriumKind::kInterior});
  }
  return points;
}

std::optional<EquilibriumPoint> FindInteriorEquilibrium(const GameParameters& params) {
  auto points = FindInteriorEquilibria(params);
  if (points.empty()) return std::nullopt;
  return points.front();
}

Classification ClassifyAll(const GameParameters& params) {
  Classification result;
  for (const PopulationState& corner : Corners()) {
    const JacobianMatrix j = ComputeJacobian(params, corner);
    result.equilibria.push_back({{corner, EquilibriumKind::kCorner},
                                 NumericEigenvalues(j),
                                 ClassifyCorner(params, corner),
                                 j.Trace()});
  }

  std::vector<EquilibriumPoint> interior;
  try {
    interior = FindInteriorEquilibria(params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateDenominator) throw;
    result.warning = e.what();
  }
  for (const EquilibriumPoint& point : interior) {
    const JacobianMatrix j = ComputeJacobian(params, point.coords);
    ClassifiedEquilibrium entry{point, NumericEigenvalues(j), {}, j.Trace()};
    entry.verdict.label = LabelFromEigenvalues(entry.eigenvalues, EquilibriumKind::kInterior);
    // A zero trace rules out three negative real parts.
    if (entry.verdict.label == StabilityLabel::kESS) {
      entry.verdict.label = StabilityLabel::kNonHyperbolic;
    }
    entry.verdict.condition_trace.push_back(
        Less("trace(J) < 0", entry.trace, 0.0));
    result.equilibria.push_back(std::move(entry));
  }
  return result;
}

}  // namespace egt
