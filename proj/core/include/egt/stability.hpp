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

#ifndef EGT_STABILITY_HPP_
#define EGT_STABILITY_HPP_

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "egt/model.hpp"

namespace egt {

// Real parts within this distance of zero are treated as non-hyperbolic.
inline constexpr double kHyperbolicityTol = 1e-9;

enum class EquilibriumKind { kCorner, kInterior };

struct EquilibriumPoint {
  PopulationState coords;
  EquilibriumKind kind = EquilibriumKind::kCorner;
};

// Row-major 3x3 Jacobian of the replicator field.
struct JacobianMatrix {
  std::array<std::array<double, 3>, 3> entries{};

  double operator()(int row, int col) const { return entries[row][col]; }
  double& operator()(int row, int col) { return entries[row][col]; }
  double Trace() const { return entries[0][0] + entries[1][1] + entries[2][2]; }
  double Determinant() const;
  // Sum of the three principal 2x2 minors.
  double PrincipalMinorSum() const;
};

// Eigenvalues sorted by descending real part (ties: descending imaginary part).
struct EigenTriple {
  std::array<std::complex<double>, 3> values{};

  std::complex<double> Sum() const { return values[0] + values[1] + values[2]; }
  std::complex<double> Product() const { return values[0] * values[1] * values[2]; }
};

enum class StabilityLabel { kESS, kUnstable, kSaddle, kNonHyperbolic };

std::string_view StabilityLabelName(StabilityLabel label);

// One inequality from the ESS condition table, recorded as `lhs < rhs`.
struct Condition {
  std::string text;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

struct StabilityVerdict {
  StabilityLabel label = StabilityLabel::kUnstable;
  std::vector<Condition> condition_trace;
};

struct ClassifiedEquilibrium {
  EquilibriumPoint point;
  EigenTriple eigenvalues;
  StabilityVerdict verdict;
  double trace = 0.0;
};

struct Classification {
  std::vector<ClassifiedEquilibrium> equilibria;
  // Set when the interior search could not run; corners are still reported.
  std::optional<std::string> warning;
};

// The eight pure profiles in binary order (0,0,0), (0,0,1), ..., (1,1,1).
const std::array<PopulationState, 8>& Corners();
bool IsCorner(const PopulationState& state);

JacobianMatrix ComputeJacobian(const GameParameters& params, const PopulationState& state);

// Roots of det(J - lambda I) from the characteristic cubic in closed form.
EigenTriple NumericEigenvalues(const JacobianMatrix& j);

// Eigenvalues at a pure profile, read off the diagonal in closed form.
// Throws kNotACorner.
EigenTriple CornerEigenvalues(const GameParameters& params, const PopulationState& corner);

// Label from eigenvalue real parts. Interior points with eigenvalues of both
// signs are reported as saddles; at a pure profile any positive real part
// makes it Unstable.
StabilityLabel LabelFromEigenvalues(const EigenTriple& eigenvalues, EquilibriumKind kind);

// ESS test against the tabulated inequalities for the given corner. The
// resulting label is ESS, Unstable or NonHyperbolic (an inequality holding
// with equality). Throws kNotACorner.
StabilityVerdict ClassifyCorner(const GameParameters& params, const PopulationState& corner);

// All mixed equilibria in the open unit cube, ordered by z. Throws
// kDegenerateDenominator when the reduction to a scalar equation in z is
// undefined.
std::vector<EquilibriumPoint> FindInteriorEquilibria(const GameParameters& params);

// First element of FindInteriorEquilibria, if any.
std::optional<EquilibriumPoint> FindInteriorEquilibrium(const GameParameters& params);

// Eight corners followed by any interior equilibria.
Classification ClassifyAll(const GameParameters& params);

}  // namespace egt

#endif  // EGT_STABILITY_HPP_
