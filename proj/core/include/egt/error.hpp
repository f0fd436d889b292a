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

#ifndef EGT_ERROR_HPP_
#define EGT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace egt {

enum class ErrorCode {
  kNonFinite,
  kAlphaOutOfRange,
  kInfeasibleRegime,
  kNotACorner,
  kDegenerateDenominator,
  kStepDiverged,
  kInvalidInput,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library surface as egt::Error. The code
// is what callers branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the integrator. Carries the simulation time of the failed step.
class StepDivergedError : public Error {
 public:
  StepDivergedError(double time, const std::string& message)
      : Error(ErrorCode::kStepDiverged, message), time_(time) {}

  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace egt

#endif  // EGT_ERROR_HPP_
