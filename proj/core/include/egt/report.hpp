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

#ifndef EGT_REPORT_HPP_
#define EGT_REPORT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "egt/dynamics.hpp"
#include "egt/experiments.hpp"
#include "egt/model.hpp"
#include "egt/stability.hpp"

namespace egt {

inline constexpr const char* kToolVersion = "1.0.0";

// Flat JSON object with the 12 lower-case parameter keys and an optional
// "initial": [x, y, z].
struct ParameterFile {
  GameParameters params;
  std::optional<PopulationState> initial;
};

// Parses and validates (non-realistic regime). Throws egt::Error whose
// message names the offending key.
ParameterFile ParseParameterJson(const std::string& text);
ParameterFile LoadParameterFile(const std::filesystem::path& path);
std::string ToParameterJson(const ParameterFile& file);

// Shortest decimal string that parses back to the same double.
std::string FormatNumber(double value);

// Header `t,x,y,z`, one row per sample. A non-empty `trailer` is appended as
// a `# ...` comment row.
std::string TrajectoryCsv(const Trajectory& trajectory, const std::string& trailer = "");

// Header `alpha,<label>...`, one row per alpha grid point.
std::string SweepCsv(const SweepResult& sweep);

// First row: corner label then the c2 grid; first column: the v1 grid.
std::string HeatmapCsv(const HeatmapResult& heatmap);

std::string ClassificationJson(const GameParameters& params, const Classification& result,
                               const std::string& source);

struct RunManifest {
  std::string command;
  std::string preset_or_file;
  std::vector<std::string> outputs;
  std::string tool_version = kToolVersion;
  std::string timestamp;  // UTC, ISO 8601
};

std::string UtcTimestamp();
std::string ManifestJson(const RunManifest& manifest);

// Writes `content` to `path`, creating parent directories.
void WriteTextFile(const std::filesystem::path& path, const std::string& content);

}  // namespace egt

#endif  // EGT_REPORT_HPP_
