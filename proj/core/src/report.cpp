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

#include "egt/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <system_error>

#include "egt/error.hpp"

namespace egt {

using nlohmann::json;

namespace {

[[noreturn]] void BadInput(const std::string& message) {
  throw Error(ErrorCode::kInvalidInput, message);
}

double RequireNumber(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) BadInput("parameter file is missing key '" + key + "'");
  if (!it->is_number()) BadInput("parameter '" + key + "' must be a number");
  return it->get<double>();
}

}  // namespace

ParameterFile ParseParameterJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    BadInput(std::string("parameter file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) BadInput("parameter file must hold a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (key != "initial" && !ParseParamName(key)) {
      BadInput("parameter file has unknown key '" + key + "'");
    }
  }

  ParameterFile file;
  for (Param param : kAllParams) {
    SetParam(file.params, param, RequireNumber(doc, std::string(ParamName(param))));
  }
  ValidateParams(file.params);

  if (auto it = doc.find("initial"); it != doc.end()) {
    if (!it->is_array() || it->size() != 3 ||
        !std::all_of(it->begin(), it->end(), [](const json& v) { return v.is_number(); })) {
      BadInput("'initial' must be an array of three numbers");
    }
    PopulationState s{(*it)[0].get<double>(), (*it)[1].get<double>(), (*it)[2].get<double>()};
    try {
      ValidateState(s);
    } catch (const Error& e) {
      BadInput(std::string("'initial': ") + e.what());
    }
    file.initial = s;
  }
  return file;
}

ParameterFile LoadParameterFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) BadInput("cannot open parameter file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseParameterJson(buffer.str());
}

std::string ToParameterJson(const ParameterFile& file) {
  json doc = json::object();
  for (Param param : kAllParams) {
    doc[std::string(ParamName(param))] = GetParam(file.params, param);
  }
  if (file.initial) doc["initial"] = {file.initial->x, file.initial->y, file.initial->z};
  return doc.dump(2) + "\n";
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string TrajectoryCsv(const Trajectory& trajectory, const std::string& trailer) {
  std::string out = "t,x,y,z\n";
  for (const TrajectorySample& sample : trajectory.samples) {
    out += FormatNumber(sample.t) + ',' + FormatNumber(sample.state.x) + ',' +
           FormatNumber(sample.state.y) + ',' + FormatNumber(sample.state.z) + '\n';
  }
  if (!trailer.empty()) out += "# " + trailer + "\n";
  return out;
}

std::string SweepCsv(const SweepResult& sweep) {
  std::string out = "alpha";
  for (const SweepSeries& series : sweep.series) out += ',' + series.label;
  out += '\n';
  for (std::size_t i = 0; i < sweep.alpha_grid.size(); ++i) {
    out += FormatNumber(sweep.alpha_grid[i]);
    for (const SweepSeries& series : sweep.series) out += ',' + FormatNumber(series.final_y[i]);
    out += '\n';
  }
  return out;
}

std::string HeatmapCsv(const HeatmapResult& heatmap) {
  std::string out = "v1\\c2";
  for (double c2 : heatmap.c2_grid) out += ',' + FormatNumber(c2);
  out += '\n';
  for (std::size_t i = 0; i < heatmap.v1_grid.size(); ++i) {
    out += FormatNumber(heatmap.v1_grid[i]);
    for (double cell : heatmap.cells[i]) out += ',' + FormatNumber(cell);
    out += '\n';
  }
  return out;
}

std::string ClassificationJson(const GameParameters& params, const Classification& result,
                               const std::string& source) {
  json doc;
  doc["source"] = source;
  json p = json::object();
  for (Param param : kAllParams) p[std::string(ParamName(param))] = GetParam(params, param);
  doc["params"] = p;

  json equilibria = json::array();
  for (const ClassifiedEquilibrium& eq : result.equilibria) {
    json entry;
    entry["coords"] = {eq.point.coords.x, eq.point.coords.y, eq.point.coords.z};
    entry["kind"] = eq.point.kind == EquilibriumKind::kCorner ? "corner" : "interior";
    json eigenvalues = json::array();
    for (const auto& lambda : eq.eigenvalues.values) {
      eigenvalues.push_back({{"re", lambda.real()}, {"im", lambda.imag()}});
    }
    entry["eigenvalues"] = eigenvalues;
    entry["trace"] = eq.trace;
    entry["verdict"] = std::string(StabilityLabelName(eq.verdict.label));
    json conditions = json::array();
    for (const Condition& c : eq.verdict.condition_trace) {
      conditions.push_back(
          {{"condition", c.text}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"satisfied", c.satisfied}});
    }
    entry["conditions"] = conditions;
    equilibria.push_back(entry);
  }
  doc["equilibria"] = equilibria;
  doc["warning"] = result.warning ? json(*result.warning) : json(nullptr);
  return doc.dump(2) + "\n";
}

std::string UtcTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string ManifestJson(const RunManifest& manifest) {
  json doc;
  doc["command"] = manifest.command;
  doc["preset_or_file"] = manifest.preset_or_file;
  doc["outputs"] = manifest.outputs;
  doc["tool_version"] = manifest.tool_version;
  doc["timestamp"] = manifest.timestamp;
  return doc.dump(2) + "\n";
}

void WriteTextFile(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) BadInput("cannot write '" + path.string() + "'");
  out << content;
  if (!out) BadInput("failed writing '" + path.string() + "'");
}

}  // namespace egt
