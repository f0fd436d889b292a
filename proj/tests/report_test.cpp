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
#include "egt/experiments.hpp"
#include <filesystem>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "egt/error.hpp"
#include "egt/report.hpp"
#include "egt/svg.hpp"
#include "test_support.hpp"

namespace egt {
namespace {

using nlohmann::json;

TEST(ParameterJson, RoundTripIsBitExact) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 500; ++i) {
    ParameterFile file{testing::RandomParams(rng), testing::RandomState(rng)};
    const ParameterFile back = ParseParameterJson(ToParameterJson(file));
    EXPECT_EQ(back.params, file.params);
    ASSERT_TRUE(back.initial.has_value());
    EXPECT_EQ(*back.initial, *file.initial);
  }
}

TEST(ParameterJson, RejectsUnknownKeysAndNamesBadField) {
  const std::string base = ToParameterJson({testing::Fig2aParams(), std::nullopt});
  json doc = json::parse(base);
  doc["c4"] = 1;
  EXPECT_THROW(ParseParameterJson(doc.dump()), Error);

  doc = json::parse(base);
  doc["alpha"] = 2;
  try {
    ParseParameterJson(doc.dump());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlphaOutOfRange);
    EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
  }

  doc = json::parse(base);
  doc.erase("f");
  try {
    ParseParameterJson(doc.dump());
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("f"), std::string::npos);
  }

  doc = json::parse(base);
  doc["v1"] = "five";
  EXPECT_THROW(ParseParameterJson(doc.dump()), Error);
  EXPECT_THROW(ParseParameterJson("{not json"), Error);

  doc = json::parse(base);
  doc["initial"] = {0.5, 0.5};
  EXPECT_THROW(ParseParameterJson(doc.dump()), Error);
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(0.0), "0");
  EXPECT_EQ(FormatNumber(std::nan("")), "nan");
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    EXPECT_EQ(std::stod(FormatNumber(v)), v);
  }
}

TEST(TrajectoryCsv, HeaderRowsAndTrailer) {
  Trajectory t;
  t.samples = {{0.0, {0.5, 0.5, 0.5}}, {0.01, {0.25, 0.5, 1}}};
  EXPECT_EQ(TrajectoryCsv(t), "t,x,y,z\n0,0.5,0.5,0.5\n0.01,0.25,0.5,1\n");
  const std::string with = TrajectoryCsv(t, "error: diverged");
  EXPECT_NE(with.find("\n# error: diverged\n"), std::string::npos);
}

TEST(HeatmapCsv, GridValuesInFirstRowAndColumn) {
  HeatmapResult h;
  h.v1_grid = {1, 2};
  h.c2_grid = {3, 4, 5};
  h.cells = {{1, 0.5, 0}, {1, 1, 0}};
  std::istringstream in(HeatmapCsv(h));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.substr(line.find(',')), ",3,4,5");
  std::getline(in, line);
  EXPECT_EQ(line, "1,1,0.5,0");
}

TEST(ClassificationJson, HasDeclaredFields) {
  const GameParameters g = FindPreset("fig2c")->params;
  const auto result = ClassifyAll(g);
  const json doc = json::parse(ClassificationJson(g, result, "preset:fig2c"));
  ASSERT_EQ(doc["equilibria"].size(), result.equilibria.size());
  int ess = 0;
  for (const auto& e : doc["equilibria"]) {
    EXPECT_EQ(e["coords"].size(), 3u);
    EXPECT_EQ(e["eigenvalues"].size(), 3u);
    EXPECT_TRUE(e["eigenvalues"][0].contains("re"));
    EXPECT_TRUE(e["eigenvalues"][0].contains("im"));
    EXPECT_TRUE(e.contains("conditions"));
    if (e["verdict"] == "ESS") {
      ++ess;
      EXPECT_EQ(e["coords"], json::array({1, 0, 1}));
    }
  }
  EXPECT_EQ(ess, 1);
}

TEST(Manifest, FieldsPresent) {
  RunManifest m{"simulate", "preset:fig2a", {"a.csv"}, kToolVersion, UtcTimestamp()};
  const json doc = json::parse(ManifestJson(m));
  EXPECT_EQ(doc["command"], "simulate");
  EXPECT_EQ(doc["preset_or_file"], "preset:fig2a");
  EXPECT_EQ(doc["outputs"], json::array({"a.csv"}));
  EXPECT_EQ(doc["tool_version"], kToolVersion);
  const std::string ts = doc["timestamp"];
  EXPECT_EQ(ts.size(), 20u);
  EXPECT_EQ(ts.back(), 'Z');
}

TEST(Svg, ChartsAreWellFormed) {
  svg::LineChart chart;
  chart.title = "a < b & c";
  chart.series = {{"x & y", {0, 0.5, 1}, {0, 1, 0.5}}};
  std::string why;
  EXPECT_TRUE(testing::WellFormedSvg(svg::RenderLineChart(chart), &why)) << why;

  svg::Heatmap map;
  map.column_values = {3, 4};
  map.row_values = {1, 2};
  map.cells = {{0, std::nan("")}, {1, 0.5}};
  EXPECT_TRUE(testing::WellFormedSvg(svg::RenderHeatmap(map), &why)) << why;

  svg::Bundle3D bundle;
  bundle.paths = {{"p", {{0.5, 0.5, 0.5}, {1, 1, 1}}}};
  EXPECT_TRUE(testing::WellFormedSvg(svg::RenderIsometricBundle(bundle), &why)) << why;
}

TEST(Svg, CheckerRejectsBrokenDocuments) {
  EXPECT_FALSE(testing::WellFormedSvg("<svg><g></svg>"));
  EXPECT_FALSE(testing::WellFormedSvg("<svg><image href=\"http://x\"/></svg>"));
  EXPECT_FALSE(testing::WellFormedSvg("<svg>a & b</svg>"));
  EXPECT_TRUE(testing::WellFormedSvg("<?xml version=\"1.0\"?><svg><g/></svg>"));
}

TEST(WriteTextFile, CreatesDirectories) {
  const auto dir = std::filesystem::temp_directory_path() / "egt_report_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  WriteTextFile(dir / "x.txt", "hello");
  std::ifstream in(dir / "x.txt");
  std::string content;
  std::getline(in, content);
  EXPECT_EQ(content, "hello");
  std::filesystem::remove_all(dir.parent_path());
}

}  // namespace
}  // namespace egt
