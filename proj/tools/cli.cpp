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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include "egt/dynamics.hpp"
#include "egt/error.hpp"
#include "egt/experiments.hpp"
#include "egt/report.hpp"
#include "egt/stability.hpp"
#include "egt/svg.hpp"

namespace egt::cli {
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string preset;
  std::string params_file;
  std::string out_dir;
  std::string initial;
  double dt = 0.01;
  double t_max = 50.0;
  std::size_t stride = 1;
  bool svg = false;
  bool realistic = false;
  unsigned threads = 0;
  // sweep-specific
  std::string vary;
  std::string values;
  std::string alphas;
  std::optional<double> alpha;
  std::string v1_grid;
  std::string c2_grid;
  // reproduce
  std::string figure;
};

struct Source {
  GameParameters params;
  PopulationState initial{0.5, 0.5, 0.5};
  std::string provenance;
};

[[noreturn]] void BadInput(const std::string& message) {
  throw Error(ErrorCode::kInvalidInput, message);
}

double ParseDouble(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    BadInput("not a number: '" + text + "'");
  }
  if (used != text.size()) BadInput("not a number: '" + text + "'");
  return value;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

// "lo:hi:n" or a comma-separated list.
std::vector<double> ParseGrid(const std::string& text, const std::string& what) {
  if (text.empty()) BadInput(what + " grid is empty");
  if (text.find(':') != std::string::npos) {
    const auto parts = Split(text, ':');
    if (parts.size() != 3) BadInput(what + " range must look like lo:hi:count");
    const double count = ParseDouble(parts[2]);
    if (count < 1 || count != std::floor(count) || count > 1e6) {
      BadInput(what + " range count must be a positive integer");
    }
    return Linspace(ParseDouble(parts[0]), ParseDouble(parts[1]),
                    static_cast<std::size_t>(count));
  }
  std::vector<double> values;
  for (const auto& part : Split(text, ',')) values.push_back(ParseDouble(part));
  return values;
}

PopulationState ParseState(const std::string& text) {
  const auto parts = Split(text, ',');
  if (parts.size() != 3) BadInput("initial state must be x,y,z");
  return ValidateState({ParseDouble(parts[0]), ParseDouble(parts[1]), ParseDouble(parts[2])});
}

Param ParseVary(const std::string& name) {
  const auto param = ParseParamName(name);
  if (!param || !IsSweepParam(*param)) BadInput("--vary must be one of c2, v1, f");
  return *param;
}

Source ResolveSource(const Options& opts) {
  if (!opts.preset.empty() && !opts.params_file.empty()) {
    BadInput("use either --preset or --params, not both");
  }
  Source source;
  if (!opts.params_file.empty()) {
    ParameterFile file = LoadParameterFile(opts.params_file);
    source.params = file.params;
    if (file.initial) source.initial = *file.initial;
    source.provenance = "file:" + opts.params_file;
  } else {
    const std::string name = opts.preset.empty() ? "fig2a" : opts.preset;
    const auto preset = FindPreset(name);
    if (!preset) BadInput("unknown preset '" + name + "'");
    source.params = preset->params;
    source.initial = preset->initial;
    source.provenance = "preset:" + name;
  }
  if (!opts.initial.empty()) source.initial = ParseState(opts.initial);
  source.params = ValidateParams(source.params, opts.realistic);
  return source;
}

IntegratorConfig ConfigFrom(const Options& opts) {
  IntegratorConfig config;
  config.dt = opts.dt;
  config.t_max = opts.t_max;
  config.sample_stride = opts.stride;
  ValidateConfig(config);
  return config;
}

fs::path ResolveOutDir(const Options& opts) {
  if (!opts.out_dir.empty()) return opts.out_dir;
  if (const char* env = std::getenv("EGT_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return "egt_out";
}

// Collects everything written into one directory and closes it with a
// manifest listing those files relative to the directory.
class OutputSet {
 public:
  OutputSet(fs::path dir, std::string command, std::string provenance)
      : dir_(std::move(dir)) {
    manifest_.command = std::move(command);
    manifest_.preset_or_file = std::move(provenance);
  }

  void Write(const std::string& name, const std::string& content) {
    WriteTextFile(dir_ / name, content);
    manifest_.outputs.push_back(name);
  }

  void Finish() {
    manifest_.timestamp = UtcTimestamp();
    WriteTextFile(dir_ / "manifest.json", ManifestJson(manifest_));
  }

  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
  RunManifest manifest_;
};

std::string TrajectorySvg(const Trajectory& trajectory, const std::string& title) {
  svg::LineChart chart;
  chart.title = title;
  chart.x_label = "t";
  chart.y_label = "cooperation ratio";
  chart.x_max = trajectory.samples.empty() ? 1.0 : trajectory.samples.back().t;
  svg::LineSeries xs{"x (providers)", {}, {}};
  svg::LineSeries ys{"y (users)", {}, {}};
  svg::LineSeries zs{"z (regulators)", {}, {}};
  for (const TrajectorySample& s : trajectory.samples) {
    for (auto* series : {&xs, &ys, &zs}) series->xs.push_back(s.t);
    xs.ys.push_back(s.state.x);
    ys.ys.push_back(s.state.y);
    zs.ys.push_back(s.state.z);
  }
  chart.series = {xs, ys, zs};
  return svg::RenderLineChart(chart);
}

std::string SweepSvg(const SweepResult& sweep, const std::string& title) {
  svg::LineChart chart;
  chart.title = title;
  chart.x_label = "alpha";
  chart.y_label = "final y";
  chart.x_min = sweep.alpha_grid.front();
  chart.x_max = sweep.alpha_grid.back();
  for (const SweepSeries& series : sweep.series) {
    chart.series.push_back({series.label, sweep.alpha_grid, series.final_y});
  }
  return svg::RenderLineChart(chart);
}

std::string HeatmapSvg(const HeatmapResult& heatmap, const std::string& title) {
  svg::Heatmap map;
  map.title = title;
  map.column_label = "C2";
  map.row_label = "V1";
  map.column_values = heatmap.c2_grid;
  map.row_values = heatmap.v1_grid;
  map.cells = heatmap.cells;
  return svg::RenderHeatmap(map);
}

std::string BundleSvg(const std::vector<Trajectory>& bundle, Param vary,
                      const std::string& title) {
  svg::Bundle3D chart;
  chart.title = title;
  for (const Trajectory& trajectory : bundle) {
    svg::Path3D path;
    std::ostringstream label;
    label << "alpha=" << trajectory.params.alpha << ", " << ParamName(vary) << "="
          << GetParam(trajectory.params, vary);
    path.label = label.str();
    for (const TrajectorySample& s : trajectory.samples) {
      path.points.push_back({s.state.x, s.state.y, s.state.z});
    }
    chart.paths.push_back(std::move(path));
  }
  return svg::RenderIsometricBundle(chart);
}

std::string ParamsJson(const Source& source) {
  return ToParameterJson({source.params, source.initial});
}

std::string ValueTag(double v) {
  std::string tag = FormatNumber(v);
  for (char& c : tag) {
    if (c == '-') c = 'm';
  }
  return tag;
}

// --- commands ---------------------------------------------------------------

int DoClassify(const Options& opts, bool write_files, std::ostream& out) {
  const Source source = ResolveSource(opts);
  const Classification result = ClassifyAll(source.params);
  const std::string report = ClassificationJson(source.params, result, source.provenance);
  out << report;
  if (write_files) {
    OutputSet files(ResolveOutDir(opts), "classify", source.provenance);
    files.Write("classification.json", report);
    files.Finish();
  }
  return result.warning ? kExitDegenerate : kExitOk;
}

int WriteTrajectoryOutputs(OutputSet& files, const Source& source, const IntegratorConfig& config,
                           bool svg, const std::string& title, std::ostream& err) {
  std::optional<StepDivergedError> failure;
  const Trajectory trajectory =
      IntegrateCapturingFailure(source.params, source.initial, config, failure);
  files.Write("trajectory.csv",
              TrajectoryCsv(trajectory, failure ? std::string("error: ") + failure->what() : ""));
  if (svg) files.Write("trajectory.svg", TrajectorySvg(trajectory, title));
  if (failure) {
    err << "error: " << failure->what() << "\n";
    return kExitDiverged;
  }
  return kExitOk;
}

int DoSimulate(const Options& opts, std::ostream& err) {
  const Source source = ResolveSource(opts);
  const IntegratorConfig config = ConfigFrom(opts);
  OutputSet files(ResolveOutDir(opts), "simulate", source.provenance);
  files.Write("params.json", ParamsJson(source));
  const int code = WriteTrajectoryOutputs(files, source, config, opts.svg,
                                          "Evolutionary trajectories", err);
  files.Finish();
  return code;
}

int FinishSweep(OutputSet& files, const std::vector<std::string>& failures, std::ostream& err) {
  files.Finish();
  for (const auto& failure : failures) err << "error: " << failure << "\n";
  return failures.empty() ? kExitOk : kExitDiverged;
}

int RunAlphaSweep(OutputSet& files, const GameParameters& base, Param vary,
                  const std::vector<double>& values, const std::vector<double>& alphas,
                  const PopulationState& initial, const IntegratorConfig& config,
                  unsigned threads, const std::string& title, std::ostream& err) {
  SweepOptions options;
  options.threads = threads;
  options.nan_on_failure = true;
  const SweepResult sweep = SweepAlpha(base, alphas, vary, values, initial, config, options);
  files.Write("alpha_sweep.csv", SweepCsv(sweep));
  files.Write("alpha_sweep.svg", SweepSvg(sweep, title));
  return FinishSweep(files, sweep.failures, err);
}

int RunHeatmap(OutputSet& files, const GameParameters& base, const std::vector<double>& v1,
               const std::vector<double>& c2, const PopulationState& initial,
               const IntegratorConfig& config, unsigned threads, const std::string& title,
               std::ostream& err) {
  SweepOptions options;
  options.threads = threads;
  options.nan_on_failure = true;
  const HeatmapResult heatmap = HeatmapV1C2(base, v1, c2, initial, config, options);
  files.Write("heatmap.csv", HeatmapCsv(heatmap));
  files.Write("heatmap.svg", HeatmapSvg(heatmap, title));
  return FinishSweep(files, heatmap.failures, err);
}

// Writes one CSV per trajectory plus one SVG for the bundle. Trajectories
// that diverge keep their partial samples and set a nonzero exit code.
int RunTraces(OutputSet& files, const std::string& prefix, const GameParameters& base,
              Param vary, const std::vector<double>& values, const std::vector<double>& alphas,
              const PopulationState& initial, const IntegratorConfig& config,
              const std::string& title, std::ostream& err) {
  int code = kExitOk;
  std::vector<Trajectory> bundle;
  for (double alpha : alphas) {
    for (double value : values) {
      GameParameters params = base;
      params.alpha = alpha;
      SetParam(params, vary, value);
      ValidateParams(params);
      std::optional<StepDivergedError> failure;
      Trajectory trajectory = IntegrateCapturingFailure(params, initial, config, failure);
      const std::string name = prefix + "alpha_" + ValueTag(alpha) + "_" +
                               std::string(ParamName(vary)) + "_" + ValueTag(value) + ".csv";
      files.Write(name,
                  TrajectoryCsv(trajectory, failure ? std::string("error: ") + failure->what() : ""));
      if (failure) {
        err << "error: " << failure->what() << "\n";
        code = kExitDiverged;
      }
      bundle.push_back(std::move(trajectory));
    }
  }
  files.Write(prefix + "traces.svg", BundleSvg(bundle, vary, title));
  return code;
}

int DoSweep(const std::string& kind, const Options& opts, std::ostream& err) {
  const IntegratorConfig config = ConfigFrom(opts);
  const fs::path dir = ResolveOutDir(opts);

  if (kind == "alpha") {
    if (auto setup = FindAlphaSweepSetup(opts.preset); setup && opts.params_file.empty()) {
      OutputSet files(dir, "sweep alpha", "preset:" + setup->id);
      auto values = opts.values.empty() ? setup->vary_values : ParseGrid(opts.values, "values");
      auto alphas = opts.alphas.empty() ? setup->alpha_grid : ParseGrid(opts.alphas, "alpha");
      PopulationState initial = opts.initial.empty() ? PopulationState{0.5, 0.5, 0.5}
                                                     : ParseState(opts.initial);
      return RunAlphaSweep(files, setup->base, setup->vary, values, alphas, initial, config,
                           opts.threads, "Final y against alpha (" + setup->id + ")", err);
    }
    const Source source = ResolveSource(opts);
    if (opts.vary.empty() || opts.values.empty()) {
      BadInput("sweep alpha needs --vary and --values unless --preset is fig3a, fig3b or fig3c");
    }
    OutputSet files(dir, "sweep alpha", source.provenance);
    auto alphas = opts.alphas.empty() ? Linspace(0.0, 1.0, 101) : ParseGrid(opts.alphas, "alpha");
    return RunAlphaSweep(files, source.params, ParseVary(opts.vary),
                         ParseGrid(opts.values, "values"), alphas, source.initial, config,
                         opts.threads, "Final y against alpha", err);
  }

  if (kind == "heatmap") {
    GameParameters base;
    PopulationState initial{0.5, 0.5, 0.5};
    std::string provenance;
    std::vector<double> v1 = Linspace(1.0, 5.0, 41);
    std::vector<double> c2 = Linspace(3.0, 7.0, 41);
    if (auto setup = FindHeatmapSetup(opts.preset); setup && opts.params_file.empty()) {
      base = setup->base;
      provenance = "preset:" + setup->id;
    } else {
      Options resolved = opts;
      if (resolved.preset == "fig4") resolved.preset = "fig4-base";
      const Source source = ResolveSource(resolved);
      base = source.params;
      initial = source.initial;
      provenance = source.provenance;
    }
    if (opts.alpha) base.alpha = *opts.alpha;
    if (!opts.initial.empty()) initial = ParseState(opts.initial);
    if (!opts.v1_grid.empty()) v1 = ParseGrid(opts.v1_grid, "v1");
    if (!opts.c2_grid.empty()) c2 = ParseGrid(opts.c2_grid, "c2");
    ValidateParams(base);
    OutputSet files(dir, "sweep heatmap", provenance);
    std::ostringstream title;
    title << "Final y over V1 x C2 (alpha=" << base.alpha << ")";
    return RunHeatmap(files, base, v1, c2, initial, config, opts.threads, title.str(), err);
  }

  if (kind == "traces") {
    const std::vector<double> default_alphas = {0.30, 0.60, 0.90};
    for (const TraceSetup& setup : Fig5TraceSetups()) {
      if (setup.id != opts.preset || !opts.params_file.empty()) continue;
      OutputSet files(dir, "sweep traces", "preset:" + setup.id);
      auto values = opts.values.empty() ? setup.vary_values : ParseGrid(opts.values, "values");
      auto alphas = opts.alphas.empty() ? setup.alpha_values : ParseGrid(opts.alphas, "alpha");
      PopulationState initial = opts.initial.empty() ? PopulationState{0.5, 0.5, 0.5}
                                                     : ParseState(opts.initial);
      const int code = RunTraces(files, "", setup.base, setup.vary, values, alphas, initial,
                                 config, "Trajectories in (x, y, z) (" + setup.id + ")", err);
      files.Finish();
      return code;
    }
    Options resolved = opts;
    if (resolved.preset == "fig5") resolved.preset = "fig5-base";
    const Source source = ResolveSource(resolved);
    if (opts.vary.empty() || opts.values.empty()) {
      BadInput("sweep traces needs --vary and --values unless --preset is fig5-c2, fig5-v1 or fig5-f");
    }
    OutputSet files(dir, "sweep traces", source.provenance);
    auto alphas = opts.alphas.empty() ? default_alphas : ParseGrid(opts.alphas, "alpha");
    const int code = RunTraces(files, "", source.params, ParseVary(opts.vary),
                               ParseGrid(opts.values, "values"), alphas, source.initial, config,
                               "Trajectories in (x, y, z)", err);
    files.Finish();
    return code;
  }
  BadInput("unknown sweep kind '" + kind + "'");
}

int DoReproduce(const Options& opts, std::ostream& err) {
  const std::string& id = opts.figure;
  const auto& known = ReproducibleFigures();
  if (std::find(known.begin(), known.end(), id) == known.end()) {
    BadInput("unknown figure id '" + id + "'");
  }
  const IntegratorConfig config = ConfigFrom(opts);
  const fs::path dir = ResolveOutDir(opts) / id;
  const PopulationState initial{0.5, 0.5, 0.5};

  if (id.rfind("fig2", 0) == 0) {
    const Preset preset = *FindPreset(id);
    const Source source{preset.params, preset.initial, "preset:" + id};
    OutputSet files(dir, "reproduce " + id, source.provenance);
    files.Write("params.json", ParamsJson(source));
    const Classification result = ClassifyAll(source.params);
    files.Write("classification.json",
                ClassificationJson(source.params, result, source.provenance));
    const int code = WriteTrajectoryOutputs(files, source, config, true,
                                            "Evolutionary trajectories (" + id + ")", err);
    files.Finish();
    return code;
  }
  if (id.rfind("fig3", 0) == 0) {
    const AlphaSweepSetup setup = *FindAlphaSweepSetup(id);
    OutputSet files(dir, "reproduce " + id, "preset:" + id);
    files.Write("params.json", ToParameterJson({setup.base, initial}));
    return RunAlphaSweep(files, setup.base, setup.vary, setup.vary_values, setup.alpha_grid,
                         initial, config, opts.threads, "Final y against alpha (" + id + ")",
                         err);
  }
  if (id.rfind("fig4", 0) == 0) {
    const HeatmapSetup setup = *FindHeatmapSetup(id);
    OutputSet files(dir, "reproduce " + id, "preset:" + id);
    files.Write("params.json", ToParameterJson({setup.base, initial}));
    std::ostringstream title;
    title << "Final y over V1 x C2 (alpha=" << setup.base.alpha << ")";
    return RunHeatmap(files, setup.base, setup.v1_grid, setup.c2_grid, initial, config,
                      opts.threads, title.str(), err);
  }

  // fig5: nine panels, one per (varied parameter, alpha).
  OutputSet files(dir, "reproduce fig5", "preset:fig5-base");
  files.Write("params.json", ToParameterJson({FindPreset("fig5-base")->params, initial}));
  int code = kExitOk;
  char panel = 'a';
  for (const TraceSetup& setup : Fig5TraceSetups()) {
    for (double alpha : setup.alpha_values) {
      const std::string prefix = std::string("fig5") + panel++ + "_";
      std::ostringstream title;
      title << "Trajectories, alpha=" << alpha << ", varying " << ParamName(setup.vary);
      code = std::max(code, RunTraces(files, prefix, setup.base, setup.vary, setup.vary_values,
                                      {alpha}, initial, config, title.str(), err));
    }
  }
  files.Finish();
  return code;
}

void AddSourceOptions(CLI::App* cmd, Options& opts) {
  cmd->add_option("--preset", opts.preset, "Named parameter preset");
  cmd->add_option("--params", opts.params_file, "Parameter JSON file");
  cmd->add_option("--out", opts.out_dir, "Output directory (default $EGT_OUT_DIR or ./egt_out)");
}

void AddIntegratorOptions(CLI::App* cmd, Options& opts) {
  cmd->add_option("--dt", opts.dt, "Integration step")->capture_default_str();
  cmd->add_option("--t-max", opts.t_max, "Integration horizon")->capture_default_str();
  cmd->add_option("--stride", opts.stride, "Record every k-th step")->capture_default_str();
  cmd->add_option("--initial", opts.initial, "Initial state x,y,z");
  cmd->add_flag("--svg", opts.svg, "Also write an SVG chart");
  cmd->add_option("--threads", opts.threads, "Worker threads for sweeps (0 = all cores)");
}

}  // namespace

const std::vector<std::string>& ReproducibleFigures() {
  static const std::vector<std::string> ids = {"fig2a", "fig2b", "fig2c", "fig2d",
                                               "fig3a", "fig3b", "fig3c", "fig4a",
                                               "fig4b", "fig4c", "fig5"};
  return ids;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Provider / user / regulator evolutionary game: stability analysis and simulation",
               "egt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Options opts;

  auto* classify = app.add_subcommand("classify", "Enumerate and classify all equilibria");
  AddSourceOptions(classify, opts);
  classify->add_flag("--realistic", opts.realistic, "Require c1 > 0 and p > c3");

  auto* simulate = app.add_subcommand("simulate", "Integrate the replicator dynamics");
  AddSourceOptions(simulate, opts);
  AddIntegratorOptions(simulate, opts);
  simulate->add_flag("--realistic", opts.realistic, "Require c1 > 0 and p > c3");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweeps");
  sweep->require_subcommand(1);
  std::string sweep_kind;
  for (const char* kind : {"alpha", "heatmap", "traces"}) {
    auto* sub = sweep->add_subcommand(kind, std::string("Sweep: ") + kind);
    AddSourceOptions(sub, opts);
    AddIntegratorOptions(sub, opts);
    sub->callback([&sweep_kind, kind] { sweep_kind = kind; });
    if (std::string(kind) == "heatmap") {
      sub->add_option("--alpha", opts.alpha, "Data mining capability");
      sub->add_option("--v1", opts.v1_grid, "V1 grid, lo:hi:n or a,b,c");
      sub->add_option("--c2", opts.c2_grid, "C2 grid, lo:hi:n or a,b,c");
    } else {
      sub->add_option("--vary", opts.vary, "Parameter to vary: c2, v1 or f");
      sub->add_option("--values", opts.values, "Values of the varied parameter");
      sub->add_option("--alphas", opts.alphas, "Alpha grid, lo:hi:n or a,b,c");
    }
  }

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate the data and charts of a figure");
  reproduce->add_option("figure", opts.figure, "Figure id: fig2a..fig2d, fig3a..fig3c, fig4a..fig4c, fig5")
      ->required();
  reproduce->add_option("--out", opts.out_dir, "Output root (default $EGT_OUT_DIR or ./egt_out)");
  reproduce->add_option("--dt", opts.dt, "Integration step")->capture_default_str();
  reproduce->add_option("--t-max", opts.t_max, "Integration horizon")->capture_default_str();
  reproduce->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (classify->parsed()) {
      const bool write_files = !opts.out_dir.empty() || std::getenv("EGT_OUT_DIR") != nullptr;
      return DoClassify(opts, write_files, out);
    }
    if (simulate->parsed()) return DoSimulate(opts, err);
    if (sweep->parsed()) return DoSweep(sweep_kind, opts, err);
    if (reproduce->parsed()) return DoReproduce(opts, err);
  } catch (const StepDivergedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::kDegenerateDenominator ? kExitDegenerate : kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace egt::cli
