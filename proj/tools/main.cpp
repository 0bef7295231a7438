// wavetraj: particle paths beneath small-amplitude shallow-water waves in
// irrotational and constant-vorticity flows.
//
// Subcommands:
//   classify   shape class + analysis constants for one parameter set (JSON)
//   trace      sample one trajectory to CSV / JSON / SVG
//   portrait   class matrix over a (c0, shear) grid
//   selftest   run the library invariant sweep

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wavetraj/classifier.hpp"
#include "wavetraj/io.hpp"
#include "wavetraj/irrotational.hpp"
#include "wavetraj/oracle.hpp"
#include "wavetraj/selftest.hpp"
#include "wavetraj/vorticity.hpp"

namespace {

using nlohmann::json;
using namespace wavetraj;

constexpr int kExitOk = 0;
constexpr int kExitArgument = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegeneratePhase:
    case ErrorCode::DegenerateConstant:
    case ErrorCode::BranchBoundary:
    case ErrorCode::ModulusOutOfRange:
    case ErrorCode::SpanTooShort:
    case ErrorCode::EmptyTrajectory:
      return kExitArgument;
    default:
      return kExitNumerical;
  }
}

struct FlowOptions {
  double c0 = 0.0;
  double x0 = 0.5;
  double z0 = 0.5;
  double shear = 0.0;
  double omega0 = 0.0;
  double g = 9.81;
  double h0 = 1.0;
  bool shearSet = false;
  bool physicalSet = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--c0", c0, "underlying current strength (dimensionless)");
    cmd.add_option("--x0", x0, "initial abscissa (dimensionless)");
    cmd.add_option("--z0", z0, "initial height, in (0, 1]");
    auto* sh = cmd.add_option("--shear", shear, "dimensionless shear coefficient");
    auto* om = cmd.add_option("--omega0", omega0, "vorticity [1/s]");
    auto* gg = cmd.add_option("--g", g, "gravity [m/s^2]");
    auto* hh = cmd.add_option("--h0", h0, "undisturbed depth [m]");
    cmd.callback([this, sh, om, gg, hh]() {
      shearSet = sh->count() > 0;
      physicalSet = om->count() > 0 || gg->count() > 0 || hh->count() > 0;
    });
  }

  FlowConfig config() const {
    if (shearSet && physicalSet)
      fail(ErrorCode::InvalidArgument,
           "--shear and --omega0/--g/--h0 are alternative ways to give the vorticity; "
           "use one of them");
    if (shearSet) return FlowConfig::with_shear(c0, shear, g, h0);
    return FlowConfig::physical(c0, omega0, g, h0);
  }

  ParticleState init() const { return {x0, z0}; }
};

json classification_json(const FlowConfig& config, const ParticleState& init) {
  json out;
  if (!config.rotational()) {
    const auto cls = classify_irrotational(config.c0);
    cot_pi(init.x0);  // same degenerate-phase contract as the rotational path
    out["class"] = to_string(cls.klass);
    out["subCase"] = "irrotational";
    out["C"] = nullptr;
    out["Delta"] = nullptr;
    out["W1"] = nullptr;
    out["W2"] = nullptr;
    out["branch"] = nullptr;
    out["conditionMet"] = nullptr;
    out["boundary"] = cls.boundary;
    out["empiricalClass"] = nullptr;
    return out;
  }
  const Classification result = classify(config, init);
  out["class"] = to_string(result.klass);
  out["subCase"] = result.analysis.subCase;
  out["C"] = result.analysis.C;
  out["Delta"] = result.analysis.Delta;
  out["W1"] = result.analysis.W1 ? json(*result.analysis.W1) : json(nullptr);
  out["W2"] = result.analysis.W2 ? json(*result.analysis.W2) : json(nullptr);
  out["branch"] = result.analysis.branchSign;
  out["conditionMet"] = result.analysis.conditionMet;
  out["boundary"] = result.analysis.boundary;
  out["empiricalClass"] =
      result.empirical ? json(to_string(result.empirical->klass)) : json(nullptr);
  return out;
}

/// One trace job: flow, initial data, horizon/step, and the output selection.
struct RunSpec {
  FlowConfig config;
  ParticleState init;
  double tMax = 5.0;
  double dt = 1e-4;
  std::string format = "csv";
  std::string outPath;  // empty = stdout
};

Trajectory run_trace(const RunSpec& spec) {
  const int nSamples = static_cast<int>(std::lround(spec.tMax / spec.dt)) + 1;
  if (nSamples < 2) fail(ErrorCode::InvalidArgument, "t-max must cover at least one step");
  const FlowConfig& config = spec.config;
  if (!config.rotational()) {
    const double c0 = config.c0;
    if (c0 == 0.0) return trajectory_zero_current(spec.init, spec.tMax, nSamples);
    if (c0 > 0.0 && c0 <= 2.0)
      return trajectory_inside_band(config, spec.init, spec.tMax, nSamples);
    return trajectory_outside_band(config, spec.init, spec.tMax, nSamples);
  }
  Trajectory traj = integrate_orbit(config, spec.init, spec.tMax, spec.dt);
  const Classification cls = classify(config, spec.init, /*resolveFallback=*/false);
  traj.klass = cls.klass;
  traj.label = cls.analysis.subCase;
  if (cls.analysis.conditionMet) {
    const FirstIntegral fi = first_integral(config, spec.init);
    const double T = orbit_period(fi, config);
    traj.period = T;
    if (traj.samples.back().t >= T) {
      traj.drift = drift_per_period(traj, T);
      if (std::abs(*traj.drift) < 1e-9) traj.label += "; closed-orbit candidate";
    }
  }
  return traj;
}

void write_output(const std::string& payload, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(outPath, std::ios::binary);
  if (!file) fail(ErrorCode::InvalidArgument, "cannot open output path " + outPath);
  file << payload;
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto p1 = text.find(':');
  const auto p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    fail(ErrorCode::InvalidArgument, "range must be A:B:N, got " + text);
  try {
    r.lo = std::stod(text.substr(0, p1));
    r.hi = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
    r.n = std::stoi(text.substr(p2 + 1));
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "range must be A:B:N, got " + text);
  }
  if (r.n < 1) fail(ErrorCode::InvalidArgument, "range count must be >= 1");
  return r;
}

std::vector<double> range_values(const Range& r) {
  std::vector<double> v(static_cast<std::size_t>(r.n));
  for (int i = 0; i < r.n; ++i)
    v[static_cast<std::size_t>(i)] =
        r.n == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / static_cast<double>(r.n - 1);
  return v;
}

int run_portrait(const Range& c0Range, const Range& shearRange, const ParticleState& init,
                 const std::string& outDir) {
  const auto c0s = range_values(c0Range);
  const auto shears = range_values(shearRange);
  if (c0s.size() * shears.size() > 10000)
    fail(ErrorCode::InvalidArgument, "portrait grid is capped at 10^4 cells");

  std::vector<std::vector<std::string>> cells(shears.size(),
                                              std::vector<std::string>(c0s.size()));
  const auto classifyRow = [&](std::size_t row) {
    for (std::size_t col = 0; col < c0s.size(); ++col) {
      const double shear = shears[row];
      const double c0 = c0s[col];
      try {
        if (shear == 0.0) {
          cells[row][col] = to_string(classify_irrotational(c0).klass);
        } else {
          const FlowConfig cfg = FlowConfig::with_shear(c0, shear);
          cells[row][col] =
              to_string(classify(cfg, init, /*resolveFallback=*/false).klass);
        }
      } catch (const Error& e) {
        cells[row][col] = to_string(e.code());
      }
    }
  };
  // Cells are pure; rows run concurrently, assembly stays ordered.
  std::vector<std::future<void>> jobs;
  jobs.reserve(shears.size());
  for (std::size_t row = 0; row < shears.size(); ++row)
    jobs.push_back(std::async(std::launch::async, classifyRow, row));
  for (auto& j : jobs) j.get();

  std::filesystem::create_directories(outDir);
  const std::string path = outDir + "/portrait.csv";
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::InvalidArgument, "cannot open output path " + path);
  char buf[32];
  file << "shear\\c0";
  for (double c0 : c0s) {
    std::snprintf(buf, sizeof(buf), "%.12g", c0);
    file << ',' << buf;
  }
  file << '\n';
  for (std::size_t row = 0; row < shears.size(); ++row) {
    std::snprintf(buf, sizeof(buf), "%.12g", shears[row]);
    file << buf;
    for (const auto& cell : cells[row]) file << ',' << cell;
    file << '\n';
  }
  std::cerr << "portrait written to " << path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"particle trajectories beneath linearized shallow-water waves"};
  app.require_subcommand(1);

  FlowOptions flowClassify, flowTrace;

  auto* cmdClassify =
      app.add_subcommand("classify", "print the shape class and analysis constants as JSON");
  flowClassify.add_to(*cmdClassify);

  auto* cmdTrace = app.add_subcommand("trace", "sample one trajectory");
  flowTrace.add_to(*cmdTrace);
  double tMax = 5.0, dt = 1e-4;
  std::string format = "csv", outPath;
  cmdTrace->add_option("--t-max", tMax, "time horizon");
  cmdTrace->add_option("--dt", dt, "sample step (also the integrator step)");
  cmdTrace->add_option("--format", format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  cmdTrace->add_option("--out", outPath, "output file (stdout when omitted)");

  auto* cmdPortrait =
      app.add_subcommand("portrait", "classification matrix over a parameter grid");
  std::string c0RangeText, shearRangeText, portraitDir;
  double px0 = 0.5, pz0 = 0.5;
  cmdPortrait->add_option("--c0-range", c0RangeText, "current sweep A:B:N")->required();
  cmdPortrait->add_option("--shear-range", shearRangeText, "shear sweep A:B:N")->required();
  cmdPortrait->add_option("--x0", px0, "initial abscissa");
  cmdPortrait->add_option("--z0", pz0, "initial height");
  cmdPortrait->add_option("--out", portraitDir, "output directory")->required();

  auto* cmdSelftest = app.add_subcommand("selftest", "run the library invariant sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgument;
  }

  try {
    if (cmdClassify->parsed()) {
      const json out = classification_json(flowClassify.config(), flowClassify.init());
      std::cout << out.dump() << "\n";
      return kExitOk;
    }
    if (cmdTrace->parsed()) {
      const RunSpec spec{flowTrace.config(), flowTrace.init(), tMax, dt, format, outPath};
      const Trajectory traj = run_trace(spec);
      if (spec.format == "csv")
        write_output(export_csv(traj), spec.outPath);
      else if (spec.format == "json")
        write_output(export_json(traj), spec.outPath);
      else
        write_output(export_svg(traj), spec.outPath);
      return kExitOk;
    }
    if (cmdPortrait->parsed())
      return run_portrait(parse_range(c0RangeText), parse_range(shearRangeText), {px0, pz0},
                          portraitDir);
    if (cmdSelftest->parsed()) {
      bool allPassed = true;
      for (const auto& check : run_selftest()) {
        std::cout << (check.passed ? "[ok]   " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << "\n";
        allPassed = allPassed && check.passed;
      }
      return allPassed ? kExitOk : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitArgument;
}
