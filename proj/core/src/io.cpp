#include "wavetraj/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace wavetraj {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void require_samples(const Trajectory& t) {
  if (t.samples.empty()) fail(ErrorCode::EmptyTrajectory, "trajectory has no samples");
}

}  // namespace

std::string export_csv(const Trajectory& trajectory) {
  require_samples(trajectory);
  std::string out = "t,x,z,u,v\n";
  for (const auto& s : trajectory.samples) {
    out += fmt12(s.t);
    out += ',';
    out += fmt12(s.x);
    out += ',';
    out += fmt12(s.z);
    out += ',';
    out += fmt12(s.u);
    out += ',';
    out += fmt12(s.v);
    out += '\n';
  }
  return out;
}

std::string export_json(const Trajectory& trajectory) {
  require_samples(trajectory);
  json meta;
  meta["config"] = {{"c0", trajectory.config.c0},
                    {"omega0", trajectory.config.omega0},
                    {"g", trajectory.config.g},
                    {"h0", trajectory.config.h0},
                    {"shear", trajectory.config.shear}};
  meta["init"] = {{"x0", trajectory.init.x0}, {"z0", trajectory.init.z0}};
  meta["class"] = trajectory.klass ? json(to_string(*trajectory.klass)) : json(nullptr);
  meta["period"] = trajectory.period ? json(*trajectory.period) : json(nullptr);
  meta["drift"] = trajectory.drift ? json(*trajectory.drift) : json(nullptr);
  meta["label"] = trajectory.label;

  json samples = json::array();
  for (const auto& s : trajectory.samples)
    samples.push_back(json::array({s.t, s.x, s.z, s.u, s.v}));

  json root;
  root["meta"] = meta;
  root["samples"] = samples;
  return root.dump(1);
}

Trajectory import_json(const std::string& text) {
  json root = json::parse(text);
  Trajectory t;
  const json& meta = root.at("meta");
  const json& cfg = meta.at("config");
  t.config.c0 = cfg.at("c0").get<double>();
  t.config.omega0 = cfg.at("omega0").get<double>();
  t.config.g = cfg.at("g").get<double>();
  t.config.h0 = cfg.at("h0").get<double>();
  t.config.shear = cfg.at("shear").get<double>();
  t.init.x0 = meta.at("init").at("x0").get<double>();
  t.init.z0 = meta.at("init").at("z0").get<double>();
  if (!meta.at("class").is_null())
    t.klass = trajectory_class_from_string(meta.at("class").get<std::string>());
  if (!meta.at("period").is_null()) t.period = meta.at("period").get<double>();
  if (!meta.at("drift").is_null()) t.drift = meta.at("drift").get<double>();
  t.label = meta.at("label").get<std::string>();
  for (const json& row : root.at("samples")) {
    TrajectorySample s;
    s.t = row.at(0).get<double>();
    s.x = row.at(1).get<double>();
    s.z = row.at(2).get<double>();
    s.u = row.at(3).get<double>();
    s.v = row.at(4).get<double>();
    t.samples.push_back(s);
  }
  return t;
}

std::string export_svg(const Trajectory& trajectory) {
  require_samples(trajectory);
  double xMin = trajectory.samples.front().x, xMax = xMin;
  double zMin = trajectory.samples.front().z, zMax = zMin;
  for (const auto& s : trajectory.samples) {
    xMin = std::min(xMin, s.x);
    xMax = std::max(xMax, s.x);
    zMin = std::min(zMin, s.z);
    zMax = std::max(zMax, s.z);
  }
  double xPad = 0.05 * (xMax - xMin), zPad = 0.05 * (zMax - zMin);
  if (xPad == 0.0) xPad = 0.5;
  if (zPad == 0.0) zPad = 0.5;
  xMin -= xPad;
  xMax += xPad;
  zMin -= zPad;
  zMax += zPad;

  constexpr double kW = 800.0, kH = 500.0;
  const double sx = kW / (xMax - xMin);
  const double sz = kH / (zMax - zMin);

  std::string points;
  points.reserve(trajectory.samples.size() * 16);
  char buf[64];
  for (const auto& s : trajectory.samples) {
    const double px = (s.x - xMin) * sx;
    const double py = kH - (s.z - zMin) * sz;  // z axis points up
    std::snprintf(buf, sizeof(buf), "%.6g,%.6g ", px, py);
    points += buf;
  }
  if (!points.empty()) points.pop_back();

  const std::string label =
      trajectory.klass ? std::string(to_string(*trajectory.klass)) : std::string("unclassified");
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  svg += "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"" +
         points + "\"/>\n";
  svg += "  <text x=\"12\" y=\"20\" font-family=\"monospace\" font-size=\"14\">" + label +
         "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace wavetraj
