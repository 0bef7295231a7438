#ifndef WAVETRAJ_IO_HPP
#define WAVETRAJ_IO_HPP

#include <string>

#include "wavetraj/types.hpp"

namespace wavetraj {

/// CSV with the exact header `t,x,z,u,v`, one row per sample, every number
/// printed with 12 significant digits. Deterministic for identical input.
std::string export_csv(const Trajectory& trajectory);

/// JSON object {meta: {config, init, class, period, drift, label},
/// samples: [[t,x,z,u,v], ...]}. Doubles round-trip exactly.
std::string export_json(const Trajectory& trajectory);

/// Rebuilds a trajectory from export_json output.
Trajectory import_json(const std::string& text);

/// A single-polyline SVG of the (x, z) path, viewBox fitted to the data with
/// a 5% margin, z pointing up, plus a text label with the class.
std::string export_svg(const Trajectory& trajectory);

}  // namespace wavetraj

#endif
