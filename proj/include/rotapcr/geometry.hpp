#pragma once

#include <cmath>
#include <utility>

#include "rotapcr/constants.hpp"
#include "rotapcr/errors.hpp"

namespace rotapcr {

// Angle between the {111} sidewall and the {100} wafer surface,
// arctan(sqrt 2) = 54.7356 deg. KOH etching fixes it; the field below is
// overridable only so the vertical-wall limit can be exercised.
inline constexpr double koh_sidewall_angle_deg = 54.735610317245346;

/// Anisotropically etched chamber: rectangular mask opening, sloped
/// sidewalls, flat bottom. Dimensions as drawn on the mask.
struct EtchSpec {
  double top_length_mm = 5.4;
  double top_width_mm = 2.4;
  double depth_um = 300.0;
  double wafer_thickness_um = 525.0;
  double sidewall_angle_deg = koh_sidewall_angle_deg;
  double chip_length_mm = 5.8;
  double chip_width_mm = 2.8;
};

inline double sidewall_tangent(const EtchSpec& spec) {
  return std::tan(spec.sidewall_angle_deg * M_PI / 180.0);
}

/// Depth at which the sloped walls of the narrow dimension meet (V-groove).
inline double self_termination_depth_um(const EtchSpec& spec) {
  const double min_dim_mm = std::min(spec.top_length_mm, spec.top_width_mm);
  return min_dim_mm / 2.0 * sidewall_tangent(spec) * 1000.0;
}

inline void validate(const EtchSpec& spec) {
  if (!(spec.top_length_mm > 0.0) || !(spec.top_width_mm > 0.0))
    throw ConfigError("etch spec: top opening must be positive");
  if (!(spec.depth_um > 0.0))
    throw ConfigError("etch spec: depth must be positive");
  if (spec.depth_um > spec.wafer_thickness_um)
    throw ConfigError("etch spec: depth exceeds wafer thickness");
  if (spec.top_length_mm > spec.chip_length_mm ||
      spec.top_width_mm > spec.chip_width_mm)
    throw ConfigError("etch spec: top opening does not fit on the chip");
  if (!(spec.sidewall_angle_deg > 0.0) || spec.sidewall_angle_deg >= 90.0)
    throw ConfigError("etch spec: sidewall angle must lie in (0, 90) deg");
  if (spec.depth_um > self_termination_depth_um(spec))
    throw ConfigError("etch spec: depth beyond self-termination");
}

/// Cavity floor dimensions; each top dimension shrinks by 2*depth/tan(angle).
inline std::pair<double, double> bottom_dims_mm(const EtchSpec& spec) {
  const double shrink_mm = 2.0 * (spec.depth_um / 1000.0) / sidewall_tangent(spec);
  const double length = spec.top_length_mm - shrink_mm;
  const double width = spec.top_width_mm - shrink_mm;
  if (length <= 0.0 || width <= 0.0)
    throw SelfTerminatedEtchError(
        "etch self-terminates before target depth (bottom dimension <= 0)");
  return {length, width};
}

/// Cavity volume in ul (1 mm^3 = 1 ul). The cross-section area is quadratic
/// in depth, so the three-point prismatoid rule integrates it exactly.
inline double cavity_volume_ul(const EtchSpec& spec) {
  if (spec.depth_um == 0.0) return 0.0;
  bottom_dims_mm(spec);  // propagate self-termination
  const double d = spec.depth_um / 1000.0;
  const auto area_at = [&](double z_mm) {
    const double s = 2.0 * z_mm / sidewall_tangent(spec);
    return (spec.top_length_mm - s) * (spec.top_width_mm - s);
  };
  return d / 6.0 * (area_at(0.0) + 4.0 * area_at(d / 2.0) + area_at(d));
}

/// Thermal mass of the chip: solid silicon volume (outer prism minus cavity)
/// times silicon rho*c.
inline double chip_heat_capacity_j_k(const EtchSpec& spec) {
  const double prism_mm3 =
      spec.chip_length_mm * spec.chip_width_mm * (spec.wafer_thickness_um / 1000.0);
  const double solid_mm3 = prism_mm3 - cavity_volume_ul(spec);
  if (solid_mm3 <= 0.0)
    throw GeometryError("cavity volume meets or exceeds chip volume");
  return solid_mm3 * 1e-9 * materials::silicon_density_kg_m3 *
         materials::silicon_specific_heat_j_kg_k;
}

}  // namespace rotapcr
