#pragma once

#include <array>
#include <cmath>
#include <string_view>
#include <vector>

#include "rotapcr/errors.hpp"

namespace rotapcr {

/// Temperature zones along the trace, in rotation order. Gap marks a dead
/// arc between plates (zero-width by default).
enum class Zone { Denature = 0, Anneal = 1, Extend = 2, Gap = 3 };

inline constexpr std::string_view zone_name(Zone z) {
  switch (z) {
    case Zone::Denature: return "denature";
    case Zone::Anneal: return "anneal";
    case Zone::Extend: return "extend";
    default: return "gap";
  }
}

/// Fractions of one revolution per zone. Stored as two free values plus an
/// optional gap budget; the extend fraction is the remainder, so the sum is
/// 1 by construction.
struct TraceGeometry {
  double f_denature = 0.25;
  double f_anneal = 0.25;
  double gap = 0.0;  // total dead-arc budget, split into three equal arcs

  double f_extend() const { return 1.0 - gap - f_denature - f_anneal; }
};

inline void validate(const TraceGeometry& trace) {
  if (!(trace.f_denature > 0.0) || !(trace.f_anneal > 0.0) ||
      !(trace.f_extend() > 0.0))
    throw ConfigError("trace: every zone fraction must be positive");
  if (trace.gap < 0.0) throw ConfigError("trace: gap fraction must be >= 0");
}

enum class MotionMode { Continuous, Stepped };

/// Full protocol timeline: initial denaturation hold, N revolutions through
/// the three zones, final extension hold.
struct ProtocolSchedule {
  double initial_hold_s = 120.0;  // on the denature plate
  int cycles = 30;
  double rotation_rate_rpm = 1.0;
  TraceGeometry trace;
  double final_hold_s = 240.0;  // on the extend plate
  MotionMode motion = MotionMode::Continuous;

  double period_s() const { return 60.0 / rotation_rate_rpm; }
};

inline void validate(const ProtocolSchedule& s) {
  validate(s.trace);
  if (s.cycles < 0) throw ConfigError("protocol: cycles must be >= 0");
  if (!(s.rotation_rate_rpm > 0.0))
    throw ConfigError("protocol: rotation rate must be positive");
  if (s.initial_hold_s < 0.0 || s.final_hold_s < 0.0)
    throw ConfigError("protocol: hold durations must be >= 0");
}

/// Per-cycle time on each plate: (60/rate) * fraction.
inline std::array<double, 3> residence_times_s(double rate_rpm,
                                               const TraceGeometry& trace) {
  if (!(rate_rpm > 0.0)) throw DomainError("residence_times: rate must be positive");
  const double period = 60.0 / rate_rpm;
  return {period * trace.f_denature, period * trace.f_anneal,
          period * trace.f_extend()};
}

inline double total_time_s(const ProtocolSchedule& s) {
  return s.initial_hold_s + static_cast<double>(s.cycles) * s.period_s() +
         s.final_hold_s;
}

struct CycleWindow {
  int index = 0;
  double start_s = 0.0;
  double end_s = 0.0;
};

inline std::vector<CycleWindow> cycle_boundaries(const ProtocolSchedule& s) {
  std::vector<CycleWindow> windows;
  windows.reserve(static_cast<size_t>(std::max(s.cycles, 0)));
  const double period = s.period_s();
  for (int k = 0; k < s.cycles; ++k) {
    windows.push_back({k, s.initial_hold_s + k * period,
                       s.initial_hold_s + (k + 1) * period});
  }
  return windows;
}

/// Zone occupied at time t. Segments are half-open (a boundary instant
/// belongs to the later segment); t == total_time belongs to the final hold.
/// In stepped motion the chamber rests on the departing plate while a dead
/// arc would be crossed, so gap arcs report the preceding zone.
inline Zone zone_at(const ProtocolSchedule& s, double t_s) {
  const double total = total_time_s(s);
  if (!(t_s >= 0.0) || t_s > total)
    throw DomainError("zone_at: t outside [0, total_time]");
  if (t_s < s.initial_hold_s) return Zone::Denature;
  const double rotation_end = s.initial_hold_s + s.cycles * s.period_s();
  if (t_s >= rotation_end) return Zone::Extend;  // final hold (or t == total)

  double phase = (t_s - s.initial_hold_s) / s.period_s();
  phase -= std::floor(phase);
  const TraceGeometry& tr = s.trace;
  const double g3 = tr.gap / 3.0;
  // Arc order per revolution: denature, gap, anneal, gap, extend, gap.
  const std::array<double, 6> widths = {tr.f_denature, g3, tr.f_anneal,
                                        g3, tr.f_extend(), g3};
  const std::array<Zone, 6> arcs = {Zone::Denature, Zone::Gap, Zone::Anneal,
                                    Zone::Gap, Zone::Extend, Zone::Gap};
  double cum = 0.0;
  for (size_t i = 0; i < widths.size(); ++i) {
    cum += widths[i];
    if (phase < cum) {
      if (arcs[i] == Zone::Gap && s.motion == MotionMode::Stepped)
        return arcs[i - 1];
      return arcs[i];
    }
  }
  return Zone::Gap;  // phase == 1 - eps rounding; trailing arc
}

}  // namespace rotapcr
