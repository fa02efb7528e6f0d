#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lgsst/lead.hpp"
#include "lgsst/planner.hpp"
#include "lgsst/stl/print.hpp"

namespace lgsst {

inline constexpr const char* kTrajectoryHeader = "# lgsst-trajectory 1";

/// Rows `t x y theta v delta` (s, m, m, rad, m/s, rad). Row k holds the
/// state reached at time t and the control applied on the edge into it; the
/// first row (t = 0) has zero control. Durations follow from consecutive t.
inline void write_trajectory(std::ostream& out, const planner::Trajectory& traj) {
  using stl::format_number;
  out << kTrajectoryHeader << "\n# t x y theta v delta\n";
  for (const auto& p : traj)
    out << format_number(p.t) << ' ' << format_number(p.state.x) << ' ' << format_number(p.state.y) << ' '
        << format_number(p.state.theta) << ' ' << format_number(p.control.v) << ' ' << format_number(p.control.delta)
        << '\n';
}

inline void save_trajectory(const planner::Trajectory& traj, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_trajectory(out, traj);
}

inline planner::Trajectory read_trajectory(std::istream& in) {
  planner::Trajectory traj;
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryHeader) throw std::runtime_error("not a trajectory file");
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    planner::TrajectoryPoint p;
    if (!(row >> p.t >> p.state.x >> p.state.y >> p.state.theta >> p.control.v >> p.control.delta))
      throw std::runtime_error("malformed trajectory row: " + line);
    p.duration = traj.empty() ? 0.0 : p.t - traj.back().t;
    traj.push_back(p);
  }
  return traj;
}

inline planner::Trajectory load_trajectory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_trajectory(in);
}

inline constexpr const char* kLeadHeader = "# lgsst-lead 1";

/// One row per carrier point: `layer kind x y`, kind is `region` or `path`.
/// Region rows are followed by the disk as `disk cx cy r`.
inline void write_lead(std::ostream& out, const geolead::LeadPath& lead) {
  using stl::format_number;
  out << kLeadHeader << "\n# layer kind x y\n";
  for (const auto& l : lead.layers()) {
    const char* kind = l.region ? "region" : "path";
    for (const Vec2& p : l.carrier)
      out << l.index << ' ' << kind << ' ' << format_number(p.x) << ' ' << format_number(p.y) << '\n';
    if (l.region)
      out << l.index << " disk " << format_number(l.disk.center.x) << ' ' << format_number(l.disk.center.y) << ' '
          << format_number(l.disk.radius) << '\n';
  }
}

inline void save_lead(const geolead::LeadPath& lead, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_lead(out, lead);
}

}  // namespace lgsst
