#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lgsst/bench.hpp"
#include "lgsst/lead.hpp"
#include "lgsst/planner.hpp"
#include "lgsst/scenario.hpp"
#include "lgsst/stl/print.hpp"

namespace lgsst::render {

namespace detail {

// Fixed precision keeps output byte-stable.
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::string hsl(double hue) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.0f,70%%,45%%)", hue);
  return buf;
}

inline void save(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace detail

/// World-to-pixel transform with y pointing up.
class Canvas {
public:
  Canvas(const Bounds& b, double scale = 60.0, double margin = 20.0) : b_(b), s_(scale), m_(margin) {}

  double px(double x) const { return m_ + (x - b_.x_min) * s_; }
  double py(double y) const { return m_ + (b_.y_max - y) * s_; }
  double width() const { return 2 * m_ + b_.width() * s_; }
  double height() const { return 2 * m_ + b_.height() * s_; }
  double scale() const { return s_; }

private:
  Bounds b_;
  double s_, m_;
};

/// SVG of the scenario with an optional lead (coloured by layer) and
/// trajectory (coloured by time).
inline std::string scene_svg(const Scenario& sc, const geolead::LeadPath* lead = nullptr,
                             const planner::Trajectory* traj = nullptr, double dt = 0.05) {
  using detail::num;
  const Canvas cv(sc.bounds);
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(cv.width()) << "\" height=\"" << num(cv.height())
    << "\">\n";
  o << "<rect x=\"" << num(cv.px(sc.bounds.x_min)) << "\" y=\"" << num(cv.py(sc.bounds.y_max)) << "\" width=\""
    << num(sc.bounds.width() * cv.scale()) << "\" height=\"" << num(sc.bounds.height() * cv.scale())
    << "\" fill=\"white\" stroke=\"black\"/>\n";

  for (const auto& ob : sc.obstacles) {
    o << "<polygon fill=\"#555\" points=\"";
    for (const Vec2& v : ob.vertices()) o << num(cv.px(v.x)) << ',' << num(cv.py(v.y)) << ' ';
    o << "\"/>\n";
  }

  std::optional<stl::FragmentSpec> spec;
  try {
    spec = sc.fragment();
  } catch (const std::exception&) {
  }
  if (spec) {
    for (std::size_t g = 0; g < spec->goal_count(); ++g) {
      const auto& r = spec->region(g);
      const auto iv = spec->interval(g);
      o << "<circle cx=\"" << num(cv.px(r.center.x)) << "\" cy=\"" << num(cv.py(r.center.y)) << "\" r=\""
        << num(r.radius * cv.scale()) << "\" fill=\"#8c8\" fill-opacity=\"0.5\" stroke=\"#383\"/>\n";
      std::string label = "g" + std::to_string(g) + " ";
      label += iv.bounded() ? "[" + stl::format_number(iv.lower()) + "," + stl::format_number(iv.upper()) + "]" : "[0,inf)";
      o << "<text x=\"" << num(cv.px(r.center.x) + r.radius * cv.scale() + 3) << "\" y=\"" << num(cv.py(r.center.y))
        << "\" font-size=\"11\">" << label << "</text>\n";
    }
  }

  if (lead) {
    const int layers = lead->layer_count();
    for (const auto& l : lead->layers()) {
      if (l.region || l.carrier.size() < 2) continue;
      o << "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << detail::hsl(300.0 * l.index / std::max(1, layers - 1))
        << "\" points=\"";
      for (const Vec2& p : l.carrier) o << num(cv.px(p.x)) << ',' << num(cv.py(p.y)) << ' ';
      o << "\"/>\n";
    }
    o << "<polyline fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\" points=\"";
    for (const Vec2& p : lead->polyline()) o << num(cv.px(p.x)) << ',' << num(cv.py(p.y)) << ' ';
    o << "\"/>\n";
  }

  if (traj && !traj->empty()) {
    const double t_end = std::max(traj->back().t, 1e-9);
    Vec2 prev{sc.x_init.x, sc.x_init.y};
    dynamics::CarState s{sc.x_init.x, sc.x_init.y, sc.x_init.theta};
    for (std::size_t k = 1; k < traj->size(); ++k) {
      const auto& p = (*traj)[k];
      o << "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << detail::hsl(240.0 * (1.0 - p.t / t_end))
        << "\" points=\"" << num(cv.px(prev.x)) << ',' << num(cv.py(prev.y)) << ' ';
      s = dynamics::propagate_visit(s, p.control, p.duration, dt, sc.car.wheelbase,
                                    [&](double, const dynamics::CarState& x) {
                                      o << num(cv.px(x.x)) << ',' << num(cv.py(x.y)) << ' ';
                                      return true;
                                    });
      o << "\"/>\n";
      prev = s.position();
    }
  }
  o << "<circle cx=\"" << num(cv.px(sc.x_init.x)) << "\" cy=\"" << num(cv.py(sc.x_init.y))
    << "\" r=\"4\" fill=\"black\"/>\n";
  o << "</svg>\n";
  return o.str();
}

inline void render(const Scenario& sc, const geolead::LeadPath* lead, const planner::Trajectory* traj,
                   const std::string& path) {
  detail::save(scene_svg(sc, lead, traj, sc.planner.dt), path);
}

/// Mean best cost vs. time per planner with a min/max band. Infinite costs
/// (no complete goal node yet) are drawn at the top edge.
inline std::string cost_curves_svg(const std::vector<bench::RunMetrics>& runs, double horizon, double period) {
  using detail::num;
  if (runs.empty()) throw std::invalid_argument("no runs to plot");
  std::map<std::string, std::vector<const bench::RunMetrics*>> groups;
  for (const auto& r : runs) groups[r.planner].push_back(&r);

  std::map<std::string, bench::Curve> curves;
  double top = 0.0;
  for (const auto& [name, g] : groups) {
    curves[name] = bench::cost_curve(g, horizon, period);
    for (double v : curves[name].hi)
      if (std::isfinite(v)) top = std::max(top, v);
  }
  if (top <= 0.0) top = 1.0;
  top *= 1.1;

  const double W = 640, H = 400, L = 60, R = 20, T = 20, B = 50;
  auto X = [&](double t) { return L + (W - L - R) * t / horizon; };
  auto Y = [&](double c) { return T + (H - T - B) * (1.0 - std::min(c, top) / top); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(W) << "\" height=\"" << num(H) << "\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << num(W) << "\" height=\"" << num(H) << "\" fill=\"white\"/>\n";
  o << "<line x1=\"" << num(L) << "\" y1=\"" << num(H - B) << "\" x2=\"" << num(W - R) << "\" y2=\"" << num(H - B)
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << num(L) << "\" y1=\"" << num(T) << "\" x2=\"" << num(L) << "\" y2=\"" << num(H - B)
    << "\" stroke=\"black\"/>\n";
  o << "<text x=\"" << num(W / 2) << "\" y=\"" << num(H - 12) << "\" font-size=\"12\">time [s] (0 to "
    << stl::format_number(horizon) << ")</text>\n";
  o << "<text x=\"4\" y=\"" << num(T + 10) << "\" font-size=\"12\">J max " << num(top) << "</text>\n";

  int idx = 0;
  for (const auto& [name, c] : curves) {
    const std::string color = idx == 0 ? "#c33" : idx == 1 ? "#36c" : detail::hsl(90.0 * idx);
    o << "<polygon fill=\"" << color << "\" fill-opacity=\"0.2\" points=\"";
    for (std::size_t k = 0; k < c.t.size(); ++k) o << num(X(c.t[k])) << ',' << num(Y(c.hi[k])) << ' ';
    for (std::size_t k = c.t.size(); k-- > 0;) o << num(X(c.t[k])) << ',' << num(Y(c.lo[k])) << ' ';
    o << "\"/>\n";
    o << "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << color << "\" points=\"";
    for (std::size_t k = 0; k < c.t.size(); ++k) o << num(X(c.t[k])) << ',' << num(Y(c.mean[k])) << ' ';
    o << "\"/>\n";
    o << "<text x=\"" << num(W - R - 120) << "\" y=\"" << num(T + 15 + 15 * idx) << "\" font-size=\"12\" fill=\""
      << color << "\">" << name << "</text>\n";
    ++idx;
  }
  o << "</svg>\n";
  return o.str();
}

inline void plot_cost_curves(const std::vector<bench::RunMetrics>& runs, double horizon, double period,
                             const std::string& path) {
  detail::save(cost_curves_svg(runs, horizon, period), path);
}

}  // namespace lgsst::render
