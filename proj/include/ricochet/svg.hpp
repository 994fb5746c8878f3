#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ricochet/conic.hpp"
#include "ricochet/quad_ext.hpp"

namespace ricochet {

/// Plane drawing in the chart (x, y) = (a1/(a0 + a2), (a0 - a2)/(a0 + a2)),
/// where the conic is the unit circle.
struct SvgScene {
  struct Marker {
    std::string label;
    PlanePoint<QuadExt> at;
  };
  struct Segment {
    PlanePoint<QuadExt> from, to;
  };
  struct Line {
    std::string label;
    LineByPole<QuadExt> line;
  };

  int size = 480;
  double extent = 0;  ///< half-width of the visible chart window; 0 fits the markers
  std::vector<Marker> markers;
  std::vector<Segment> segments;
  std::vector<Line> lines;
  std::string caption;
};

/// Exact chart coordinates of a plane point.
inline std::pair<QuadExt, QuadExt> chart(const PlanePoint<QuadExt>& p) {
  const QuadExt s = p[0] + p[2];
  if (s.is_zero())
    throw Error(Errc::rendering_chart, "point " + to_string(p) + " has a0 + a2 = 0; re-normalize by a Mobius map first");
  return {p[1] / s, (p[0] - p[2]) / s};
}

/// Chart equation a x + b y + c = 0 of a line given by its pole.
inline std::array<QuadExt, 3> chart_line(const LineByPole<QuadExt>& line) {
  const auto& l = line.pole();
  std::array<QuadExt, 3> eq{-l[1], l[2] - l[0], l[0] + l[2]};
  if (eq[0].is_zero() && eq[1].is_zero())
    throw Error(Errc::rendering_chart, "line " + to_string(l) + " is the line at infinity of the chart");
  return eq;
}

namespace detail {

inline double real(const QuadExt& x) {
  const auto v = x.real_value();
  if (!v) throw Error(Errc::rendering_chart, "coordinate " + x.to_string() + " is not real");
  return *v;
}

inline std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Clip a x + b y + c = 0 to the square [-e, e]^2.
inline std::optional<std::array<double, 4>> clip(double a, double b, double c, double e) {
  std::vector<std::pair<double, double>> hits;
  auto add = [&](double x, double y) {
    if (x < -e - 1e-12 || x > e + 1e-12 || y < -e - 1e-12 || y > e + 1e-12) return;
    for (const auto& [hx, hy] : hits)
      if (std::abs(hx - x) < 1e-12 && std::abs(hy - y) < 1e-12) return;
    hits.emplace_back(x, y);
  };
  if (b != 0.0) {
    add(-e, (-c + a * e) / b);
    add(e, (-c - a * e) / b);
  }
  if (a != 0.0) {
    add((-c + b * e) / a, -e);
    add((-c - b * e) / a, e);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::array<double, 4>{hits.front().first, hits.front().second, hits.back().first, hits.back().second};
}

}  // namespace detail

/// Smallest window, at least 1.25, holding every marker and segment end with a margin.
inline double fitted_extent(const SvgScene& scene) {
  double m = 0;
  auto take = [&](const PlanePoint<QuadExt>& p) {
    const auto [x, y] = chart(p);
    m = std::max({m, std::abs(detail::real(x)), std::abs(detail::real(y))});
  };
  for (const auto& k : scene.markers) take(k.at);
  for (const auto& s : scene.segments) {
    take(s.from);
    take(s.to);
  }
  return std::max(1.25, 1.12 * m);
}

/// Smallest distance between two markers as a fraction of the window; larger reads better.
inline double marker_spread(const SvgScene& scene) {
  const double extent = scene.extent > 0 ? scene.extent : fitted_extent(scene);
  std::vector<std::pair<double, double>> xy;
  for (const auto& k : scene.markers) {
    const auto [x, y] = chart(k.at);
    xy.emplace_back(detail::real(x), detail::real(y));
  }
  double best = 2 * extent;
  for (std::size_t i = 0; i < xy.size(); ++i)
    for (std::size_t j = i + 1; j < xy.size(); ++j)
      best = std::min(best, std::hypot(xy[i].first - xy[j].first, xy[i].second - xy[j].second));
  return best / extent;
}

/// Deterministic SVG 1.1 text. All geometry is exact until the final
/// conversion of chart coordinates to pixels.
inline std::string render_svg(const SvgScene& scene) {
  const double extent = scene.extent > 0 ? scene.extent : fitted_extent(scene);
  const double half = scene.size / 2.0;
  const double scale = half / extent;
  auto px = [&](double x) { return detail::fixed(half + x * scale); };
  auto py = [&](double y) { return detail::fixed(half - y * scale); };

  // resolve everything before emitting so chart errors leave no partial output
  std::vector<std::array<double, 2>> marks;
  for (const auto& m : scene.markers) {
    const auto [x, y] = chart(m.at);
    marks.push_back({detail::real(x), detail::real(y)});
  }
  std::vector<std::array<double, 4>> segs;
  for (const auto& s : scene.segments) {
    const auto [x0, y0] = chart(s.from);
    const auto [x1, y1] = chart(s.to);
    segs.push_back({detail::real(x0), detail::real(y0), detail::real(x1), detail::real(y1)});
  }
  std::vector<std::optional<std::array<double, 4>>> lines;
  for (const auto& l : scene.lines) {
    const auto eq = chart_line(l.line);
    lines.push_back(detail::clip(detail::real(eq[0]), detail::real(eq[1]), detail::real(eq[2]), extent));
  }

  const std::string size = std::to_string(scene.size);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"white\"/>\n";
  out += "<circle cx=\"" + px(0) + "\" cy=\"" + py(0) + "\" r=\"" + detail::fixed(scale) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (const auto& s : segs)
    out += "<line x1=\"" + px(s[0]) + "\" y1=\"" + py(s[1]) + "\" x2=\"" + px(s[2]) + "\" y2=\"" + py(s[3]) +
           "\" stroke=\"#4477aa\" stroke-width=\"1\"/>\n";
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (!lines[k]) continue;
    const auto& s = *lines[k];
    out += "<line x1=\"" + px(s[0]) + "\" y1=\"" + py(s[1]) + "\" x2=\"" + px(s[2]) + "\" y2=\"" + py(s[3]) +
           "\" stroke=\"#cc3311\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
    out += "<text x=\"" + px(s[2]) + "\" y=\"" + py(s[3]) + "\" font-size=\"12\" fill=\"#cc3311\">" +
           detail::escape(scene.lines[k].label) + "</text>\n";
  }
  for (std::size_t k = 0; k < marks.size(); ++k) {
    out += "<circle cx=\"" + px(marks[k][0]) + "\" cy=\"" + py(marks[k][1]) + "\" r=\"3\" fill=\"black\"/>\n";
    out += "<text x=\"" + detail::fixed(half + marks[k][0] * scale + 5) + "\" y=\"" + detail::fixed(half - marks[k][1] * scale - 5) +
           "\" font-size=\"13\">" + detail::escape(scene.markers[k].label) + "</text>\n";
  }
  if (!scene.caption.empty())
    out += "<text x=\"10\" y=\"" + std::to_string(scene.size - 10) + "\" font-size=\"12\">" + detail::escape(scene.caption) + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace ricochet
