#include "ids/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ids/bounds.hpp"

namespace ids {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Frame {
  double minx, miny, scale, size, margin;
  double sx(double x) const { return margin + (x - minx) * scale; }
  double sy(double y) const { return size - margin - (y - miny) * scale; }
};

}  // namespace

std::string plot_svg(const PointSet& s, const std::optional<StructureWitness>& witness) {
  validate_pointset(s);
  const double root = std::sqrt(static_cast<double>(s.m));
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : s.points) pts.emplace_back(p.x.to_double(), p.t.to_double() * root);

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  auto include = [&](double x, double y) {
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    }
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };
  for (auto [x, y] : pts) include(x, y);

  std::optional<std::pair<std::pair<double, double>, double>> circle;
  if (witness && witness->kind == WitnessKind::Circle) {
    const auto& d = witness->defining;
    Circle c = circumcircle(s.points[d[0]], s.points[d[1]], s.points[d[2]], s.m);
    double cx = c.center.x.to_double(), cy = c.center.t.to_double() * root;
    double r = std::sqrt(c.r2.to_double());
    circle = {{cx, cy}, r};
    include(cx - r, cy - r);
    include(cx + r, cy + r);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1.0});
  Frame f{minx, miny, 0, 600, 40};
  f.scale = (f.size - 2 * f.margin) / span;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  if (!s.name.empty()) {
    std::string title;
    for (char c : s.name) {
      if (c == '<') title += "&lt;";
      else if (c == '>') title += "&gt;";
      else if (c == '&') title += "&amp;";
      else title += c;
    }
    out += "<title>" + title + "</title>\n";
  }
  if (witness && witness->kind == WitnessKind::Line) {
    auto [x1, y1] = pts[witness->defining[0]];
    auto [x2, y2] = pts[witness->defining[1]];
    double dx = x2 - x1, dy = y2 - y1, len = std::hypot(dx, dy);
    double ext = 2 * span / len;
    out += "<line x1=\"" + fmt(f.sx(x1 - ext * dx)) + "\" y1=\"" + fmt(f.sy(y1 - ext * dy)) +
           "\" x2=\"" + fmt(f.sx(x1 + ext * dx)) + "\" y2=\"" + fmt(f.sy(y1 + ext * dy)) +
           "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
  }
  if (circle) {
    out += "<circle cx=\"" + fmt(f.sx(circle->first.first)) + "\" cy=\"" +
           fmt(f.sy(circle->first.second)) + "\" r=\"" + fmt(circle->second * f.scale) +
           "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
  }
  std::vector<bool> off(pts.size(), false);
  if (witness)
    for (auto e : witness->exceptional) off[e] = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += "<circle cx=\"" + fmt(f.sx(pts[i].first)) + "\" cy=\"" + fmt(f.sy(pts[i].second)) +
           "\" r=\"4.000000\" fill=\"" + (off[i] ? "crimson" : "black") + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ids
