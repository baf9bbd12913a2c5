#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "lexfan/complex.hpp"
#include "lexfan/lineality.hpp"

namespace lexfan {

namespace svg_detail {

struct XY {
  double x, y;
  friend bool operator<(const XY& a, const XY& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
  friend bool operator==(const XY& a, const XY& b) { return a.x == b.x && a.y == b.y; }
};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v == 0 ? 0.0 : v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

inline double cross(const XY& o, const XY& a, const XY& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

/// Monotone-chain convex hull, counterclockwise, collinear points dropped.
inline std::vector<XY> hull(std::vector<XY> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<XY> h(2 * pts.size());
  std::size_t m = 0;
  for (const auto& p : pts) {
    while (m >= 2 && cross(h[m - 2], h[m - 1], p) <= 1e-9) --m;
    h[m++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = m + 1; i-- > 0;) {
    while (m >= lo && cross(h[m - 2], h[m - 1], pts[i]) <= 1e-9) --m;
    h[m++] = pts[i];
  }
  h.resize(m - 1);
  return h;
}

/// World-to-screen map for a fixed 480x360 canvas; y grows upward in world coordinates.
struct View {
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  static constexpr double W = 480, H = 360, M = 30;
  double sx(double x) const { return M + (x - x0) / (x1 - x0) * (W - 2 * M); }
  double sy(double y) const { return H - M - (y - y0) / (y1 - y0) * (H - 2 * M); }
  double reach() const { return 4 * std::max(x1 - x0, y1 - y0); }

  static View around(const std::vector<XY>& pts) {
    View v;
    if (pts.empty()) return v;
    v.x0 = v.x1 = pts[0].x;
    v.y0 = v.y1 = pts[0].y;
    for (const auto& p : pts) {
      v.x0 = std::min(v.x0, p.x);
      v.x1 = std::max(v.x1, p.x);
      v.y0 = std::min(v.y0, p.y);
      v.y1 = std::max(v.y1, p.y);
    }
    const double pad = std::max({v.x1 - v.x0, v.y1 - v.y0, 1.0}) * 0.5;
    v.x0 -= pad;
    v.x1 += pad;
    v.y0 -= pad;
    v.y1 += pad;
    return v;
  }
};

class Canvas {
 public:
  explicit Canvas(View v) : v_(v) {}

  void axes(const std::string& xlabel, const std::string& ylabel) {
    const double ax = std::clamp(0.0, v_.x0, v_.x1), ay = std::clamp(0.0, v_.y0, v_.y1);
    line({v_.x0, ay}, {v_.x1, ay}, "#999", 1);
    if (!ylabel.empty()) line({ax, v_.y0}, {ax, v_.y1}, "#999", 1);
    labels_ << "<text x=\"" << num(View::W - View::M) << "\" y=\"" << num(v_.sy(ay) + 16)
          << "\" font-size=\"11\" text-anchor=\"end\">" << escape(xlabel) << "</text>\n";
    if (!ylabel.empty())
      labels_ << "<text x=\"" << num(v_.sx(ax) + 6) << "\" y=\"" << num(View::M - 8) << "\" font-size=\"11\">"
            << escape(ylabel) << "</text>\n";
  }

  void line(XY a, XY b, const std::string& color, double width) {
    body_ << "<line x1=\"" << num(v_.sx(a.x)) << "\" y1=\"" << num(v_.sy(a.y)) << "\" x2=\"" << num(v_.sx(b.x))
          << "\" y2=\"" << num(v_.sy(b.y)) << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width)
          << "\"/>\n";
  }

  void polygon(const std::vector<XY>& pts, const std::string& fill) {
    body_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << num(v_.sx(pts[i].x)) << "," << num(v_.sy(pts[i].y));
    body_ << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n";
  }

  void rect(double xa, double xb, const std::string& fill) {
    const double l = v_.sx(std::max(xa, v_.x0)), r = v_.sx(std::min(xb, v_.x1));
    if (r <= l) return;
    body_ << "<rect x=\"" << num(l) << "\" y=\"" << num(View::M) << "\" width=\"" << num(r - l) << "\" height=\""
          << num(View::H - 2 * View::M) << "\" fill=\"" << fill << "\" fill-opacity=\"0.25\"/>\n";
  }

  void dot(XY p, const std::string& label) {
    dots_ << "<circle cx=\"" << num(v_.sx(p.x)) << "\" cy=\"" << num(v_.sy(p.y)) << "\" r=\"4\" fill=\"#c0392b\"/>\n";
    labels_ << "<text x=\"" << num(v_.sx(p.x) + 6) << "\" y=\"" << num(v_.sy(p.y) - 6) << "\" font-size=\"11\">"
          << escape(label) << "</text>\n";
  }

  const View& view() const noexcept { return v_; }

  std::string str() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << View::W << "\" height=\"" << View::H
        << "\" viewBox=\"0 0 " << View::W << " " << View::H << "\">\n"
        << "<defs><clipPath id=\"frame\"><rect x=\"" << View::M << "\" y=\"" << View::M << "\" width=\""
        << View::W - 2 * View::M << "\" height=\"" << View::H - 2 * View::M << "\"/></clipPath></defs>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<g clip-path=\"url(#frame)\">\n"
        << body_.str() << "</g>\n"
        << dots_.str() << labels_.str() << "</svg>\n";
    return out.str();
  }

 private:
  View v_;
  std::ostringstream body_;
  std::ostringstream dots_;
  std::ostringstream labels_;
};

inline double to_d(const Rational& q) { return q.get_d(); }

/// Points of the cell used for layout: vertices, plus lineality and recession directions.
struct CellSketch {
  std::vector<XY> base;
  std::vector<XY> dirs;
};

inline XY planar(const Point& p) { return {to_d(p[0][0]), to_d(p[1][0])}; }

inline CellSketch sketch_planar(const Polyhedron& p) {
  CellSketch s;
  const auto q = pointed_quotient(p);
  for (const auto& w : vertices(q.polyhedron)) s.base.push_back(planar(q.map.lift(w)));
  auto dir = [](const LatticeVec& d) { return XY{static_cast<double>(d[0]), static_cast<double>(d[1])}; };
  for (const auto& r : recession_cone(q.polyhedron).rays()) {
    Point w(q.map.rank(), 1);
    for (std::size_t i = 0; i < r.size(); ++i) w[i][0] = Rational(static_cast<long>(r[i]));
    s.dirs.push_back(planar(q.map.lift(w)));
  }
  for (const auto& z : q.map.kernel_basis()) {
    s.dirs.push_back(dir(z));
    s.dirs.push_back(dir(negated(z)));
  }
  return s;
}

inline std::string plane_label(const Point& p) {
  return "(" + pretty_rational(p[0][0]) + "," + pretty_rational(p[1][0]) + ")";
}

inline std::string plot_planar(const PolyComplex& c) {
  std::vector<CellSketch> sketches;
  std::vector<XY> all;
  for (const auto& p : c.cells()) {
    if (is_empty(p)) continue;
    sketches.push_back(sketch_planar(p));
    all.insert(all.end(), sketches.back().base.begin(), sketches.back().base.end());
  }
  Canvas cv(View::around(all));
  cv.axes("x", "y");
  const double R = cv.view().reach();
  for (const auto& s : sketches) {
    auto cloud = s.base;
    for (const auto& b : s.base)
      for (const auto& d : s.dirs) cloud.push_back({b.x + R * d.x, b.y + R * d.y});
    const auto h = hull(cloud);
    if (h.size() >= 3) cv.polygon(h, "#7fb3e6");
    else if (h.size() == 2) cv.line(h[0], h[1], "#1f5fa8", 2);
  }
  for (const auto& v : vertices(c)) cv.dot(planar(v), plane_label(v));
  return cv.str();
}

/// n = 1: the horizontal axis is the leading value coordinate, the vertical one the second.
inline std::string plot_line(const PolyComplex& c) {
  const bool two = c.k() == 2;
  auto xy = [&](const Point& p) { return XY{to_d(p[0][0]), two ? to_d(p[0][1]) : 0.0}; };
  std::vector<XY> all;
  for (const auto& v : vertices(c)) all.push_back(xy(v));
  Canvas cv(View::around(all));
  cv.axes("leading coordinate", two ? "second coordinate" : "");
  const auto& vw = cv.view();
  const std::string blue = "#1f5fa8";
  const std::string fills[2] = {"#7fb3e6", "#f0b27a"};
  std::size_t strips = 0;
  auto up = [&](XY a) { cv.line(a, {a.x, two ? vw.y1 : a.y}, blue, 2); };
  auto down = [&](XY a) { cv.line(a, {a.x, two ? vw.y0 : a.y}, blue, 2); };
  for (const auto& p : c.cells()) {
    if (is_empty(p)) continue;
    if (!is_pointed(p)) {
      if (two) cv.rect(vw.x0, vw.x1, fills[strips++ % 2]);
      else cv.line({vw.x0, 0}, {vw.x1, 0}, blue, 2);
      continue;
    }
    const auto vs = vertices(p);
    const auto rays = recession_cone(p).rays();
    if (vs.size() == 2) {
      const XY a = xy(vs[0]), b = xy(vs[1]);
      if (!two || a.x == b.x) {
        cv.line(a, b, blue, 2);
      } else {
        up(a);
        cv.rect(a.x, b.x, fills[strips++ % 2]);
        down(b);
      }
    } else if (vs.size() == 1 && !rays.empty()) {
      const XY a = xy(vs[0]);
      if (rays[0][0] > 0) {
        if (two) {
          up(a);
          cv.rect(a.x, vw.x1, fills[strips++ % 2]);
        } else {
          cv.line(a, {vw.x1, 0}, blue, 2);
        }
      } else {
        if (two) {
          down(a);
          cv.rect(vw.x0, a.x, fills[strips++ % 2]);
        } else {
          cv.line(a, {vw.x0, 0}, blue, 2);
        }
      }
    }
  }
  for (const auto& v : vertices(c)) cv.dot(xy(v), v[0].str());
  return cv.str();
}

}  // namespace svg_detail

/// SVG drawing of a complex with n = 1, k <= 2 or n = 2, k = 1.
inline std::string plot(const PolyComplex& c) {
  if (c.n() == 1 && c.k() <= 2) return svg_detail::plot_line(c);
  if (c.n() == 2 && c.k() == 1) return svg_detail::plot_planar(c);
  throw InvalidArgument("not plottable: n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()));
}

}  // namespace lexfan
