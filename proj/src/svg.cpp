#include "tropkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace tropkit {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 20.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;

  double sx(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin); }
  double sy(double y) const { return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin); }
  double reach() const { return 2 * ((x1 - x0) + (y1 - y0)); }
};

Frame frame_for(const PlaneCurve& c) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : c.vertices) pts.emplace_back(v.x.get_d(), v.y.get_d());
  for (const auto& e : c.edges) {
    if (e.kind == EdgeKind::line) pts.emplace_back(e.anchor.x.get_d(), e.anchor.y.get_d());
  }
  Frame f;
  if (pts.empty()) return f;
  f.x0 = f.x1 = pts[0].first;
  f.y0 = f.y1 = pts[0].second;
  for (const auto& [x, y] : pts) {
    f.x0 = std::min(f.x0, x);
    f.x1 = std::max(f.x1, x);
    f.y0 = std::min(f.y0, y);
    f.y1 = std::max(f.y1, y);
  }
  // Square frame with room for the rays.
  double span = std::max({f.x1 - f.x0, f.y1 - f.y0, 1.0});
  double cx = (f.x0 + f.x1) / 2, cy = (f.y0 + f.y1) / 2;
  double half = span / 2 + std::max(1.0, span / 4);
  f.x0 = cx - half;
  f.x1 = cx + half;
  f.y0 = cy - half;
  f.y1 = cy + half;
  return f;
}

struct Segment {
  double ax, ay, bx, by;
};

Segment segment(const PlaneCurve& c, const CurveEdge& e, const Frame& f) {
  double dx = static_cast<double>(e.dir.x), dy = static_cast<double>(e.dir.y);
  double len = std::hypot(dx, dy);
  double r = f.reach() / len;
  switch (e.kind) {
    case EdgeKind::bounded:
      return {c.vertices[e.from].x.get_d(), c.vertices[e.from].y.get_d(), c.vertices[e.to].x.get_d(),
              c.vertices[e.to].y.get_d()};
    case EdgeKind::ray: {
      double ax = c.vertices[e.from].x.get_d(), ay = c.vertices[e.from].y.get_d();
      return {ax, ay, ax + r * dx, ay + r * dy};
    }
    case EdgeKind::line:
    default: {
      double px = e.anchor.x.get_d(), py = e.anchor.y.get_d();
      return {px - r * dx, py - r * dy, px + r * dx, py + r * dy};
    }
  }
}

void draw_curve(std::ostringstream& out, const PlaneCurve& c, const Frame& f, const std::set<int>& highlight,
                bool dim_rest, const std::string& clip) {
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    const auto& e = c.edges[k];
    Segment s = segment(c, e, f);
    bool strong = !dim_rest || highlight.count(static_cast<int>(k));
    out << "<line x1=\"" << num(f.sx(s.ax)) << "\" y1=\"" << num(f.sy(s.ay)) << "\" x2=\"" << num(f.sx(s.bx))
        << "\" y2=\"" << num(f.sy(s.by)) << "\" stroke=\"" << (strong ? "black" : "#bbbbbb")
        << "\" stroke-width=\"" << (strong ? 1 + e.weight : 1) << "\" clip-path=\"url(#" << clip << ")\"/>\n";
    if (e.weight > 1 && e.kind == EdgeKind::bounded) {
      out << "<text x=\"" << num(f.sx((s.ax + s.bx) / 2) + 4) << "\" y=\"" << num(f.sy((s.ay + s.by) / 2) - 4)
          << "\" font-size=\"12\">" << e.weight << "</text>\n";
    } else if (e.weight > 1) {
      Segment t = segment(c, e, f);
      double ax = e.kind == EdgeKind::ray ? t.ax : (t.ax + t.bx) / 2;
      double ay = e.kind == EdgeKind::ray ? t.ay : (t.ay + t.by) / 2;
      double step = 0.15 * (f.x1 - f.x0) / std::hypot(double(e.dir.x), double(e.dir.y));
      out << "<text x=\"" << num(f.sx(ax + step * e.dir.x) + 4) << "\" y=\"" << num(f.sy(ay + step * e.dir.y) - 4)
          << "\" font-size=\"12\">" << e.weight << "</text>\n";
    }
  }
  for (const auto& v : c.vertices) {
    out << "<circle cx=\"" << num(f.sx(v.x.get_d())) << "\" cy=\"" << num(f.sy(v.y.get_d()))
        << "\" r=\"2\" fill=\"black\"/>\n";
  }
}

void clip_rect(std::ostringstream& out, const std::string& id) {
  out << "<clipPath id=\"" << id << "\"><rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << kSize - 2 * kMargin << "\" height=\"" << kSize - 2 * kMargin << "\"/></clipPath>\n";
}

}  // namespace

std::string curve_svg(const PlaneCurve& c) {
  Frame f = frame_for(c);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
      << "<defs>\n";
  clip_rect(out, "frame");
  out << "</defs>\n<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  draw_curve(out, c, f, {}, false, "frame");
  out << "</svg>\n";
  return out.str();
}

std::string patchwork_svg(const PlaneCurve& c, const PatchworkResult& r) {
  Frame f = frame_for(c);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<defs>\n";
  clip_rect(out, "frame");
  out << "</defs>\n<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  const SignPair panels[4] = {{-1, 1}, {1, 1}, {-1, -1}, {1, -1}};
  for (int k = 0; k < 4; ++k) {
    const SignPair s = panels[k];
    std::set<int> edges;
    for (const auto& arc : r.arcs) {
      if (arc.sign == s) edges.insert(arc.edges.begin(), arc.edges.end());
    }
    out << "<g transform=\"translate(" << (k % 2) * 400 << "," << (k / 2) * 400 << ")\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"none\" stroke=\"#888888\"/>\n"
        << "<text x=\"6\" y=\"14\" font-size=\"12\">(" << (s.x > 0 ? '+' : '-') << ',' << (s.y > 0 ? '+' : '-')
        << ")</text>\n";
    draw_curve(out, c, f, edges, true, "frame");
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropkit
