#include "tropkit/json_io.hpp"

#include <bit>

#include "tropkit/error.hpp"

namespace tropkit::json_io {

namespace {

// Runs a parser body, mapping nlohmann type and key errors to ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON value: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long integer(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<long long>();
}

int small_integer(const json& j) {
  long long v = integer(j);
  if (v < INT32_MIN || v > INT32_MAX) throw ParseError("integer out of range");
  return static_cast<int>(v);
}

bool boolean(const json& j) {
  if (!j.is_boolean()) throw ParseError("expected a boolean, got " + j.dump());
  return j.get<bool>();
}

const json& array(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  return j;
}

IntVec int_vector(const json& j) {
  IntVec v;
  for (const auto& x : array(j)) v.push_back(integer(x));
  return v;
}

std::vector<int> int_list(const json& j) {
  std::vector<int> v;
  for (const auto& x : array(j)) v.push_back(small_integer(x));
  return v;
}

json points_to_json(const std::vector<LatticePoint>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

std::vector<LatticePoint> points_from_json(const json& j) {
  std::vector<LatticePoint> pts;
  for (const auto& p : array(j)) pts.push_back(lattice_point_from_json(p));
  return pts;
}

json rat_point(const RatPoint& p) { return json::array({to_json(p.x), to_json(p.y)}); }

RatPoint rat_point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a point [x, y]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json sign_pair(const SignPair& s) { return json::array({s.x, s.y}); }

SignPair sign_pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a sign pair");
  SignPair s{small_integer(j[0]), small_integer(j[1])};
  if (std::abs(s.x) != 1 || std::abs(s.y) != 1) throw ParseError("signs must be +1 or -1");
  return s;
}

json element_set(ElementSet s) {
  json a = json::array();
  for (int e = 0; e < 32; ++e) {
    if (s & (ElementSet{1} << e)) a.push_back(e);
  }
  return a;
}

ElementSet element_set_from_json(const json& j) {
  ElementSet s = 0;
  for (int e : int_list(j)) {
    if (e < 0 || e >= 32) throw ParseError("ground element out of range");
    s |= ElementSet{1} << e;
  }
  return s;
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const Rational& q) { return tropkit::to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return make_rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump());
}

json to_json(const TropicalScalar& s) { return s.to_string(); }

TropicalScalar scalar_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "-inf") return TropicalScalar::neg_inf();
  return TropicalScalar(rational_from_json(j));
}

json to_json(const std::vector<TropicalRoot>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back({{"root", to_json(r.location)}, {"order", r.order}});
  return a;
}

std::vector<TropicalRoot> roots_from_json(const json& j) {
  return guarded([&] {
    std::vector<TropicalRoot> roots;
    for (const auto& r : array(j)) roots.push_back({scalar_from_json(field(r, "root")), small_integer(field(r, "order"))});
    return roots;
  });
}

json to_json(const Factorization& f) {
  return {{"leading", to_json(f.leading)}, {"factors", to_json(f.factors)}};
}

Factorization factorization_from_json(const json& j) {
  return guarded([&] {
    return Factorization{rational_from_json(field(j, "leading")), roots_from_json(field(j, "factors"))};
  });
}

json to_json(const LaurentQ& p) {
  json o = json::object();
  for (const auto& [e, c] : p.coeffs()) o[std::to_string(e)] = c;
  return o;
}

LaurentQ laurent_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_object()) throw ParseError("expected a Laurent polynomial object");
    std::map<int, long long> coeffs;
    for (const auto& [k, v] : j.items()) {
      std::size_t pos = 0;
      int e;
      try {
        e = std::stoi(k, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad exponent key '" + k + "'");
      }
      if (pos != k.size()) throw ParseError("bad exponent key '" + k + "'");
      coeffs[e] = integer(v);
    }
    return LaurentQ(coeffs);
  });
}

json to_json(const LatticePoint& p) { return json::array({p.x, p.y}); }

LatticePoint lattice_point_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected a lattice point [i, j]");
    return LatticePoint{integer(j[0]), integer(j[1])};
  });
}

json to_json(const PlaneCurve& c) {
  json verts = json::array();
  for (const auto& v : c.vertices) verts.push_back(rat_point(v));
  json edges = json::array();
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    const auto& e = c.edges[k];
    json o = {{"id", "e" + std::to_string(k)}};
    switch (e.kind) {
      case EdgeKind::bounded:
        o["v"] = json::array({e.from, e.to});
        break;
      case EdgeKind::ray:
        o["ray"] = {{"v", e.from}, {"dir", to_json(e.dir)}};
        break;
      case EdgeKind::line:
        o["line"] = {{"p", rat_point(e.anchor)}, {"dir", to_json(e.dir)}};
        break;
    }
    o["w"] = e.weight;
    edges.push_back(o);
  }
  return {{"vertices", verts}, {"edges", edges}};
}

PlaneCurve plane_curve_from_json(const json& j) {
  return guarded([&] {
    PlaneCurve c;
    for (const auto& v : array(field(j, "vertices"))) c.vertices.push_back(rat_point_from_json(v));
    int nv = static_cast<int>(c.vertices.size());
    auto vertex = [&](const json& x) {
      int v = small_integer(x);
      if (v < 0 || v >= nv) throw ParseError("vertex index out of range");
      return v;
    };
    auto direction = [](const json& x) {
      LatticePoint d = lattice_point_from_json(x);
      if (d.x == 0 && d.y == 0) throw ParseError("zero edge direction");
      IntVec p = primitive(IntVec{d.x, d.y});
      if (p[0] != d.x || p[1] != d.y) throw ParseError("edge direction is not primitive");
      return d;
    };
    for (const auto& e : array(field(j, "edges"))) {
      CurveEdge edge;
      if (e.contains("v")) {
        const auto& ends = array(e.at("v"));
        if (ends.size() != 2) throw ParseError("bounded edge needs two endpoints");
        edge.kind = EdgeKind::bounded;
        edge.from = vertex(ends[0]);
        edge.to = vertex(ends[1]);
        const auto& a = c.vertices[edge.from];
        const auto& b = c.vertices[edge.to];
        if (a == b) throw ParseError("bounded edge with coincident endpoints");
        IntVec d = primitive(RatVec{b.x - a.x, b.y - a.y});
        edge.dir = {d[0], d[1]};
      } else if (e.contains("ray")) {
        edge.kind = EdgeKind::ray;
        edge.from = vertex(field(e.at("ray"), "v"));
        edge.dir = direction(field(e.at("ray"), "dir"));
      } else if (e.contains("line")) {
        edge.kind = EdgeKind::line;
        edge.anchor = rat_point_from_json(field(e.at("line"), "p"));
        edge.dir = direction(field(e.at("line"), "dir"));
      } else {
        throw ParseError("edge must have one of 'v', 'ray', 'line'");
      }
      edge.weight = integer(field(e, "w"));
      if (edge.weight < 1) throw ParseError("edge weights must be positive");
      c.edges.push_back(edge);
    }
    return c;
  });
}

json to_json(const DualSubdivision& s) {
  json cells = json::array();
  for (const auto& cell : s.cells) {
    cells.push_back({{"dim", cell.dim}, {"vertices", points_to_json(cell.vertices)}, {"support", points_to_json(cell.support)}});
  }
  return {{"newton_polygon", points_to_json(s.newton_polygon)}, {"cells", cells}, {"cofaces", s.cofaces}};
}

DualSubdivision subdivision_from_json(const json& j) {
  return guarded([&] {
    DualSubdivision s;
    s.newton_polygon = points_from_json(field(j, "newton_polygon"));
    for (const auto& c : array(field(j, "cells"))) {
      s.cells.push_back({small_integer(field(c, "dim")), points_from_json(field(c, "vertices")),
                         points_from_json(field(c, "support"))});
    }
    for (const auto& c : array(field(j, "cofaces"))) s.cofaces.push_back(int_list(c));
    if (s.cofaces.size() != s.cells.size()) throw ParseError("one coface list per cell is required");
    return s;
  });
}

json to_json(const IntersectionReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back({{"at", rat_point(p.location)}, {"m", p.multiplicity}});
  return {{"points", pts}, {"transverse", r.transverse}, {"total", r.total}};
}

IntersectionReport intersection_from_json(const json& j) {
  return guarded([&] {
    IntersectionReport r;
    for (const auto& p : array(field(j, "points"))) {
      r.points.push_back({rat_point_from_json(field(p, "at")), integer(field(p, "m"))});
    }
    r.transverse = boolean(field(j, "transverse"));
    r.total = integer(field(j, "total"));
    return r;
  });
}

json to_json(const PatchworkResult& r) {
  json arcs = json::array();
  for (const auto& a : r.arcs) arcs.push_back({{"edges", a.edges}, {"sign", sign_pair(a.sign)}});
  json canon = json::array();
  for (const auto& s : r.canonical_signs) canon.push_back(sign_pair(s));
  return {{"arcs", arcs},
          {"canonical_signs", canon},
          {"component_count", r.component_count},
          {"type_I", r.type_I},
          {"orientable_quotient", r.orientable_quotient},
          {"maximal", r.maximal},
          {"euler_char_quotient", r.euler_char_quotient}};
}

PatchworkResult patchwork_from_json(const json& j) {
  return guarded([&] {
    PatchworkResult r;
    for (const auto& a : array(field(j, "arcs"))) {
      r.arcs.push_back({int_list(field(a, "edges")), sign_pair_from_json(field(a, "sign"))});
    }
    for (const auto& s : array(field(j, "canonical_signs"))) r.canonical_signs.push_back(sign_pair_from_json(s));
    r.component_count = small_integer(field(j, "component_count"));
    r.type_I = boolean(field(j, "type_I"));
    r.orientable_quotient = boolean(field(j, "orientable_quotient"));
    r.maximal = boolean(field(j, "maximal"));
    r.euler_char_quotient = small_integer(field(j, "euler_char_quotient"));
    return r;
  });
}

SignDistribution signs_from_json(const json& j) {
  return guarded([&] {
    SignDistribution s;
    for (const auto& e : array(j)) {
      LatticePoint p = lattice_point_from_json(field(e, "at"));
      int sign = small_integer(field(e, "sign"));
      if (sign != 1 && sign != -1) throw ParseError("signs must be +1 or -1");
      if (!s.emplace(p, sign).second) throw ParseError("lattice point listed twice");
    }
    return s;
  });
}

json to_json(const SignDistribution& s) {
  json a = json::array();
  for (const auto& [p, sign] : s) a.push_back({{"at", to_json(p)}, {"sign", sign}});
  return a;
}

json to_json(const FloorDiagram& D) {
  json edges = json::array();
  for (const auto& e : D.edges) edges.push_back({{"s", e.s + 1}, {"t", e.t + 1}, {"w", e.w}});
  json legs = json::array();
  for (int v = 0; v < static_cast<int>(D.legs.size()); ++v) {
    for (int k = 0; k < D.legs[v]; ++k) legs.push_back(v + 1);
  }
  return {{"d", D.d}, {"g", D.g}, {"edges", edges}, {"legs", legs}};
}

FloorDiagram floor_diagram_from_json(const json& j) {
  return guarded([&] {
    FloorDiagram D;
    D.d = small_integer(field(j, "d"));
    D.g = small_integer(field(j, "g"));
    if (D.d < 1 || D.d > 32) throw ParseError("floor diagram degree out of range");
    auto vertex = [&](const json& x) {
      int v = small_integer(x);
      if (v < 1 || v > D.d) throw ParseError("floor diagram vertex out of range");
      return v - 1;
    };
    for (const auto& e : array(field(j, "edges"))) {
      D.edges.push_back({vertex(field(e, "s")), vertex(field(e, "t")), small_integer(field(e, "w"))});
    }
    std::sort(D.edges.begin(), D.edges.end());
    D.legs.assign(D.d, 0);
    for (const auto& t : array(field(j, "legs"))) ++D.legs[vertex(t)];
    return D;
  });
}

json to_json(const FanCurve& c) {
  json rays = json::array();
  for (const auto& r : c.rays) rays.push_back({{"dir", r.dir}, {"w", r.weight}});
  return {{"n", c.n}, {"rays", rays}};
}

FanCurve fan_curve_from_json(const json& j) {
  return guarded([&] {
    FanCurve c;
    c.n = small_integer(field(j, "n"));
    for (const auto& r : array(field(j, "rays"))) {
      c.rays.push_back({int_vector(field(r, "dir")), r.contains("w") ? integer(r.at("w")) : 1});
    }
    return c;
  });
}

json to_json(const Matroid& m) {
  json flats = json::array();
  for (const auto& f : m.flats()) flats.push_back({{"set", element_set(f.set)}, {"rank", f.rank}});
  return {{"n", m.n()}, {"flats", flats}};
}

Matroid matroid_from_json(const json& j) {
  return guarded([&] {
    if (j.is_object() && j.contains("type")) {
      std::string type = j.at("type").get<std::string>();
      if (type == "uniform") return Matroid::uniform(small_integer(field(j, "n")), small_integer(field(j, "rank")));
      if (type == "braid") return Matroid::braid();
      if (type == "vectors") {
        std::vector<IntVec> vs;
        for (const auto& v : array(field(j, "vectors"))) vs.push_back(int_vector(v));
        return Matroid::from_vectors(vs);
      }
      throw ParseError("unknown matroid type '" + type + "'");
    }
    int n = small_integer(field(j, "n"));
    std::vector<Flat> flats;
    for (const auto& f : array(field(j, "flats"))) {
      flats.push_back({element_set_from_json(field(f, "set")), small_integer(field(f, "rank"))});
    }
    return Matroid::from_flats(n, flats);
  });
}

json to_json(const PolyhedralFan& f) {
  json cones = json::array();
  for (const auto& c : f.cones) cones.push_back({{"rays", c.rays}, {"w", c.weight}});
  return {{"n", f.n}, {"dim", f.dim}, {"rays", f.rays}, {"cones", cones}};
}

PolyhedralFan polyhedral_fan_from_json(const json& j) {
  return guarded([&] {
    PolyhedralFan f;
    f.n = small_integer(field(j, "n"));
    f.dim = small_integer(field(j, "dim"));
    for (const auto& r : array(field(j, "rays"))) f.rays.push_back(int_vector(r));
    for (const auto& c : array(field(j, "cones"))) {
      Cone cone{int_list(field(c, "rays")), c.contains("w") ? integer(c.at("w")) : 1};
      for (int r : cone.rays) {
        if (r < 0 || r >= static_cast<int>(f.rays.size())) throw ParseError("cone ray index out of range");
      }
      f.cones.push_back(cone);
    }
    return f;
  });
}

json to_json(const LinkGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
  return {{"vertices", g.vertices}, {"edges", edges}};
}

LinkGraph link_graph_from_json(const json& j) {
  return guarded([&] {
    LinkGraph g;
    g.vertices = small_integer(field(j, "vertices"));
    for (const auto& e : array(field(j, "edges"))) {
      auto ends = int_list(e);
      if (ends.size() != 2) throw ParseError("link edges need two endpoints");
      g.edges.emplace_back(ends[0], ends[1]);
    }
    return g;
  });
}

json to_json(const MetricGraph& g, const std::set<int>& removed) {
  json verts = json::array();
  for (const auto& v : g.vertices) verts.push_back({{"inf", v.infinite}});
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"len", e.length ? to_json(*e.length) : json("inf")}});
  }
  json o = {{"vertices", verts}, {"edges", edges}};
  if (!removed.empty()) o["removed"] = removed;
  return o;
}

GraphInput graph_from_json(const json& j) {
  return guarded([&] {
    GraphInput in;
    for (const auto& v : array(field(j, "vertices"))) {
      in.graph.vertices.push_back({v.contains("inf") ? boolean(v.at("inf")) : false});
    }
    int nv = static_cast<int>(in.graph.vertices.size());
    auto vertex = [&](const json& x) {
      int v = small_integer(x);
      if (v < 0 || v >= nv) throw ParseError("graph vertex out of range");
      return v;
    };
    for (const auto& e : array(field(j, "edges"))) {
      GraphEdge edge{vertex(field(e, "a")), vertex(field(e, "b")), std::nullopt};
      const json& len = field(e, "len");
      if (!(len.is_string() && len.get<std::string>() == "inf")) edge.length = rational_from_json(len);
      in.graph.edges.push_back(edge);
    }
    if (j.contains("removed")) {
      for (const auto& v : array(j.at("removed"))) in.removed.insert(vertex(v));
    }
    return in;
  });
}

json to_json(const CurveCohomology& h) {
  return {{"h00", h.h00}, {"h01", h.h01}, {"h10", h.h10}, {"h11", h.h11},
          {"c00", h.c00}, {"c01", h.c01}, {"c10", h.c10}, {"c11", h.c11}};
}

CurveCohomology cohomology_from_json(const json& j) {
  return guarded([&] {
    CurveCohomology h;
    h.h00 = small_integer(field(j, "h00"));
    h.h01 = small_integer(field(j, "h01"));
    h.h10 = small_integer(field(j, "h10"));
    h.h11 = small_integer(field(j, "h11"));
    h.c00 = small_integer(field(j, "c00"));
    h.c01 = small_integer(field(j, "c01"));
    h.c10 = small_integer(field(j, "c10"));
    h.c11 = small_integer(field(j, "c11"));
    return h;
  });
}

}  // namespace tropkit::json_io
