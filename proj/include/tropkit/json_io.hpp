#pragma once

#include <set>

#include <json.hpp>

#include "tropkit/fan.hpp"
#include "tropkit/floor_diagram.hpp"
#include "tropkit/intersection.hpp"
#include "tropkit/laurent.hpp"
#include "tropkit/matroid.hpp"
#include "tropkit/metric_graph.hpp"
#include "tropkit/patchwork.hpp"
#include "tropkit/plane_curve.hpp"
#include "tropkit/univariate.hpp"

// JSON forms of the library values. Every *_from_json throws ParseError on
// malformed input; emitted JSON re-parses to an equal value.
namespace tropkit::json_io {

using json = nlohmann::json;

json to_json(const Rational& q);  // "p/q", integers as "n"
Rational rational_from_json(const json& j);

json to_json(const TropicalScalar& s);  // "-inf" or a rational string
TropicalScalar scalar_from_json(const json& j);

json to_json(const std::vector<TropicalRoot>& roots);
std::vector<TropicalRoot> roots_from_json(const json& j);

json to_json(const Factorization& f);
Factorization factorization_from_json(const json& j);

// {"2e": c}: doubled exponent -> coefficient.
json to_json(const LaurentQ& p);
LaurentQ laurent_from_json(const json& j);

json to_json(const LatticePoint& p);
LatticePoint lattice_point_from_json(const json& j);

// Curves from JSON carry no dual subdivision.
json to_json(const PlaneCurve& c);
PlaneCurve plane_curve_from_json(const json& j);

json to_json(const DualSubdivision& s);
DualSubdivision subdivision_from_json(const json& j);

json to_json(const IntersectionReport& r);
IntersectionReport intersection_from_json(const json& j);

json to_json(const PatchworkResult& r);
PatchworkResult patchwork_from_json(const json& j);

// [{"at": [i, j], "sign": 1}, ...]
SignDistribution signs_from_json(const json& j);
json to_json(const SignDistribution& s);

// Vertices 1-based: {d, g, edges: [{s, t, w}], legs: [t, ...]}.
json to_json(const FloorDiagram& D);
FloorDiagram floor_diagram_from_json(const json& j);

json to_json(const FanCurve& c);  // {n, rays: [{dir: [...], w}]}
FanCurve fan_curve_from_json(const json& j);

json to_json(const Matroid& m);  // flats form
Matroid matroid_from_json(const json& j);

json to_json(const PolyhedralFan& f);
PolyhedralFan polyhedral_fan_from_json(const json& j);

json to_json(const LinkGraph& g);
LinkGraph link_graph_from_json(const json& j);

// {vertices: [{inf}], edges: [{a, b, len}], removed: [...]}; removed optional.
struct GraphInput {
  MetricGraph graph;
  std::set<int> removed;
};
json to_json(const MetricGraph& g, const std::set<int>& removed = {});
GraphInput graph_from_json(const json& j);

json to_json(const CurveCohomology& h);
CurveCohomology cohomology_from_json(const json& j);

// Parses text, mapping JSON syntax errors to ParseError.
json parse_text(const std::string& text);

}  // namespace tropkit::json_io
