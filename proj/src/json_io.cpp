#include "sroman/json_io.hpp"

#include <limits>

#include "sroman/errors.hpp"
#include "sroman/graph_io.hpp"

namespace sroman {

Json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return Json(x.convert_to<std::uint64_t>());
  if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return Json(x.convert_to<std::int64_t>());
  return Json(x.str());
}

Json roman_to_json(const RomanFunction& f, const Graph& g) {
  Json j;
  j["graph"] = graph_hash(g);
  j["labels"] = Json::array();
  for (auto x : f.labels()) j["labels"].push_back(static_cast<int>(x));
  j["weight"] = f.weight();
  return j;
}

Json roman_to_json(const RomanFunction& f, const SierpinskiGraph& s) {
  Json j = roman_to_json(f, s.graph());
  Json words = Json::object();
  for (Vertex v = 0; v < s.order(); ++v) words[s.word_label(v)] = f[v];
  j["words"] = std::move(words);
  return j;
}

RomanFunction roman_from_json(const Json& j, const Graph& g) {
  const Json* labels = &j;
  if (j.is_object()) {
    if (j.contains("graph") && j["graph"] != graph_hash(g))
      throw InputError("function was written for a different graph");
    if (!j.contains("labels")) throw InputError("function JSON has no \"labels\" array");
    labels = &j["labels"];
  }
  if (!labels->is_array()) throw InputError("\"labels\" must be an array");
  std::vector<std::uint8_t> out;
  for (const auto& x : *labels) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 2)
      throw InputError("labels must be 0, 1 or 2");
    out.push_back(static_cast<std::uint8_t>(x.get<int>()));
  }
  if (out.size() != g.order()) {
    throw InputError("function has " + std::to_string(out.size()) + " labels, graph has " +
                     std::to_string(g.order()) + " vertices");
  }
  return RomanFunction(std::move(out));
}

Json certificate_to_json(const Certificate& c, const Graph& g, bool with_stats) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["value"] = c.value;
  j["method"] = c.method;
  j["graph"] = graph_hash(g);
  j["order"] = g.order();
  if (c.kind == Problem::domination) {
    j["dominating_set"] = c.dominating_set;
  } else {
    j["function"] = roman_to_json(c.function, g);
  }
  if (with_stats) {
    j["stats"] = {{"nodes", c.stats.nodes}, {"passes", c.stats.passes}, {"elapsed_seconds", c.stats.elapsed_seconds}};
  }
  return j;
}

Json value_or_bounds_to_json(const ValueOrBounds& v) {
  Json j;
  j["exact"] = v.exact ? big_to_json(*v.exact) : Json(nullptr);
  j["lower"] = v.lower ? big_to_json(*v.lower) : Json(nullptr);
  j["upper"] = v.upper ? big_to_json(*v.upper) : Json(nullptr);
  return j;
}

Json sierpinski_metadata(const SierpinskiGraph& s) {
  Json j;
  j["base_order"] = s.base_order();
  j["depth"] = s.depth();
  j["vertices"] = s.order();
  j["edges"] = s.graph().size();
  j["extreme_vertices"] = Json::array();
  for (Vertex v : s.extreme_vertices()) j["extreme_vertices"].push_back(s.word_label(v));
  return j;
}

Json report_to_json(const ConstructionReport& r) {
  Json j;
  j["family"] = r.family;
  j["graph"] = sierpinski_metadata(r.graph);
  j["predicted_weight"] = big_to_json(r.predicted_weight);
  j["actual_weight"] = r.actual_weight;
  j["valid"] = r.valid;
  j["steps_applied"] = r.steps_applied;
  j["step_weights"] = r.step_weights;
  j["notes"] = r.notes;
  j["lower_bound"] = r.lower_bound ? big_to_json(*r.lower_bound) : Json(nullptr);
  j["upper_bound"] = r.upper_bound ? big_to_json(*r.upper_bound) : Json(nullptr);
  j["function"] = roman_to_json(r.function, r.graph);
  return j;
}

}  // namespace sroman
