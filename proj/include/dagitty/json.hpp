#pragma once

// JSON encodings of analysis results. The CLI's --json output and the
// request/response service share these, so both speak one schema.

#include <json.hpp>

#include <string>
#include <vector>

#include "dagitty/graph.hpp"
#include "dagitty/identification.hpp"
#include "dagitty/implications.hpp"
#include "dagitty/paths.hpp"
#include "dagitty/transforms.hpp"

namespace dagitty::json {

using nlohmann::json;

inline json names(const NodeSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

inline json edges(const EdgeSet& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back({{"source", e.source}, {"target", e.target}});
  return out;
}

inline json dag(const Dag& g) {
  json vars = json::array();
  for (const auto& v : g.variables()) {
    json j = {{"name", v.name}, {"status", status_name(v.status)}};
    if (v.layout) j["layout"] = {{"x", v.layout->x}, {"y", v.layout->y}};
    vars.push_back(std::move(j));
  }
  json es = json::array();
  for (const auto& e : g.edges()) es.push_back({{"source", e.source}, {"target", e.target}});
  return {{"variables", std::move(vars)}, {"edges", std::move(es)}};
}

inline json adjustment(const AdjustmentReport& r) {
  json sets = json::array();
  for (const auto& s : r.sets) sets.push_back(names(s));
  return {{"effect", effect_name(r.effect)}, {"feasible", r.feasible}, {"sets", std::move(sets)}};
}

inline json instruments(const std::vector<InstrumentResult>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back({{"instrument", r.instrument}, {"conditioning_set", names(r.conditioning_set)}});
  return {{"instruments", std::move(out)}};
}

inline json implications(const std::vector<IndependenceStatement>& ss) {
  json out = json::array();
  for (const auto& s : ss) out.push_back({{"x", s.x}, {"y", s.y}, {"given", names(s.given)}});
  return {{"implications", std::move(out)}};
}

inline json path(const Path& p) {
  json dirs = json::array();
  for (auto d : p.directions) dirs.push_back(d == Direction::Forward ? "->" : "<-");
  return {{"vertices", p.vertices}, {"directions", std::move(dirs)}};
}

inline json undirected(const UndirectedGraph& u, const std::string& kind) {
  json lines = json::array();
  for (const auto& [a, b] : u.lines) lines.push_back({a, b});
  return {{"kind", kind}, {"vertices", u.vertices}, {"lines", std::move(lines)}};
}

inline json highlight(const Highlight& h) { return {{"causal", edges(h.causal)}, {"biasing", edges(h.biasing)}}; }

inline json relevance(const RelevanceColoring& c) {
  json out = json::object();
  for (const auto& [name, r] : c) out[name] = relevance_name(r);
  return out;
}

}  // namespace dagitty::json
