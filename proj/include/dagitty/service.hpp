#pragma once

// Request/response boundary for interactive front ends. A request carries
// the current model code, a revision stamp and a query descriptor:
//
//   {"revision": 12, "model": "E E\nD O\n\nE D\n", "query": {"kind": "adjust", "effect": "total"}}
//
// and the response echoes the revision so that a client can discard results
// for superseded diagrams:
//
//   {"revision": 12, "ok": true, "model": "<canonical model code>", "result": {...}}
//   {"revision": 12, "ok": false, "error": {"kind": "MissingRoles", "message": "...", "line": null}}

#include <json.hpp>

#include <optional>
#include <stop_token>
#include <string>

#include "dagitty/errors.hpp"
#include "dagitty/graph.hpp"
#include "dagitty/identification.hpp"
#include "dagitty/implications.hpp"
#include "dagitty/json.hpp"
#include "dagitty/model_code.hpp"
#include "dagitty/paths.hpp"
#include "dagitty/transforms.hpp"

namespace dagitty::service {

using nlohmann::json;

namespace detail {

inline NodeSet name_list(const json& q, const char* key) {
  NodeSet out;
  if (q.contains(key))
    for (const auto& v : q.at(key)) out.insert(v.get<std::string>());
  return out;
}

inline EffectKind effect_of(const json& q) {
  const auto e = q.value("effect", std::string("total"));
  if (e == "total") return EffectKind::Total;
  if (e == "direct") return EffectKind::Direct;
  throw InvalidQuery("unknown effect '" + e + "'");
}

inline json run_query(const Dag& g, const json& q, std::stop_token stop) {
  const auto kind = q.at("kind").get<std::string>();
  if (kind == "validate") return {{"valid", true}, {"variables", g.size()}, {"edges", g.edge_count()}};
  if (kind == "adjust") return dagitty::json::adjustment(list_minimal_adjustment_sets(g, effect_of(q), stop));
  if (kind == "instruments") return dagitty::json::instruments(find_instruments(g));
  if (kind == "implications") return dagitty::json::implications(testable_implications(g, stop));
  if (kind == "highlight") return dagitty::json::highlight(highlight_edges(g));
  if (kind == "relevance") return dagitty::json::relevance(relevance_coloring(g));
  if (kind == "atomic") return {{"edges", dagitty::json::edges(atomic_direct_effects(g))}};
  if (kind == "moral") return dagitty::json::undirected(moral_graph(g, q.value("restrict", false)), "moral");
  if (kind == "correlation") return dagitty::json::undirected(correlation_graph(g), "correlation");
  if (kind == "dsep") {
    const auto x = name_list(q, "x"), y = name_list(q, "y"), z = name_list(q, "given");
    return {{"x", dagitty::json::names(x)},
            {"y", dagitty::json::names(y)},
            {"given", dagitty::json::names(z)},
            {"d_separated", d_separated(g, x, y, z)}};
  }
  if (kind == "paths") {
    std::optional<std::size_t> limit;
    if (q.contains("limit")) limit = q.at("limit").get<std::size_t>();
    json out = json::array();
    for (const auto& cp : classified_paths(g, limit)) {
      auto j = dagitty::json::path(cp.path);
      j["class"] = cp.kind == PathClass::Causal ? "causal" : "biasing";
      j["open"] = cp.open;
      out.push_back(std::move(j));
    }
    return {{"paths", std::move(out)}};
  }
  throw InvalidQuery("unknown query kind '" + kind + "'");
}

}  // namespace detail

inline json error_response(const json& revision, const std::string& kind, const std::string& message,
                           std::optional<std::size_t> line = std::nullopt) {
  return {{"revision", revision},
          {"ok", false},
          {"error", {{"kind", kind}, {"message", message}, {"line", line ? json(*line) : json(nullptr)}}}};
}

/// Answers one request. Never throws for malformed input; errors are
/// reported in the response.
inline json handle(const json& request, std::stop_token stop = {}) {
  const json revision = request.is_object() ? request.value("revision", json(nullptr)) : json(nullptr);
  try {
    const auto text = request.at("model").get<std::string>();
    const auto g = model_code::parse(text);
    const auto& query = request.at("query");
    return {{"revision", revision},
            {"ok", true},
            {"model", model_code::serialize(g)},
            {"result", detail::run_query(g, query, stop)}};
  } catch (const Error& e) {
    return error_response(revision, e.kind(), e.what(), e.line());
  } catch (const nlohmann::json::exception& e) {
    return error_response(revision, "BadRequest", e.what());
  }
}

}  // namespace dagitty::service
