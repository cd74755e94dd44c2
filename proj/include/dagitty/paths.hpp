#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dagitty/detail/reachability.hpp"
#include "dagitty/errors.hpp"
#include "dagitty/graph.hpp"

namespace dagitty {

enum class Direction { Forward, Backward };
enum class PathClass { Causal, Biasing };

/// A simple path. directions[i] says whether the arrow between vertices[i]
/// and vertices[i + 1] points forward (vertices[i] -> vertices[i + 1]).
struct Path {
  std::vector<std::string> vertices;
  std::vector<Direction> directions;

  std::size_t length() const noexcept { return directions.size(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.directions < b.directions;
  }
};

/// "a <- b -> c"; `label` maps a variable name to its display form.
inline std::string to_string(const Path& p, const std::function<std::string(const std::string&)>& label = {}) {
  auto show = [&](const std::string& n) { return label ? label(n) : n; };
  std::string out = p.vertices.empty() ? std::string() : show(p.vertices.front());
  for (std::size_t i = 0; i < p.directions.size(); ++i) {
    out += p.directions[i] == Direction::Forward ? " -> " : " <- ";
    out += show(p.vertices[i + 1]);
  }
  return out;
}

namespace detail {

inline void require_disjoint(const NodeSet& a, const NodeSet& b, const char* what) {
  for (const auto& v : a)
    if (b.contains(v)) throw InvalidQuery(std::string(what) + ": '" + v + "' appears in both sets");
}

inline std::vector<bool> index_mask(const Dag& g, const NodeSet& s) { return mask_of(g.size(), g.indices(s)); }

inline void require_roles(const Dag& g) {
  if (g.exposures().empty() || g.outcomes().empty())
    throw MissingRoles("the diagram must contain at least one exposure and at least one outcome");
}

}  // namespace detail

/// Every simple path from a vertex of `from` to a vertex of `to` whose
/// interior avoids both sets, sorted by vertex sequence.
inline std::vector<Path> enumerate_paths(const Dag& g, const NodeSet& from, const NodeSet& to,
                                         std::optional<std::size_t> max_length = std::nullopt) {
  if (from.empty() || to.empty()) throw InvalidQuery("path endpoints must be non-empty sets");
  detail::require_disjoint(from, to, "path query");
  const auto source = detail::index_mask(g, from);
  const auto target = detail::index_mask(g, to);

  std::vector<Path> out;
  std::vector<std::size_t> stack_v;
  std::vector<Direction> stack_d;
  std::vector<bool> on_path(g.size(), false);

  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    if (target[v]) {
      Path p;
      for (auto i : stack_v) p.vertices.push_back(g.name(i));
      p.directions = stack_d;
      out.push_back(std::move(p));
      return;
    }
    if (max_length && stack_d.size() >= *max_length) return;
    auto step = [&](std::size_t w, Direction d) {
      if (on_path[w] || source[w]) return;
      on_path[w] = true;
      stack_v.push_back(w);
      stack_d.push_back(d);
      extend(w);
      stack_v.pop_back();
      stack_d.pop_back();
      on_path[w] = false;
    };
    for (auto c : g.children(v)) step(c, Direction::Forward);
    for (auto p : g.parents(v)) step(p, Direction::Backward);
  };

  for (auto s : g.indices(from)) {
    on_path[s] = true;
    stack_v.assign(1, s);
    stack_d.clear();
    extend(s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void validate_path(const Dag& g, const Path& p) {
  if (p.vertices.empty() || p.vertices.size() != p.directions.size() + 1)
    throw InvalidQuery("malformed path");
  std::vector<bool> seen(g.size(), false);
  for (const auto& v : p.vertices) {
    auto i = g.index_of(v);
    if (seen[i]) throw InvalidQuery("path repeats vertex '" + v + "'");
    seen[i] = true;
  }
  for (std::size_t i = 0; i < p.directions.size(); ++i) {
    const auto& a = p.vertices[i];
    const auto& b = p.vertices[i + 1];
    const bool ok = p.directions[i] == Direction::Forward ? g.has_edge(a, b) : g.has_edge(b, a);
    if (!ok) throw InvalidQuery("path step " + a + " / " + b + " is not an arrow of the diagram");
  }
}

/// A path is closed by z if it has a chain or fork vertex in z, or a collider
/// c such that neither c nor any descendant of c is in z.
inline bool is_path_open(const Dag& g, const Path& p, const NodeSet& z) {
  validate_path(g, p);
  const auto in_z = detail::index_mask(g, z);
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    const auto m = g.index_of(p.vertices[i]);
    const bool collider = p.directions[i - 1] == Direction::Forward && p.directions[i] == Direction::Backward;
    if (!collider) {
      if (in_z[m]) return false;
      continue;
    }
    const auto below = g.descendant_mask({m});
    bool activated = false;
    for (std::size_t v = 0; v < g.size() && !activated; ++v) activated = below[v] && in_z[v];
    if (!activated) return false;
  }
  return true;
}

/// True iff every path between x and y is closed by z.
inline bool d_separated(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  if (x.empty() || y.empty()) throw InvalidQuery("d-separation needs non-empty sets");
  detail::require_disjoint(x, y, "d-separation query");
  detail::require_disjoint(x, z, "d-separation query");
  detail::require_disjoint(y, z, "d-separation query");
  return !detail::d_connected(g.adjacency(), g.indices(x), detail::index_mask(g, y), detail::index_mask(g, z));
}

inline PathClass classify_path(const Dag& g, const Path& p) {
  validate_path(g, p);
  if (g.variable(p.vertices.front()).status != VariableStatus::Exposure ||
      g.variable(p.vertices.back()).status != VariableStatus::Outcome)
    throw InvalidQuery("path must lead from an exposure to an outcome");
  const bool causal = std::all_of(p.directions.begin(), p.directions.end(),
                                  [](Direction d) { return d == Direction::Forward; });
  return causal ? PathClass::Causal : PathClass::Biasing;
}

inline std::vector<Edge> path_edges(const Path& p) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < p.directions.size(); ++i) {
    if (p.directions[i] == Direction::Forward)
      out.push_back({p.vertices[i], p.vertices[i + 1]});
    else
      out.push_back({p.vertices[i + 1], p.vertices[i]});
  }
  return out;
}

struct Highlight {
  EdgeSet causal;
  EdgeSet biasing;
};

/// Arrows on open causal and open biasing exposure-outcome paths, with the
/// Adjusted variables as conditioning set.
inline Highlight highlight_edges(const Dag& g) {
  detail::require_roles(g);
  const auto z = g.adjusted();
  Highlight h;
  for (const auto& p : enumerate_paths(g, g.exposures(), g.outcomes())) {
    if (!is_path_open(g, p, z)) continue;
    auto& bucket = classify_path(g, p) == PathClass::Causal ? h.causal : h.biasing;
    for (auto& e : path_edges(p)) bucket.insert(std::move(e));
  }
  return h;
}

struct ClassifiedPath {
  Path path;
  PathClass kind;
  bool open;
};

/// Exposure-outcome paths with their class and status under the Adjusted
/// variables, in enumeration order, at most `limit` of them.
inline std::vector<ClassifiedPath> classified_paths(const Dag& g, std::optional<std::size_t> limit = std::nullopt) {
  detail::require_roles(g);
  const auto z = g.adjusted();
  std::vector<ClassifiedPath> out;
  for (auto& p : enumerate_paths(g, g.exposures(), g.outcomes())) {
    if (limit && out.size() >= *limit) break;
    const auto kind = classify_path(g, p);
    const bool open = is_path_open(g, p, z);
    out.push_back({std::move(p), kind, open});
  }
  return out;
}

/// Arrows u -> v with no other directed path from u to v.
inline EdgeSet atomic_direct_effects(const Dag& g) {
  EdgeSet out;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (auto v : g.children(u)) {
      std::vector<bool> seed(g.size(), false);
      for (auto w : g.children(u))
        if (w != v) seed[w] = true;
      if (!detail::descendants(g.adjacency(), seed)[v]) out.insert({g.name(u), g.name(v)});
    }
  }
  return out;
}

}  // namespace dagitty
