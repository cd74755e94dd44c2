#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dagitty/detail/reachability.hpp"
#include "dagitty/detail/separators.hpp"
#include "dagitty/graph.hpp"
#include "dagitty/paths.hpp"

namespace dagitty {

/// Undirected derived graph. Lines are stored with the endpoints in
/// lexicographic order.
struct UndirectedGraph {
  std::vector<std::string> vertices;
  std::set<std::pair<std::string, std::string>> lines;

  static std::pair<std::string, std::string> line(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
  }
  bool has_line(const std::string& a, const std::string& b) const { return lines.contains(line(a, b)); }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;
};

enum class Relevance { AncestorOfExposure, AncestorOfOutcome, AncestorOfBoth, Irrelevant, ExposureOrOutcome };

using RelevanceColoring = std::map<std::string, Relevance>;

constexpr std::string_view relevance_name(Relevance r) noexcept {
  switch (r) {
    case Relevance::AncestorOfExposure: return "ancestor-of-exposure";
    case Relevance::AncestorOfOutcome: return "ancestor-of-outcome";
    case Relevance::AncestorOfBoth: return "ancestor-of-both";
    case Relevance::Irrelevant: return "irrelevant";
    case Relevance::ExposureOrOutcome: return "exposure-or-outcome";
  }
  return "irrelevant";
}

/// Lines between every pair that is d-connected given the empty set.
inline UndirectedGraph correlation_graph(const Dag& g) {
  UndirectedGraph out;
  for (const auto& v : g.variables()) out.vertices.push_back(v.name);
  const std::vector<bool> none(g.size(), false);
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto reached = detail::open_reachable(g.adjacency(), {u}, none, none);
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (reached[v]) out.lines.insert(UndirectedGraph::line(g.name(u), g.name(v)));
  }
  return out;
}

namespace detail {

inline std::vector<bool> relevant_mask(const Dag& g) {
  require_roles(g);
  NodeSet seed = g.exposures();
  seed.merge(g.outcomes());
  seed.merge(g.adjusted());
  return g.ancestor_mask(g.indices(seed));
}

inline UndirectedGraph to_undirected(const Dag& g, const Neighbors& lines, const std::vector<bool>& keep) {
  UndirectedGraph out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (keep[v]) out.vertices.push_back(g.name(v));
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (auto b : lines[a])
      if (a < b) out.lines.insert(UndirectedGraph::line(g.name(a), g.name(b)));
  return out;
}

}  // namespace detail

/// Undirected graph that marries every pair of parents with a common child.
/// With `restrict_to_relevant` only ancestors of the exposures, outcomes and
/// adjusted variables are kept.
inline UndirectedGraph moral_graph(const Dag& g, bool restrict_to_relevant = false) {
  const auto keep = restrict_to_relevant ? detail::relevant_mask(g) : std::vector<bool>(g.size(), true);
  return detail::to_undirected(g, detail::moral_graph(g.adjacency(), keep), keep);
}

inline RelevanceColoring relevance_coloring(const Dag& g) {
  detail::require_roles(g);
  const auto of_exposure = g.ancestor_mask(g.indices(g.exposures()));
  const auto of_outcome = g.ancestor_mask(g.indices(g.outcomes()));
  RelevanceColoring out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto s = g.variable(v).status;
    Relevance r = Relevance::Irrelevant;
    if (s == VariableStatus::Exposure || s == VariableStatus::Outcome)
      r = Relevance::ExposureOrOutcome;
    else if (of_exposure[v] && of_outcome[v])
      r = Relevance::AncestorOfBoth;
    else if (of_exposure[v])
      r = Relevance::AncestorOfExposure;
    else if (of_outcome[v])
      r = Relevance::AncestorOfOutcome;
    out.emplace(g.name(v), r);
  }
  return out;
}

/// Subgraph induced by the ancestors of exposures, outcomes and adjusted
/// variables; adjustment sets are the same in both graphs.
inline Dag relevant_subgraph(const Dag& g) { return g.induced_subgraph(detail::relevant_mask(g)); }

/// Hand-checkable sufficiency test for total effects: no member of z
/// descends from an exposure, and after deleting the arrows that leave the
/// exposures, z separates exposures from outcomes in the moral graph of the
/// ancestors of exposures, outcomes and z.
inline bool moral_graph_separates(const Dag& g, const NodeSet& z) {
  detail::require_roles(g);
  const auto xs = g.indices(g.exposures());
  const auto ys = g.indices(g.outcomes());
  const auto zs = g.indices(z);
  const auto below_x = g.descendant_mask(xs);
  for (auto v : zs)
    if (below_x[v]) return false;
  const auto is_x = detail::mask_of(g.size(), xs);
  const auto back_door = detail::without_edges(g.adjacency(), [&](std::size_t s, std::size_t) { return is_x[s]; });
  auto seed = xs;
  seed.insert(seed.end(), ys.begin(), ys.end());
  seed.insert(seed.end(), zs.begin(), zs.end());
  const auto keep = detail::ancestors(back_door, detail::mask_of(g.size(), seed));
  const auto lines = detail::moral_graph(back_door, keep);
  const auto blocked = detail::mask_of(g.size(), zs);
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack;
  for (auto x : xs) {
    seen[x] = true;
    stack.push_back(x);
  }
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : lines[v])
      if (!seen[w] && !blocked[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (auto y : ys)
    if (seen[y]) return false;
  return true;
}

}  // namespace dagitty
