#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "dagitty/detail/reachability.hpp"
#include "dagitty/detail/separators.hpp"
#include "dagitty/errors.hpp"
#include "dagitty/graph.hpp"
#include "dagitty/paths.hpp"

namespace dagitty {

enum class EffectKind { Total, Direct };

constexpr std::string_view effect_name(EffectKind e) noexcept { return e == EffectKind::Total ? "total" : "direct"; }

struct AdjustmentReport {
  EffectKind effect = EffectKind::Total;
  std::vector<NodeSet> sets;
  bool feasible = false;
};

struct InstrumentResult {
  std::string instrument;
  NodeSet conditioning_set;
  friend auto operator<=>(const InstrumentResult&, const InstrumentResult&) = default;
};

/// Orders sets by cardinality, then lexicographically.
inline void sort_node_sets(std::vector<NodeSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

namespace detail {

inline void require_single_roles(const Dag& g) {
  if (g.exposures().size() != 1 || g.outcomes().size() != 1)
    throw MultipleRoles("instrumental variables need exactly one exposure and one outcome");
}

inline void require_free_of_roles(const Dag& g, const NodeSet& z) {
  for (const auto& v : z) {
    const auto s = g.variable(v).status;
    if (s == VariableStatus::Exposure || s == VariableStatus::Outcome)
      throw OverlappingRoles("'" + v + "' is an exposure or outcome");
  }
}

// The graph in which an effect's sufficiency reduces to plain d-separation:
// for total effects the arrows leaving exposures are dropped (only paths
// entering an exposure remain to be closed); for direct effects the
// exposure -> outcome arrows are dropped.
inline Adjacency effect_graph(const Dag& g, EffectKind effect) {
  const auto is_x = index_mask(g, g.exposures());
  const auto is_y = index_mask(g, g.outcomes());
  if (effect == EffectKind::Total)
    return without_edges(g.adjacency(), [&](std::size_t s, std::size_t) { return is_x[s]; });
  return without_edges(g.adjacency(), [&](std::size_t s, std::size_t t) { return is_x[s] && is_y[t]; });
}

inline Adjacency without_direct_arrow(const Dag& g, std::size_t x, std::size_t y) {
  return without_edges(g.adjacency(), [&](std::size_t s, std::size_t t) { return s == x && t == y; });
}

}  // namespace detail

/// Total: every biasing exposure-outcome path is closed, every causal path
/// stays open and no member of z descends from an exposure. Direct: every
/// exposure-outcome path except the exposure -> outcome arrows is closed
/// (evaluated in the diagram without those arrows).
inline bool is_sufficient_adjustment(const Dag& g, const NodeSet& z, EffectKind effect) {
  detail::require_roles(g);
  detail::require_free_of_roles(g, z);
  const auto zs = g.indices(z);
  const auto xs = g.indices(g.exposures());
  if (effect == EffectKind::Total) {
    const auto below = g.descendant_mask(xs);
    for (auto v : zs)
      if (below[v]) return false;
  }
  const auto work = detail::effect_graph(g, effect);
  return !detail::d_connected(work, xs, detail::index_mask(g, g.outcomes()), detail::mask_of(g.size(), zs));
}

/// All minimal sufficient adjustment sets that contain every Adjusted
/// variable and no Unobserved one. Minimality is relative to the Adjusted
/// variables: no proper subset that still contains them is sufficient.
inline AdjustmentReport list_minimal_adjustment_sets(const Dag& g, EffectKind effect, std::stop_token stop = {}) {
  detail::require_roles(g);
  AdjustmentReport report{effect, {}, false};
  const auto xs = g.indices(g.exposures());
  const auto ys = g.indices(g.outcomes());
  const auto forced = g.indices(g.adjusted());
  const auto is_forced = detail::mask_of(g.size(), forced);

  std::vector<bool> forbidden(g.size(), false);
  if (effect == EffectKind::Total) {
    forbidden = g.descendant_mask(xs);
    for (auto v : forced)
      if (forbidden[v]) return report;
  }

  const auto work = detail::effect_graph(g, effect);
  auto seed = xs;
  seed.insert(seed.end(), ys.begin(), ys.end());
  seed.insert(seed.end(), forced.begin(), forced.end());
  const auto relevant = detail::ancestors(work, detail::mask_of(g.size(), seed));

  // Forced variables are conditioned on in every candidate, which in the
  // moral graph amounts to deleting them.
  auto lines = detail::moral_graph(work, relevant);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (is_forced[v])
      lines[v].clear();
    else
      std::erase_if(lines[v], [&](std::size_t w) { return is_forced[w]; });
  }
  std::vector<bool> removable(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto s = g.variable(v).status;
    removable[v] = relevant[v] && !forbidden[v] && !is_forced[v] && s != VariableStatus::Unobserved &&
                   s != VariableStatus::Exposure && s != VariableStatus::Outcome;
  }

  detail::SeparatorSearch search(lines, xs, ys, removable);
  search.list(
      [&](const std::vector<std::size_t>& sep) {
        NodeSet set = g.adjusted();
        for (auto v : sep) set.insert(g.name(v));
        report.sets.push_back(std::move(set));
      },
      stop);
  sort_node_sets(report.sets);
  report.feasible = !report.sets.empty();
  return report;
}

/// Conditional instrument test for the single exposure X and outcome Y:
/// (1) i is d-connected to X given w, (2) i is d-separated from Y given w in
/// the diagram without the arrow X -> Y, and w holds no descendant of Y.
inline bool is_instrument(const Dag& g, std::string_view i, const NodeSet& w) {
  detail::require_single_roles(g);
  const auto x = g.index_of(*g.exposures().begin());
  const auto y = g.index_of(*g.outcomes().begin());
  const auto iv = g.index_of(i);
  if (iv == x || iv == y) throw InvalidQuery("the instrument must differ from exposure and outcome");
  for (const auto& v : w) {
    const auto k = g.index_of(v);
    if (k == iv || k == x || k == y)
      throw InvalidQuery("conditioning set must not contain instrument, exposure or outcome");
    if (!g.observed(k)) throw InvalidQuery("conditioning set must not contain unobserved '" + v + "'");
  }
  if (!g.observed(iv)) return false;
  const auto ws = g.indices(w);
  const auto below_y = g.descendant_mask({y});
  for (auto v : ws)
    if (below_y[v]) return false;
  const auto wmask = detail::mask_of(g.size(), ws);
  if (!detail::d_connected(g.adjacency(), {iv}, detail::mask_of(g.size(), {x}), wmask)) return false;
  const auto cut = detail::without_direct_arrow(g, x, y);
  return !detail::d_connected(cut, {iv}, detail::mask_of(g.size(), {y}), wmask);
}

/// Ancestral instruments: for each candidate i the conditioning set is the
/// separator of i and Y, among observed ancestors of {i, Y} in the diagram
/// without X -> Y, that lies nearest to Y. At least one instrument is found
/// whenever any conditional instrument exists.
inline std::vector<InstrumentResult> find_instruments(const Dag& g) {
  detail::require_single_roles(g);
  const auto x = g.index_of(*g.exposures().begin());
  const auto y = g.index_of(*g.outcomes().begin());
  const auto cut = detail::without_direct_arrow(g, x, y);
  const auto below_y = g.descendant_mask({y});

  std::vector<InstrumentResult> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == x || i == y || !g.observed(i)) continue;
    const auto relevant = detail::ancestors(cut, detail::mask_of(g.size(), {i, y}));
    std::vector<bool> removable(g.size(), false);
    for (std::size_t v = 0; v < g.size(); ++v)
      removable[v] = relevant[v] && g.observed(v) && !below_y[v] && v != i && v != x && v != y;
    detail::SeparatorSearch search(detail::moral_graph(cut, relevant), {i}, {y}, removable);
    auto sep = search.closest_to_sink();
    if (!sep) continue;
    if (!detail::d_connected(g.adjacency(), {i}, detail::mask_of(g.size(), {x}), detail::mask_of(g.size(), *sep)))
      continue;
    InstrumentResult r{g.name(i), {}};
    for (auto v : *sep) r.conditioning_set.insert(g.name(v));
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dagitty
