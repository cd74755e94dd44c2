#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <stop_token>
#include <string>
#include <vector>

#include "dagitty/detail/reachability.hpp"
#include "dagitty/detail/separators.hpp"
#include "dagitty/errors.hpp"
#include "dagitty/graph.hpp"
#include "dagitty/identification.hpp"

namespace dagitty {

/// "x is independent of y given `given`", implied by d-separation.
struct IndependenceStatement {
  std::string x;
  std::string y;
  NodeSet given;
  friend bool operator==(const IndependenceStatement&, const IndependenceStatement&) = default;
};

/// Renders as `X _||_ Y | Z1, Z2`, or `X _||_ Y` when nothing is given.
inline std::string to_string(const IndependenceStatement& s,
                             const std::function<std::string(const std::string&)>& label = {}) {
  auto show = [&](const std::string& n) { return label ? label(n) : n; };
  std::string out = show(s.x) + " _||_ " + show(s.y);
  if (!s.given.empty()) {
    out += " |";
    bool first = true;
    for (const auto& z : s.given) {
      out += first ? " " : ", ";
      out += show(z);
      first = false;
    }
  }
  return out;
}

/// Inclusion-minimal subsets of `allowed` that d-separate x and y. Only
/// ancestors of x and y can occur in a minimal separator, so the search runs
/// in the moral graph of that ancestral set.
inline std::vector<NodeSet> minimal_separators(const Dag& g, std::string_view x, std::string_view y,
                                               const NodeSet& allowed, std::stop_token stop = {}) {
  const auto xi = g.index_of(x);
  const auto yi = g.index_of(y);
  if (xi == yi) throw InvalidQuery("separator query needs two distinct variables");
  if (allowed.contains(x) || allowed.contains(y)) throw InvalidQuery("allowed set must exclude both endpoints");
  const auto relevant = detail::ancestors(g.adjacency(), detail::mask_of(g.size(), {xi, yi}));
  auto removable = detail::index_mask(g, allowed);
  for (std::size_t v = 0; v < g.size(); ++v) removable[v] = removable[v] && relevant[v];

  std::vector<NodeSet> out;
  if (g.adjacent(xi, yi)) return out;
  detail::SeparatorSearch search(detail::moral_graph(g.adjacency(), relevant), {xi}, {yi}, removable);
  search.list(
      [&](const std::vector<std::size_t>& sep) {
        NodeSet s;
        for (auto v : sep) s.insert(g.name(v));
        out.push_back(std::move(s));
      },
      stop);
  sort_node_sets(out);
  return out;
}

/// One statement per minimal observed separator of every non-adjacent pair
/// of observed variables. Sorted by (x, y), then by separator.
inline std::vector<IndependenceStatement> testable_implications(const Dag& g, std::stop_token stop = {}) {
  NodeSet observed;
  for (const auto& v : g.variables())
    if (v.status != VariableStatus::Unobserved) observed.insert(v.name);

  std::vector<IndependenceStatement> out;
  for (auto a = observed.begin(); a != observed.end(); ++a) {
    for (auto b = std::next(a); b != observed.end(); ++b) {
      if (g.adjacent(g.index_of(*a), g.index_of(*b))) continue;
      NodeSet allowed = observed;
      allowed.erase(*a);
      allowed.erase(*b);
      for (auto& z : minimal_separators(g, *a, *b, allowed, stop)) out.push_back({*a, *b, std::move(z)});
    }
  }
  return out;
}

}  // namespace dagitty
