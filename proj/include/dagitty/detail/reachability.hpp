#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dagitty/graph.hpp"

namespace dagitty::detail {

inline std::vector<bool> mask_of(std::size_t n, const std::vector<std::size_t>& members) {
  std::vector<bool> m(n, false);
  for (auto i : members) m[i] = true;
  return m;
}

inline std::vector<bool> closure(const std::vector<std::vector<std::size_t>>& step, const std::vector<bool>& seed) {
  std::vector<bool> seen = seed;
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < seed.size(); ++v)
    if (seed[v]) stack.push_back(v);
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : step[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

inline std::vector<bool> ancestors(const Adjacency& adj, const std::vector<bool>& seed) {
  return closure(adj.parents, seed);
}

inline std::vector<bool> descendants(const Adjacency& adj, const std::vector<bool>& seed) {
  return closure(adj.children, seed);
}

/// Copy of `adj` without the arrows for which `drop(source, target)` holds.
template <class Pred>
Adjacency without_edges(const Adjacency& adj, Pred drop) {
  Adjacency out;
  out.parents.resize(adj.size());
  out.children.resize(adj.size());
  for (std::size_t s = 0; s < adj.size(); ++s)
    for (auto t : adj.children[s])
      if (!drop(s, t)) {
        out.children[s].push_back(t);
        out.parents[t].push_back(s);
      }
  return out;
}

/// Vertices reachable from `sources` along paths that are open given
/// `conditioned`. A collider passes when `collider_open` is set for it
/// (normally: the collider is an ancestor of a conditioned vertex).
/// Conditioned vertices are never reported as reached.
///
/// Search runs over (vertex, arrival direction) states, so it is linear in
/// the size of the graph.
inline std::vector<bool> open_reachable(const Adjacency& adj, const std::vector<std::size_t>& sources,
                                        const std::vector<bool>& conditioned, const std::vector<bool>& collider_open) {
  const std::size_t n = adj.size();
  enum : int { FromChild = 0, FromParent = 1 };
  std::vector<bool> visited(2 * n, false);
  std::vector<bool> reached(n, false);
  std::vector<std::pair<std::size_t, int>> stack;
  auto push = [&](std::size_t v, int dir) {
    if (!visited[2 * v + dir]) {
      visited[2 * v + dir] = true;
      stack.emplace_back(v, dir);
    }
  };
  for (auto s : sources) push(s, FromChild);
  while (!stack.empty()) {
    auto [v, dir] = stack.back();
    stack.pop_back();
    if (!conditioned[v]) reached[v] = true;
    if (dir == FromChild) {
      if (conditioned[v]) continue;
      for (auto p : adj.parents[v]) push(p, FromChild);
      for (auto c : adj.children[v]) push(c, FromParent);
    } else {
      if (!conditioned[v])
        for (auto c : adj.children[v]) push(c, FromParent);
      if (collider_open[v])
        for (auto p : adj.parents[v]) push(p, FromChild);
    }
  }
  return reached;
}

/// Standard d-connection test on `adj`: colliders open exactly when they are
/// ancestors (reflexively) of the conditioning set in the same graph.
inline bool d_connected(const Adjacency& adj, const std::vector<std::size_t>& x, const std::vector<bool>& y,
                        const std::vector<bool>& z) {
  const auto an_z = ancestors(adj, z);
  const auto reached = open_reachable(adj, x, z, an_z);
  for (std::size_t v = 0; v < y.size(); ++v)
    if (y[v] && reached[v]) return true;
  return false;
}

}  // namespace dagitty::detail
