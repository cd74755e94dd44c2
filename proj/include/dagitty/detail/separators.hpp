#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stop_token>
#include <vector>

#include "dagitty/detail/reachability.hpp"
#include "dagitty/errors.hpp"
#include "dagitty/graph.hpp"

// Vertex separators in undirected graphs. Every d-separation question that
// the identification and implication code enumerates is first reduced to
// separation in the moral graph of an ancestral set, then solved here.

namespace dagitty::detail {

using Neighbors = std::vector<std::vector<std::size_t>>;

/// Moral graph of the subgraph induced by `keep`: skeleton plus a line
/// between every two parents of a common child. Indices are those of `adj`;
/// vertices outside `keep` are isolated.
inline Neighbors moral_graph(const Adjacency& adj, const std::vector<bool>& keep) {
  const std::size_t n = adj.size();
  std::vector<std::vector<bool>> line(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    const auto& ps = adj.parents[v];
    for (std::size_t a = 0; a < ps.size(); ++a) {
      if (!keep[ps[a]]) continue;
      line[ps[a]][v] = line[v][ps[a]] = true;
      for (std::size_t b = a + 1; b < ps.size(); ++b)
        if (keep[ps[b]]) line[ps[a]][ps[b]] = line[ps[b]][ps[a]] = true;
    }
  }
  Neighbors out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (line[a][b]) out[a].push_back(b);
  return out;
}

/// Minimal vertex separators between two vertex sets of an undirected graph,
/// where only `removable` vertices may belong to a separator.
///
/// The sets are contracted into a super source and a super sink. A minimal
/// separator is determined by its source-side component, so separators are
/// listed by branching on which boundary vertex joins the source side next;
/// each branch is pruned unless the separator closest to its source side
/// respects the branch constraints, which gives one separator per search node.
class SeparatorSearch {
 public:
  SeparatorSearch(const Neighbors& graph, const std::vector<std::size_t>& sources,
                  const std::vector<std::size_t>& sinks, const std::vector<bool>& removable)
      : n_(graph.size()), s_(n_), t_(n_ + 1), nbrs_(graph), removable_(removable) {
    nbrs_.resize(n_ + 2);
    removable_.resize(n_ + 2, false);
    for (auto x : sources) link(s_, x);
    for (auto y : sinks) link(t_, y);
  }

  /// Calls `emit` with every minimal separator (sorted indices). Separators
  /// are produced source-side-closest first.
  void list(const std::function<void(const std::vector<std::size_t>&)>& emit, std::stop_token stop = {}) const {
    std::vector<bool> side(n_ + 2, false);
    side[s_] = true;
    std::vector<bool> excluded(n_ + 2, false);
    recurse(side, excluded, emit, stop);
  }

  /// The minimal separator lying closest to the sink side, if any.
  std::optional<std::vector<std::size_t>> closest_to_sink() const {
    std::vector<bool> side(n_ + 2, false);
    side[t_] = true;
    const auto c = absorb(side);
    if (c[s_]) return std::nullopt;
    const auto boundary = neighborhood(c);
    auto blocked = c;
    for (std::size_t v = 0; v < n_ + 2; ++v)
      if (boundary[v]) blocked[v] = true;
    const auto d = component(s_, blocked);
    return members(neighborhood(d));
  }

 private:
  void link(std::size_t a, std::size_t b) {
    nbrs_[a].push_back(b);
    nbrs_[b].push_back(a);
  }

  // Grows `seed` through non-removable vertices: those can never separate,
  // so they share the side of any neighbour.
  std::vector<bool> absorb(const std::vector<bool>& seed) const {
    std::vector<bool> in = seed;
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < in.size(); ++v)
      if (in[v]) stack.push_back(v);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : nbrs_[v])
        if (!in[w] && !removable_[w]) {
          in[w] = true;
          stack.push_back(w);
        }
    }
    return in;
  }

  std::vector<bool> neighborhood(const std::vector<bool>& set) const {
    std::vector<bool> out(n_ + 2, false);
    for (std::size_t v = 0; v < n_ + 2; ++v)
      if (set[v])
        for (auto w : nbrs_[v])
          if (!set[w]) out[w] = true;
    return out;
  }

  std::vector<bool> component(std::size_t start, const std::vector<bool>& blocked) const {
    std::vector<bool> in(n_ + 2, false);
    if (blocked[start]) return in;
    in[start] = true;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : nbrs_[v])
        if (!in[w] && !blocked[w]) {
          in[w] = true;
          stack.push_back(w);
        }
    }
    return in;
  }

  static std::vector<std::size_t> members(const std::vector<bool>& mask) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < mask.size(); ++v)
      if (mask[v]) out.push_back(v);
    return out;
  }

  // side: vertices required on the source side; excluded: vertices required
  // off it (in the separator or beyond).
  void recurse(const std::vector<bool>& side, std::vector<bool> excluded,
               const std::function<void(const std::vector<std::size_t>&)>& emit, std::stop_token& stop) const {
    if (stop.stop_requested()) throw Cancelled("separator enumeration cancelled");
    const auto c = absorb(side);
    if (c[t_]) return;
    for (std::size_t v = 0; v < n_ + 2; ++v)
      if (c[v] && excluded[v]) return;

    auto blocked = c;
    const auto boundary = neighborhood(c);
    for (std::size_t v = 0; v < n_ + 2; ++v)
      if (boundary[v]) blocked[v] = true;
    const auto sink_side = component(t_, blocked);
    const auto sep = neighborhood(sink_side);
    const auto source_side = component(s_, sep);
    for (std::size_t v = 0; v < n_ + 2; ++v)
      if (source_side[v] && excluded[v]) return;

    const auto separator = members(sep);
    emit(separator);

    for (auto v : separator) {
      if (excluded[v]) continue;
      auto next = source_side;
      next[v] = true;
      recurse(next, excluded, emit, stop);
      excluded[v] = true;
    }
  }

  std::size_t n_;
  std::size_t s_;
  std::size_t t_;
  Neighbors nbrs_;
  std::vector<bool> removable_;
};

}  // namespace dagitty::detail
