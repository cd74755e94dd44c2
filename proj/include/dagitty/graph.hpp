#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dagitty/errors.hpp"

namespace dagitty {

enum class VariableStatus { Exposure, Outcome, Adjusted, Unobserved, Other };

/// Single-character status code used in model code ("E", "O", "A", "U", "1").
constexpr char status_code(VariableStatus s) noexcept {
  switch (s) {
    case VariableStatus::Exposure: return 'E';
    case VariableStatus::Outcome: return 'O';
    case VariableStatus::Adjusted: return 'A';
    case VariableStatus::Unobserved: return 'U';
    case VariableStatus::Other: return '1';
  }
  return '1';
}

constexpr std::optional<VariableStatus> status_from_code(std::string_view code) noexcept {
  if (code.size() != 1) return std::nullopt;
  switch (code[0]) {
    case 'E': return VariableStatus::Exposure;
    case 'O': return VariableStatus::Outcome;
    case 'A': return VariableStatus::Adjusted;
    case 'U': return VariableStatus::Unobserved;
    case '1': return VariableStatus::Other;
    default: return std::nullopt;
  }
}

constexpr std::string_view status_name(VariableStatus s) noexcept {
  switch (s) {
    case VariableStatus::Exposure: return "exposure";
    case VariableStatus::Outcome: return "outcome";
    case VariableStatus::Adjusted: return "adjusted";
    case VariableStatus::Unobserved: return "unobserved";
    case VariableStatus::Other: return "other";
  }
  return "other";
}

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Variable {
  std::string name;
  VariableStatus status = VariableStatus::Other;
  std::optional<Point> layout;
  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Edge {
  std::string source;
  std::string target;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Set of variable names; ordered so that every listing derived from it is
/// deterministic.
using NodeSet = std::set<std::string, std::less<>>;
using EdgeSet = std::set<Edge>;

/// Index-level adjacency of a graph. Algorithms that run many queries on the
/// same graph work on this instead of on names.
struct Adjacency {
  std::vector<std::vector<std::size_t>> parents;
  std::vector<std::vector<std::size_t>> children;

  std::size_t size() const noexcept { return parents.size(); }
};

/// An immutable causal diagram. Every editing operation returns a new value
/// and leaves the receiver untouched; the edge relation is acyclic at all
/// times.
class Dag {
 public:
  Dag() = default;

  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  const Variable& variable(std::string_view name) const { return vars_[index_of(name)]; }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }

  bool contains(std::string_view name) const { return index_.find(name) != index_.end(); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
    return it->second;
  }

  std::span<const std::size_t> children(std::size_t i) const { return adj_.children.at(i); }
  std::span<const std::size_t> parents(std::size_t i) const { return adj_.parents.at(i); }
  const Adjacency& adjacency() const noexcept { return adj_; }

  std::size_t edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : adj_.children) n += c.size();
    return n;
  }

  bool has_edge(std::size_t source, std::size_t target) const {
    const auto& c = adj_.children.at(source);
    return std::find(c.begin(), c.end(), target) != c.end();
  }

  bool has_edge(std::string_view source, std::string_view target) const {
    auto s = find(source);
    auto t = find(target);
    return s && t && has_edge(*s, *t);
  }

  bool adjacent(std::size_t a, std::size_t b) const { return has_edge(a, b) || has_edge(b, a); }

  /// Edges grouped by source in declaration order, targets in insertion order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t s = 0; s < size(); ++s)
      for (auto t : adj_.children[s]) out.push_back({vars_[s].name, vars_[t].name});
    return out;
  }

  EdgeSet edge_set() const {
    auto e = edges();
    return {e.begin(), e.end()};
  }

  NodeSet names() const {
    NodeSet out;
    for (const auto& v : vars_) out.insert(v.name);
    return out;
  }

  NodeSet with_status(VariableStatus s) const {
    NodeSet out;
    for (const auto& v : vars_)
      if (v.status == s) out.insert(v.name);
    return out;
  }

  NodeSet exposures() const { return with_status(VariableStatus::Exposure); }
  NodeSet outcomes() const { return with_status(VariableStatus::Outcome); }
  NodeSet adjusted() const { return with_status(VariableStatus::Adjusted); }
  NodeSet unobserved() const { return with_status(VariableStatus::Unobserved); }

  bool observed(std::size_t i) const { return vars_.at(i).status != VariableStatus::Unobserved; }

  // -- editing -------------------------------------------------------------

  Dag add_variable(std::string name, VariableStatus status = VariableStatus::Other,
                   std::optional<Point> layout = std::nullopt) const {
    Dag g = *this;
    g.insert_variable(std::move(name), status, layout);
    return g;
  }

  /// Removes the variable together with every incident edge.
  Dag remove_variable(std::string_view name) const {
    const auto victim = index_of(name);
    Dag g;
    for (std::size_t i = 0; i < size(); ++i)
      if (i != victim) g.insert_variable(vars_[i].name, vars_[i].status, vars_[i].layout);
    for (std::size_t s = 0; s < size(); ++s) {
      if (s == victim) continue;
      for (auto t : adj_.children[s])
        if (t != victim) g.link(s - (s > victim), t - (t > victim));
    }
    return g;
  }

  /// Inserts source -> target, or removes it if present. An existing reverse
  /// arrow target -> source is replaced by the new one.
  Dag toggle_edge(std::string_view source, std::string_view target) const {
    const auto s = index_of(source);
    const auto t = index_of(target);
    if (s == t) throw SelfLoopError("arrow from '" + std::string(source) + "' to itself");
    Dag g = *this;
    if (has_edge(s, t)) {
      g.unlink(s, t);
      return g;
    }
    if (has_edge(t, s)) g.unlink(t, s);
    g.insert_edge(s, t);
    return g;
  }

  /// Inserts source -> target; unlike toggle_edge this never deletes.
  Dag add_edge(std::string_view source, std::string_view target) const {
    Dag g = *this;
    g.insert_edge(index_of(source), index_of(target));
    return g;
  }

  Dag remove_edge(std::string_view source, std::string_view target) const {
    const auto s = index_of(source);
    const auto t = index_of(target);
    if (!has_edge(s, t))
      throw InvalidQuery("no arrow " + std::string(source) + " -> " + std::string(target));
    Dag g = *this;
    g.unlink(s, t);
    return g;
  }

  /// Replaces the status. Adjusted and Unobserved toggle: applying the
  /// status a variable already has returns it to Other.
  Dag set_status(std::string_view name, VariableStatus status) const {
    Dag g = *this;
    auto& v = g.vars_[index_of(name)];
    const bool toggles = status == VariableStatus::Adjusted || status == VariableStatus::Unobserved;
    v.status = (toggles && v.status == status) ? VariableStatus::Other : status;
    return g;
  }

  Dag set_layout(std::string_view name, std::optional<Point> layout) const {
    check_layout(layout);
    Dag g = *this;
    g.vars_[index_of(name)].layout = layout;
    return g;
  }

  Dag rename_variable(std::string_view from, std::string to) const {
    const auto i = index_of(from);
    if (to.empty()) throw InvalidQuery("variable name must not be empty");
    if (to == from) return *this;
    if (contains(to)) throw NameCollision("variable '" + to + "' already exists");
    Dag g = *this;
    g.index_.erase(g.index_.find(from));
    g.index_.emplace(to, i);
    g.vars_[i].name = std::move(to);
    return g;
  }

  // -- queries -------------------------------------------------------------

  /// Reflexive-transitive closure over incoming edges.
  NodeSet ancestors(const NodeSet& seed) const { return names_of(closure(indices(seed), adj_.parents)); }
  /// Reflexive-transitive closure over outgoing edges.
  NodeSet descendants(const NodeSet& seed) const { return names_of(closure(indices(seed), adj_.children)); }

  std::vector<bool> ancestor_mask(const std::vector<std::size_t>& seed) const { return closure(seed, adj_.parents); }
  std::vector<bool> descendant_mask(const std::vector<std::size_t>& seed) const { return closure(seed, adj_.children); }

  /// True iff a directed path of length >= 0 leads from `from` to `to`.
  bool reaches(std::size_t from, std::size_t to) const { return closure({from}, adj_.children)[to]; }

  /// Kahn order; ties broken by declaration order.
  std::vector<std::size_t> topological_order() const {
    std::vector<std::size_t> indeg(size());
    for (std::size_t v = 0; v < size(); ++v) indeg[v] = adj_.parents[v].size();
    std::set<std::size_t> ready;
    for (std::size_t v = 0; v < size(); ++v)
      if (indeg[v] == 0) ready.insert(v);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
      auto v = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(v);
      for (auto c : adj_.children[v])
        if (--indeg[c] == 0) ready.insert(c);
    }
    return order;
  }

  /// Subgraph induced by `keep`, preserving declaration and edge order.
  Dag induced_subgraph(const NodeSet& keep) const {
    std::vector<bool> mask(size(), false);
    for (auto i : indices(keep)) mask[i] = true;
    return induced_subgraph(mask);
  }

  Dag induced_subgraph(const std::vector<bool>& keep) const {
    Dag g;
    std::vector<std::size_t> remap(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
      if (!keep[i]) continue;
      remap[i] = g.size();
      g.insert_variable(vars_[i].name, vars_[i].status, vars_[i].layout);
    }
    for (std::size_t s = 0; s < size(); ++s) {
      if (!keep[s]) continue;
      for (auto t : adj_.children[s])
        if (keep[t]) g.link(remap[s], remap[t]);
    }
    return g;
  }

  std::vector<std::size_t> indices(const NodeSet& names) const {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(index_of(n));
    return out;
  }

  NodeSet names_of(const std::vector<bool>& mask) const {
    NodeSet out;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) out.insert(vars_[i].name);
    return out;
  }

  /// Same variables (order, status and layout) and the same edge set.
  friend bool operator==(const Dag& a, const Dag& b) {
    return a.vars_ == b.vars_ && a.edge_set() == b.edge_set();
  }

  /// Mutable construction without per-step copies; used by the parser.
  class Builder;

 private:
  static void check_layout(const std::optional<Point>& layout) {
    if (layout && !(std::isfinite(layout->x) && std::isfinite(layout->y)))
      throw InvalidQuery("layout coordinates must be finite");
  }

  void insert_variable(std::string name, VariableStatus status, std::optional<Point> layout) {
    if (name.empty()) throw InvalidQuery("variable name must not be empty");
    check_layout(layout);
    if (contains(name)) throw NameCollision("variable '" + name + "' already exists");
    index_.emplace(name, vars_.size());
    vars_.push_back({std::move(name), status, layout});
    adj_.parents.emplace_back();
    adj_.children.emplace_back();
  }

  void insert_edge(std::size_t s, std::size_t t) {
    if (s == t) throw SelfLoopError("arrow from '" + vars_[s].name + "' to itself");
    if (has_edge(s, t))
      throw InvalidQuery("arrow " + vars_[s].name + " -> " + vars_[t].name + " already exists");
    if (reaches(t, s))
      throw CycleError("arrow " + vars_[s].name + " -> " + vars_[t].name + " would create a cycle");
    link(s, t);
  }

  void link(std::size_t s, std::size_t t) {
    adj_.children[s].push_back(t);
    adj_.parents[t].push_back(s);
  }

  void unlink(std::size_t s, std::size_t t) {
    std::erase(adj_.children[s], t);
    std::erase(adj_.parents[t], s);
  }

  std::vector<bool> closure(const std::vector<std::size_t>& seed,
                            const std::vector<std::vector<std::size_t>>& step) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack;
    for (auto s : seed) {
      if (s >= size()) throw UnknownVariable("vertex index out of range");
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
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

  std::vector<Variable> vars_;
  std::map<std::string, std::size_t, std::less<>> index_;
  Adjacency adj_;
};

class Dag::Builder {
 public:
  Builder& variable(std::string name, VariableStatus status = VariableStatus::Other,
                    std::optional<Point> layout = std::nullopt) {
    g_.insert_variable(std::move(name), status, layout);
    return *this;
  }
  /// Adds source -> target; an already present arrow is left alone.
  Builder& edge(std::string_view source, std::string_view target) {
    const auto s = g_.index_of(source);
    const auto t = g_.index_of(target);
    if (!g_.has_edge(s, t)) g_.insert_edge(s, t);
    return *this;
  }
  bool contains(std::string_view name) const { return g_.contains(name); }
  Dag build() && { return std::move(g_); }
  const Dag& peek() const { return g_; }

 private:
  Dag g_;
};

}  // namespace dagitty
