#pragma once

// Reference implementations by exhaustive path enumeration and power-set
// scans, and a linear-Gaussian structural equation simulator. These are the
// ground truth that the separator-based analyses are tested against, and
// they are only practical for small diagrams.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dagitty/errors.hpp"
#include "dagitty/graph.hpp"
#include "dagitty/identification.hpp"
#include "dagitty/paths.hpp"

namespace dagitty::oracle {

inline constexpr std::size_t max_candidates = 12;

/// d-separation by enumerating every path and applying the open/closed rules.
inline bool d_separated_brute_force(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  if (g.size() < 2) throw InvalidQuery("d-separation needs at least two variables");
  if (x.empty() || y.empty()) throw InvalidQuery("d-separation needs non-empty sets");
  detail::require_disjoint(x, y, "d-separation query");
  detail::require_disjoint(x, z, "d-separation query");
  detail::require_disjoint(y, z, "d-separation query");
  for (const auto& p : enumerate_paths(g, x, y))
    if (is_path_open(g, p, z)) return false;
  return true;
}

/// Sufficiency straight from the path definitions.
inline bool sufficient_by_paths(const Dag& g, const NodeSet& z, EffectKind effect) {
  detail::require_roles(g);
  detail::require_free_of_roles(g, z);
  const auto xs = g.exposures();
  const auto ys = g.outcomes();
  if (effect == EffectKind::Total) {
    const auto below = g.descendants(xs);
    for (const auto& v : z)
      if (below.contains(v)) return false;
    for (const auto& p : enumerate_paths(g, xs, ys)) {
      const bool open = is_path_open(g, p, z);
      if (classify_path(g, p) == PathClass::Causal ? !open : open) return false;
    }
    return true;
  }
  Dag cut = g;
  for (const auto& e : g.edges())
    if (xs.contains(e.source) && ys.contains(e.target)) cut = cut.remove_edge(e.source, e.target);
  for (const auto& p : enumerate_paths(cut, xs, ys))
    if (is_path_open(cut, p, z)) return false;
  return true;
}

/// Power-set scan for minimal sufficient sets honouring Adjusted (always
/// included) and Unobserved (never included) statuses.
inline std::vector<NodeSet> adjustment_sets_brute_force(const Dag& g, EffectKind effect) {
  detail::require_roles(g);
  std::vector<std::string> candidates;
  for (const auto& v : g.variables())
    if (v.status == VariableStatus::Other) candidates.push_back(v.name);
  if (candidates.size() > max_candidates) throw TooLarge("too many candidate covariates for a power-set scan");

  const std::uint32_t total = 1u << candidates.size();
  std::vector<bool> sufficient(total, false);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    NodeSet z = g.adjusted();
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (mask >> k & 1u) z.insert(candidates[k]);
    sufficient[mask] = sufficient_by_paths(g, z, effect);
  }
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!sufficient[mask]) continue;
    bool minimal = true;
    if (mask != 0) {
      for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
        if (sufficient[sub]) {
          minimal = false;
          break;
        }
        if (sub == 0) break;
      }
    }
    if (!minimal) continue;
    NodeSet z = g.adjusted();
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (mask >> k & 1u) z.insert(candidates[k]);
    out.push_back(std::move(z));
  }
  sort_node_sets(out);
  return out;
}

/// Inclusion-minimal subsets of `allowed` that d-separate x and y, by
/// scanning the power set.
inline std::vector<NodeSet> separators_brute_force(const Dag& g, const std::string& x, const std::string& y,
                                                   const NodeSet& allowed) {
  const std::vector<std::string> pool(allowed.begin(), allowed.end());
  if (pool.size() > max_candidates) throw TooLarge("too many separator candidates for a power-set scan");
  const std::uint32_t total = 1u << pool.size();
  std::vector<bool> separates(total, false);
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    NodeSet z;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (mask >> k & 1u) z.insert(pool[k]);
    separates[mask] = d_separated_brute_force(g, {x}, {y}, z);
    if (!separates[mask]) continue;
    bool minimal = true;
    for (std::uint32_t sub = (mask - 1) & mask; mask != 0 && minimal; sub = (sub - 1) & mask) {
      minimal = !separates[sub];
      if (sub == 0) break;
    }
    if (minimal) out.push_back(std::move(z));
  }
  sort_node_sets(out);
  return out;
}

/// Every (instrument, conditioning set) pair over all observed conditioning
/// sets, checked with brute-force d-separation.
inline std::vector<InstrumentResult> instruments_brute_force(const Dag& g) {
  detail::require_single_roles(g);
  const auto x = *g.exposures().begin();
  const auto y = *g.outcomes().begin();
  const Dag cut = g.has_edge(x, y) ? g.remove_edge(x, y) : g;
  const auto below_y = g.descendants({y});

  std::vector<InstrumentResult> out;
  for (const auto& cand : g.variables()) {
    if (cand.status == VariableStatus::Unobserved || cand.name == x || cand.name == y) continue;
    std::vector<std::string> pool;
    for (const auto& v : g.variables())
      if (v.status != VariableStatus::Unobserved && v.name != cand.name && v.name != x && v.name != y &&
          !below_y.contains(v.name))
        pool.push_back(v.name);
    if (pool.size() > max_candidates) throw TooLarge("too many conditioning candidates for a power-set scan");
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
      NodeSet w;
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (mask >> k & 1u) w.insert(pool[k]);
      if (d_separated_brute_force(g, {cand.name}, {x}, w)) continue;
      if (!d_separated_brute_force(cut, {cand.name}, {y}, w)) continue;
      out.push_back({cand.name, std::move(w)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -- linear structural equation models ---------------------------------------

/// Linear-Gaussian structural model: every variable is the weighted sum of
/// its parents plus independent normal noise.
struct LinearSem {
  std::map<Edge, double> coefficients;
  std::map<std::string, double> noise_scales;
  std::uint64_t seed = 0;

  /// Coefficient magnitudes uniform in [0.3, 0.9] with random sign; noise
  /// scales uniform in [0.5, 1.5].
  static LinearSem random(const Dag& g, std::uint64_t seed) {
    LinearSem sem;
    sem.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> magnitude(0.3, 0.9);
    std::uniform_real_distribution<double> scale(0.5, 1.5);
    std::bernoulli_distribution negative(0.5);
    for (const auto& e : g.edges()) sem.coefficients[e] = magnitude(rng) * (negative(rng) ? -1.0 : 1.0);
    for (const auto& v : g.variables()) sem.noise_scales[v.name] = scale(rng);
    return sem;
  }
};

/// Column-major samples; one column per variable in declaration order.
struct Dataset {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw UnknownVariable("no column '" + std::string(name) + "'");
  }
};

inline Dataset simulate(const Dag& g, const LinearSem& sem, std::size_t sample_count) {
  if (sample_count == 0) throw InvalidQuery("sample count must be at least 1");
  Dataset data;
  for (const auto& v : g.variables()) data.names.push_back(v.name);
  data.columns.assign(g.size(), std::vector<double>(sample_count, 0.0));
  std::mt19937_64 rng(sem.seed ^ 0x9E3779B97F4A7C15ull);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (auto v : g.topological_order()) {
    auto& col = data.columns[v];
    const double sd = sem.noise_scales.at(g.name(v));
    for (auto& value : col) value = sd * noise(rng);
    for (auto p : g.parents(v)) {
      const double b = sem.coefficients.at({g.name(p), g.name(v)});
      const auto& parent = data.columns[p];
      for (std::size_t r = 0; r < sample_count; ++r) col[r] += b * parent[r];
    }
  }
  return data;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv(const Dataset& data) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t c = 0; c < data.names.size(); ++c) out << (c ? "," : "") << csv_field(data.names[c]);
  out << '\n';
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t c = 0; c < data.columns.size(); ++c) out << (c ? "," : "") << data.columns[c][r];
    out << '\n';
  }
  return out.str();
}

inline Eigen::MatrixXd covariance(const Dataset& data) {
  const auto n = static_cast<Eigen::Index>(data.rows());
  const auto k = static_cast<Eigen::Index>(data.columns.size());
  Eigen::MatrixXd m(n, k);
  for (Eigen::Index c = 0; c < k; ++c)
    m.col(c) = Eigen::Map<const Eigen::VectorXd>(data.columns[c].data(), n);
  const Eigen::MatrixXd centered = m.rowwise() - m.colwise().mean();
  return centered.adjoint() * centered / static_cast<double>(n > 1 ? n - 1 : 1);
}

/// Population covariance of the model, (I - B)^-1 Omega (I - B)^-T, with
/// rows and columns in declaration order.
inline Eigen::MatrixXd implied_covariance(const Dag& g, const LinearSem& sem) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [e, w] : sem.coefficients)
    b(static_cast<Eigen::Index>(g.index_of(e.target)), static_cast<Eigen::Index>(g.index_of(e.source))) = w;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sd = sem.noise_scales.at(g.name(static_cast<std::size_t>(i)));
    omega(i, i) = sd * sd;
  }
  const Eigen::MatrixXd a = (Eigen::MatrixXd::Identity(n, n) - b).inverse();
  return a * omega * a.transpose();
}

/// Partial correlation of columns x and y given `given`, read off the
/// inverse of the corresponding covariance block.
inline double partial_correlation(const Eigen::MatrixXd& cov, std::size_t x, std::size_t y,
                                  const std::vector<std::size_t>& given) {
  std::vector<std::size_t> idx{x, y};
  idx.insert(idx.end(), given.begin(), given.end());
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd block(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) block(a, b) = cov(idx[a], idx[b]);
  const Eigen::MatrixXd precision = block.inverse();
  return -precision(0, 1) / std::sqrt(precision(0, 0) * precision(1, 1));
}

inline double partial_correlation(const Dataset& data, std::string_view x, std::string_view y, const NodeSet& given) {
  std::vector<std::size_t> g;
  for (const auto& z : given) g.push_back(data.column(z));
  return partial_correlation(covariance(data), data.column(x), data.column(y), g);
}

}  // namespace dagitty::oracle
