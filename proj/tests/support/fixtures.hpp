#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dagitty/graph.hpp"

namespace dagitty::testing {

inline Dag make_dag(const std::vector<std::pair<std::string, VariableStatus>>& vars,
                    const std::vector<std::pair<std::string, std::string>>& edges) {
  Dag::Builder b;
  for (const auto& [n, s] : vars) b.variable(n, s);
  for (const auto& [s, t] : edges) b.edge(s, t);
  return std::move(b).build();
}

constexpr auto kE = VariableStatus::Exposure;
constexpr auto kO = VariableStatus::Outcome;
constexpr auto kA = VariableStatus::Adjusted;
constexpr auto kU = VariableStatus::Unobserved;
constexpr auto k1 = VariableStatus::Other;

// Five-variable example with exposure E and outcome D.
inline Dag g1() {
  return make_dag({{"E", kE}, {"D", kO}, {"A", k1}, {"B", k1}, {"Z", k1}},
                  {{"E", "D"}, {"A", "E"}, {"A", "Z"}, {"B", "D"}, {"B", "Z"}, {"Z", "E"}, {"Z", "D"}});
}

inline const char* g1_model_code() { return "E E\nD O\nA 1\nB 1\nZ 1\n\nE D\nA E Z\nB D Z\nZ E D\n"; }

// Mediator M between X and Y, confounders C1 and C2.
inline Dag g2() {
  return make_dag({{"X", kE}, {"Y", kO}, {"M", k1}, {"C1", k1}, {"C2", k1}},
                  {{"X", "Y"}, {"X", "M"}, {"M", "Y"}, {"C1", "X"}, {"C1", "M"}, {"C2", "X"}, {"C2", "Y"}});
}

inline Dag g3() {
  return make_dag({{"smoking", k1}, {"matches", kE}, {"cancer", kO}},
                  {{"smoking", "matches"}, {"smoking", "cancer"}, {"matches", "cancer"}});
}

inline Dag g4() {
  return make_dag({{"X", k1}, {"M", k1}, {"Y", k1}}, {{"X", "M"}, {"M", "Y"}, {"X", "Y"}});
}

// Instrument I with latent confounder U.
inline Dag g5() {
  return make_dag({{"I", k1}, {"X", kE}, {"Y", kO}, {"U", kU}}, {{"I", "X"}, {"X", "Y"}, {"U", "X"}, {"U", "Y"}});
}

// g5 with W confounding I and Y.
inline Dag g6() {
  return make_dag({{"I", k1}, {"X", kE}, {"Y", kO}, {"U", kU}, {"W", k1}},
                  {{"I", "X"}, {"X", "Y"}, {"U", "X"}, {"U", "Y"}, {"W", "I"}, {"W", "Y"}});
}

inline NodeSet set(std::initializer_list<const char*> names) {
  NodeSet s;
  for (auto n : names) s.insert(n);
  return s;
}

inline EdgeSet edges(std::initializer_list<std::pair<const char*, const char*>> es) {
  EdgeSet s;
  for (auto [a, b] : es) s.insert({a, b});
  return s;
}

}  // namespace dagitty::testing
