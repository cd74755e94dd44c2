#include "dagitty/implications.hpp"

#include <gtest/gtest.h>

#include <random>
#include <tuple>

#include "dagitty/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace dagitty {
namespace {

using testing::g1;
using testing::set;

bool contains(const std::vector<IndependenceStatement>& ss, const IndependenceStatement& s) {
  return std::find(ss.begin(), ss.end(), s) != ss.end();
}

std::vector<IndependenceStatement> implications_brute_force(const Dag& g) {
  NodeSet observed;
  for (const auto& v : g.variables())
    if (v.status != VariableStatus::Unobserved) observed.insert(v.name);
  std::vector<IndependenceStatement> out;
  for (const auto& x : observed) {
    for (const auto& y : observed) {
      if (!(x < y)) continue;
      auto allowed = observed;
      allowed.erase(x);
      allowed.erase(y);
      for (auto& z : oracle::separators_brute_force(g, x, y, allowed)) out.push_back({x, y, std::move(z)});
    }
  }
  return out;
}

TEST(Implications, FiveVariableExample) {
  const auto s = testable_implications(g1());
  EXPECT_TRUE(contains(s, {"A", "B", {}}));
  EXPECT_EQ(s, implications_brute_force(g1()));
  EXPECT_EQ(to_string(s.front()), "A _||_ B");
}

TEST(Implications, Fixtures) {
  EXPECT_TRUE(testable_implications(testing::g4()).empty());
  EXPECT_TRUE(testable_implications(testing::g5()).empty());
  EXPECT_TRUE(implications_brute_force(testing::g5()).empty());
  const auto fork = testable_implications(testing::g3().remove_edge("matches", "cancer"));
  ASSERT_EQ(fork.size(), 1u);
  EXPECT_EQ(fork.front(), (IndependenceStatement{"cancer", "matches", set({"smoking"})}));
  EXPECT_EQ(to_string(fork.front()), "cancer _||_ matches | smoking");
}

TEST(Implications, UnobservedNeverAppears) {
  const auto g = g1().set_status("Z", VariableStatus::Unobserved);
  for (const auto& s : testable_implications(g)) {
    EXPECT_NE(s.x, "Z");
    EXPECT_NE(s.y, "Z");
    EXPECT_FALSE(s.given.contains("Z"));
  }
}

TEST(MinimalSeparators, Examples) {
  EXPECT_EQ(minimal_separators(g1(), "A", "B", set({"E", "D", "Z"})), std::vector<NodeSet>{NodeSet{}});
  EXPECT_TRUE(minimal_separators(g1(), "E", "D", set({"A", "B", "Z"})).empty());
  EXPECT_EQ(minimal_separators(testing::g2(), "C1", "C2", set({"X", "M", "Y"})), std::vector<NodeSet>{NodeSet{}});
  EXPECT_THROW(minimal_separators(g1(), "A", "Q", {}), UnknownVariable);
  EXPECT_THROW(minimal_separators(g1(), "A", "B", set({"A"})), InvalidQuery);
}

TEST(Properties, StatementsMatchOracleAndAreMinimal) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::random_dag(rng, 3 + trial % 5, 0.35);
    if (trial % 3 == 0) g = g.set_status("b", VariableStatus::Unobserved);
    const auto s = testable_implications(g);
    ASSERT_EQ(s, implications_brute_force(g)) << trial;
    for (const auto& st : s) {
      ASSERT_TRUE(d_separated(g, {st.x}, {st.y}, st.given));
      for (const auto& v : st.given) {
        auto smaller = st.given;
        smaller.erase(v);
        ASSERT_FALSE(d_separated(g, {st.x}, {st.y}, smaller));
      }
    }
  }
}

TEST(Properties, DeletingAnEdgeNeverRemovesAnIndependence) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_dag(rng, 6, 0.4);
    const auto names = g.names();
    for (const auto& e : g.edges()) {
      const auto h = g.remove_edge(e.source, e.target);
      for (const auto& x : names) {
        for (const auto& y : names) {
          if (!(x < y)) continue;
          std::vector<std::string> rest;
          for (const auto& v : names)
            if (v != x && v != y) rest.push_back(v);
          for (const auto& z : testing::subsets(rest)) {
            if (!d_separated(g, {x}, {y}, z)) continue;
            ASSERT_TRUE(d_separated(h, {x}, {y}, z));
          }
        }
      }
    }
  }
}

TEST(Cancellation, StopsEnumeration) {
  std::stop_source source;
  source.request_stop();
  EXPECT_THROW(testable_implications(g1(), source.get_token()), Cancelled);
}

}  // namespace
}  // namespace dagitty
