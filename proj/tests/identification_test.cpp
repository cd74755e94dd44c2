#include "dagitty/identification.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dagitty/oracle.hpp"
#include "dagitty/transforms.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace dagitty {
namespace {

using testing::g1;
using testing::g2;
using testing::g3;
using testing::g5;
using testing::g6;
using testing::set;
constexpr auto kTotal = EffectKind::Total;
constexpr auto kDirect = EffectKind::Direct;

std::vector<NodeSet> sets(std::initializer_list<std::initializer_list<const char*>> ss) {
  std::vector<NodeSet> out;
  for (auto s : ss) out.push_back(set(s));
  return out;
}

TEST(Sufficiency, FiveVariableExample) {
  EXPECT_TRUE(is_sufficient_adjustment(g1(), set({"A", "Z"}), kTotal));
  EXPECT_TRUE(is_sufficient_adjustment(g1(), set({"B", "Z"}), kTotal));
  EXPECT_TRUE(is_sufficient_adjustment(g1(), set({"A", "B", "Z"}), kTotal));
  EXPECT_FALSE(is_sufficient_adjustment(g1(), set({"Z"}), kTotal));
  EXPECT_FALSE(is_sufficient_adjustment(g1(), {}, kTotal));
}

TEST(Sufficiency, MediatorSeparatesEffects) {
  EXPECT_TRUE(is_sufficient_adjustment(g2(), set({"M", "C2"}), kDirect));
  EXPECT_FALSE(is_sufficient_adjustment(g2(), set({"M", "C2"}), kTotal));
}

TEST(Sufficiency, Errors) {
  EXPECT_THROW(is_sufficient_adjustment(testing::g4(), {}, kTotal), MissingRoles);
  EXPECT_THROW(is_sufficient_adjustment(g1(), set({"E"}), kTotal), OverlappingRoles);
  EXPECT_THROW(is_sufficient_adjustment(g1(), set({"Q"}), kTotal), UnknownVariable);
}

TEST(MinimalSets, FiveVariableExample) {
  const auto r = list_minimal_adjustment_sets(g1(), kTotal);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.sets, sets({{"A", "Z"}, {"B", "Z"}}));
  EXPECT_EQ(list_minimal_adjustment_sets(g1(), kDirect).sets, r.sets);
}

TEST(MinimalSets, UnobservedIsExcluded) {
  const auto g = g1().set_status("B", VariableStatus::Unobserved);
  EXPECT_EQ(list_minimal_adjustment_sets(g, kTotal).sets, sets({{"A", "Z"}}));
  EXPECT_EQ(oracle::adjustment_sets_brute_force(g, kTotal), sets({{"A", "Z"}}));
}

TEST(MinimalSets, ForcedMediatorIsInfeasible) {
  const auto r = list_minimal_adjustment_sets(g2().set_status("M", VariableStatus::Adjusted), kTotal);
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(r.sets.empty());
}

TEST(MinimalSets, ForcedVariablesAreKept) {
  const auto g = g1().set_status("B", VariableStatus::Adjusted);
  EXPECT_EQ(list_minimal_adjustment_sets(g, kTotal).sets, sets({{"B", "Z"}}));
  EXPECT_EQ(oracle::adjustment_sets_brute_force(g, kTotal), sets({{"B", "Z"}}));
  const auto h = g1().add_variable("C", VariableStatus::Adjusted).add_edge("E", "C");
  EXPECT_FALSE(list_minimal_adjustment_sets(h, kTotal).feasible);
  EXPECT_TRUE(list_minimal_adjustment_sets(h, kDirect).feasible);
}

TEST(MinimalSets, SmokingAndMediator) {
  EXPECT_EQ(list_minimal_adjustment_sets(g3(), kTotal).sets, sets({{"smoking"}}));
  EXPECT_TRUE(list_minimal_adjustment_sets(g3().set_status("smoking", VariableStatus::Unobserved), kTotal)
                  .sets.empty());
  for (auto effect : {kTotal, kDirect})
    EXPECT_EQ(list_minimal_adjustment_sets(g2(), effect).sets, oracle::adjustment_sets_brute_force(g2(), effect));
  EXPECT_NE(list_minimal_adjustment_sets(g2(), kTotal).sets, list_minimal_adjustment_sets(g2(), kDirect).sets);
}

TEST(MinimalSets, Cancellation) {
  std::stop_source source;
  source.request_stop();
  EXPECT_THROW(list_minimal_adjustment_sets(g1(), kTotal, source.get_token()), Cancelled);
}

TEST(Instruments, Fixtures) {
  EXPECT_TRUE(is_instrument(g5(), "I", {}));
  EXPECT_FALSE(is_instrument(g6(), "I", {}));
  EXPECT_TRUE(is_instrument(g6(), "I", set({"W"})));
  EXPECT_FALSE(is_instrument(g5(), "U", {}));
  EXPECT_THROW(is_instrument(g5(), "X", {}), InvalidQuery);
  EXPECT_THROW(is_instrument(g5(), "I", set({"U"})), InvalidQuery);
  EXPECT_THROW(is_instrument(g1().set_status("A", VariableStatus::Exposure), "B", {}), MultipleRoles);
}

TEST(Instruments, Search) {
  const auto a = find_instruments(g5());
  EXPECT_NE(std::find(a.begin(), a.end(), InstrumentResult{"I", {}}), a.end());
  const auto b = find_instruments(g6());
  EXPECT_NE(std::find(b.begin(), b.end(), InstrumentResult{"I", set({"W"})}), b.end());
  EXPECT_TRUE(find_instruments(g3()).empty());
  EXPECT_TRUE(oracle::instruments_brute_force(g3()).empty());

  const auto o5 = oracle::instruments_brute_force(g5());
  EXPECT_NE(std::find(o5.begin(), o5.end(), InstrumentResult{"I", {}}), o5.end());
  const auto o6 = oracle::instruments_brute_force(g6());
  EXPECT_NE(std::find(o6.begin(), o6.end(), InstrumentResult{"I", set({"W"})}), o6.end());
}

class RandomGraphs : public ::testing::TestWithParam<int> {};

TEST_P(RandomGraphs, SoundMinimalCompleteAndReducible) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  std::uniform_int_distribution<std::size_t> size(3, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = size(rng);
    auto g = testing::random_dag(rng, n, 0.45);
    g = testing::random_statuses(rng, g, "a", testing::vertex_name(n - 1));
    for (auto effect : {kTotal, kDirect}) {
      const auto r = list_minimal_adjustment_sets(g, effect);
      ASSERT_EQ(r.sets, oracle::adjustment_sets_brute_force(g, effect));
      ASSERT_EQ(r.feasible, !r.sets.empty());
      ASSERT_EQ(r.sets, list_minimal_adjustment_sets(relevant_subgraph(g), effect).sets);
      for (const auto& z : r.sets) {
        ASSERT_TRUE(is_sufficient_adjustment(g, z, effect));
        for (const auto& v : z) {
          if (g.variable(v).status == VariableStatus::Adjusted) continue;
          auto smaller = z;
          smaller.erase(v);
          ASSERT_FALSE(is_sufficient_adjustment(g, smaller, effect));
        }
      }
    }
    const auto fast = find_instruments(g);
    const auto slow = oracle::instruments_brute_force(g);
    ASSERT_EQ(fast.empty(), slow.empty());
    for (const auto& f : fast) {
      ASSERT_TRUE(is_instrument(g, f.instrument, f.conditioning_set));
      ASSERT_NE(std::find(slow.begin(), slow.end(), f), slow.end());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphs, ::testing::Range(1, 6));

}  // namespace
}  // namespace dagitty
