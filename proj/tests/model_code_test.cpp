#include "dagitty/model_code.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace dagitty {
namespace {

using testing::g1;
using testing::set;

constexpr const char* kLaidOut =
    "E E @-2.2,1.6\nD O @1.4,1.6\nA 1 @-2.2,-1.5\nB 1 @1.4,-1.5\nZ 1 @-0.3,-0.1\n\nE D\nA E Z\nB D Z\nZ E D\n";

TEST(Parse, FiveVariableText) {
  const auto g = model_code::parse(testing::g1_model_code());
  EXPECT_EQ(g, g1());
}

TEST(Parse, LayoutAnnotations) {
  const auto g = model_code::parse(kLaidOut);
  EXPECT_EQ(g.edge_set(), g1().edge_set());
  EXPECT_EQ(g.variable("E").layout, (Point{-2.2, 1.6}));
  EXPECT_EQ(g.variable("D").layout, (Point{1.4, 1.6}));
  EXPECT_EQ(g.variable("A").layout, (Point{-2.2, -1.5}));
  EXPECT_EQ(g.variable("B").layout, (Point{1.4, -1.5}));
  EXPECT_EQ(g.variable("Z").layout, (Point{-0.3, -0.1}));
}

TEST(Parse, MixedBareAndLaidOutLines) {
  const auto g = model_code::parse("E E @1,2\nD O\n\nE D\n");
  EXPECT_TRUE(g.variable("E").layout.has_value());
  EXPECT_FALSE(g.variable("D").layout.has_value());
}

TEST(Parse, EncodedName) {
  const auto g = model_code::parse("patient%20sex 1\n\n");
  EXPECT_EQ(g.names(), set({"patient sex"}));
}

TEST(Parse, CarriageReturnsAndExtraBlankLines) {
  const auto g = model_code::parse("E E\r\nD O\r\n\r\n\r\nE D\r\n\n");
  EXPECT_TRUE(g.has_edge("E", "D"));
}

TEST(Parse, Errors) {
  auto line_of = [](const char* text) -> std::optional<std::size_t> {
    try {
      model_code::parse(text);
    } catch (const Error& e) {
      return e.line();
    }
    return std::nullopt;
  };
  EXPECT_THROW(model_code::parse("E Q\n\n"), SyntaxError);
  EXPECT_THROW(model_code::parse("E E\n\nE D\n"), UndeclaredVariable);
  EXPECT_THROW(model_code::parse("E E\nE O\n\n"), NameCollision);
  EXPECT_THROW(model_code::parse("A 1\nB 1\n\nA B\nB A\n"), CycleError);
  EXPECT_THROW(model_code::parse("A 1\n\nA A\n"), SelfLoopError);
  EXPECT_THROW(model_code::parse("A 1 @1;2\n\n"), SyntaxError);
  EXPECT_THROW(model_code::parse("A 1 @x,2\n\n"), SyntaxError);
  EXPECT_THROW(model_code::parse("A 1 @inf,2\n\n"), SyntaxError);
  EXPECT_EQ(line_of("A 1\nB 1\n\nA B\nB Q\n"), 5u);
  EXPECT_EQ(line_of("A 1\nA 1\n"), 2u);
}

TEST(Serialize, EmptyDag) { EXPECT_EQ(model_code::serialize(Dag()), "\n"); }

TEST(Serialize, LayoutRoundTrip) {
  const auto g = model_code::parse(kLaidOut);
  const auto text = model_code::serialize(g);
  EXPECT_EQ(text, kLaidOut);
  EXPECT_EQ(model_code::parse(text), g);
}

TEST(Serialize, EncodesNames) {
  const auto text = model_code::serialize(Dag().add_variable("patient sex"));
  EXPECT_EQ(text.rfind("patient%20sex", 0), 0u);
}

TEST(Names, EncodeDecode) {
  EXPECT_EQ(model_code::encode_name("patient sex"), "patient%20sex");
  EXPECT_EQ(model_code::encode_name("ABC_1.x-"), "ABC_1.x-");
  EXPECT_EQ(model_code::encode_name("\xC3\xA4"), "%C3%A4");
  EXPECT_THROW(model_code::decode_name("a%2Gb"), SyntaxError);
  EXPECT_THROW(model_code::decode_name("a%2"), SyntaxError);
  EXPECT_THROW(model_code::decode_name("a%"), SyntaxError);
}

TEST(Properties, EncodingIsInvertible) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> byte(0, 255), len(0, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s(static_cast<std::size_t>(len(rng)), '\0');
    for (auto& c : s) c = static_cast<char>(byte(rng));
    const auto e = model_code::encode_name(s);
    ASSERT_EQ(model_code::decode_name(e), s);
    ASSERT_EQ(e.find_first_of(" \t\r\n"), std::string::npos);
  }
}

TEST(Properties, RoundTripAndIdempotentSerialization) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-10, 10);
  std::uniform_int_distribution<int> status(0, 4);
  const char* odd_names[] = {"patient sex", "50% off", "a@b", "x,y", "\xE2\x82\xAC"};
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_dag(rng, 6, 0.4);
    g = g.rename_variable("a", odd_names[trial % 5]);
    for (const auto& v : g.names()) {
      g = g.set_status(v, static_cast<VariableStatus>(status(rng)));
      if (trial % 2) g = g.set_layout(v, Point{std::round(coord(rng) * 10) / 10, coord(rng)});
    }
    const auto text = model_code::serialize(g);
    const auto back = model_code::parse(text);
    ASSERT_EQ(back, g) << text;
    ASSERT_EQ(model_code::serialize(back), text);
  }
}

}  // namespace
}  // namespace dagitty
