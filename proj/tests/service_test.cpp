#include "dagitty/service.hpp"

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace dagitty {
namespace {

using nlohmann::json;

json ask(const json& query, const std::string& model = testing::g1_model_code(), int revision = 1) {
  return service::handle({{"revision", revision}, {"model", model}, {"query", query}});
}

TEST(Service, EchoesRevisionAndCanonicalModel) {
  const auto r = ask({{"kind", "validate"}}, "E E\r\nD O\r\n\r\nE D\r\n", 41);
  EXPECT_EQ(r.at("revision"), 41);
  EXPECT_TRUE(r.at("ok").get<bool>());
  EXPECT_EQ(r.at("model"), "E E\nD O\n\nE D\n");
}

TEST(Service, AdjustmentPanel) {
  const auto r = ask({{"kind", "adjust"}, {"effect", "total"}});
  EXPECT_EQ(r.at("result").at("sets"), json::parse(R"([["A","Z"],["B","Z"]])"));
  const auto toggled = ask({{"kind", "adjust"}}, "E E\nD O\nA 1\nB 1\nZ A\n\nE D\nA E Z\nB D Z\nZ E D\n");
  EXPECT_EQ(toggled.at("result").at("sets"), json::parse(R"([["A","Z"],["B","Z"]])"));
}

TEST(Service, EveryQueryKind) {
  for (const char* kind : {"validate", "adjust", "instruments", "implications", "highlight", "relevance", "atomic",
                           "moral", "correlation", "paths"}) {
    const auto r = ask({{"kind", kind}});
    EXPECT_TRUE(r.at("ok").get<bool>()) << kind << ": " << r.dump();
  }
  const auto d = ask({{"kind", "dsep"}, {"x", {"A"}}, {"y", {"B"}}, {"given", {"Z"}}});
  EXPECT_FALSE(d.at("result").at("d_separated").get<bool>());
  EXPECT_EQ(ask({{"kind", "moral"}}).at("result").at("lines").size(), 9u);
  EXPECT_EQ(ask({{"kind", "paths"}, {"limit", 2}}).at("result").at("paths").size(), 2u);
}

TEST(Service, ErrorsAreReportedNotThrown) {
  const auto missing = ask({{"kind", "adjust"}}, "A 1\nB 1\n\nA B\n");
  EXPECT_FALSE(missing.at("ok").get<bool>());
  EXPECT_EQ(missing.at("error").at("kind"), "MissingRoles");

  const auto syntax = ask({{"kind", "validate"}}, "A 1\nA 1\n", 9);
  EXPECT_EQ(syntax.at("revision"), 9);
  EXPECT_EQ(syntax.at("error").at("kind"), "NameCollision");
  EXPECT_EQ(syntax.at("error").at("line"), 2);

  EXPECT_EQ(ask({{"kind", "teleport"}}).at("error").at("kind"), "InvalidQuery");
  EXPECT_EQ(service::handle(json::array()).at("error").at("kind"), "BadRequest");
  EXPECT_EQ(service::handle({{"model", 5}}).at("error").at("kind"), "BadRequest");
}

TEST(Service, SupersededRequestIsCancelled) {
  std::stop_source source;
  source.request_stop();
  const auto r = service::handle({{"revision", 3}, {"model", testing::g1_model_code()}, {"query", {{"kind", "adjust"}}}},
                                 source.get_token());
  EXPECT_EQ(r.at("error").at("kind"), "Cancelled");
}

}  // namespace
}  // namespace dagitty
