/* Copyright 2026 The seqproof Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"
#include "properties.hpp"
#include "seqproof/service.hpp"

namespace seqproof {
namespace {

using nlohmann::json;
using testing::read_text;
using testing::source_path;

class ServiceTest : public ::testing::Test {
 protected:
  ServiceTest() : registry_(load_without_path()) {}

  static AxiomStore load_without_path() {
    AxiomStore store = load_store(source_path("data/axiom.dat"));
    store.set_source_path(std::nullopt);
    return store;
  }

  Response call(std::string_view method, std::string_view path, const json& body = json()) {
    return registry_.dispatch(method, path, body.is_null() ? "" : body.dump());
  }

  std::string create_t1() {
    const Response r = call("POST", "/sessions", {{"premises", "[Add([a,b],[c]), Mult([-1,b],[d])]"}});
    EXPECT_EQ(r.status, 201);
    return r.body["id"];
  }

  std::size_t option_index(const std::string& id, const std::string& connection) {
    const Response r = call("GET", "/sessions/" + id + "/options");
    for (const json& o : r.body["options"]) {
      if (o["connection"] == connection) return o["index"];
    }
    ADD_FAILURE() << "no option " << connection;
    return 0;
  }

  SessionRegistry registry_;
};

TEST_F(ServiceTest, HealthAndAxioms) {
  EXPECT_EQ(call("GET", "/health").status, 200);
  const Response r = call("GET", "/axioms");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["entries"].size(), 31u);
  EXPECT_EQ(r.body["integer_programs"].size(), 8u);
}

TEST_F(ServiceTest, CreateAndGet) {
  const std::string id = create_t1();
  EXPECT_EQ(id, "s1");
  const Response r = call("GET", "/sessions/" + id);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["lines"].size(), 2u);
  EXPECT_EQ(r.body["lines"][1]["annotation"], "d=(-1*b)");
  EXPECT_EQ(create_t1(), "s2");
  EXPECT_EQ(registry_.size(), 2u);
}

TEST_F(ServiceTest, CreateErrors) {
  EXPECT_EQ(call("POST", "/sessions", json::object()).status, 400);
  EXPECT_EQ(call("POST", "/sessions", {{"premises", "[Add([a,b],[c]"}}).status, 422);
  EXPECT_EQ(call("POST", "/sessions", {{"premises", "[Add([a,b],[c]), Add([c,b],[a])]"}}).status,
            422);
  EXPECT_EQ(registry_.dispatch("POST", "/sessions", "{oops").status, 400);
}

TEST_F(ServiceTest, UnknownRoutesAndSessions) {
  EXPECT_EQ(call("GET", "/sessions/s9").status, 404);
  EXPECT_EQ(call("GET", "/sessions/s9/options").status, 404);
  EXPECT_EQ(call("POST", "/sessions/s9/undo").status, 404);
  EXPECT_EQ(call("GET", "/nowhere").status, 404);
  EXPECT_EQ(call("DELETE", "/sessions/s1").status, 404);
}

TEST_F(ServiceTest, ApplyUndoExtract) {
  const std::string id = create_t1();
  const Response opts = call("GET", "/sessions/" + id + "/options");
  ASSERT_EQ(opts.status, 200);
  const std::string basis = opts.body["basis"];
  const std::size_t a15 = option_index(id, "[A15,2]");

  const Response applied = call("POST", "/sessions/" + id + "/apply", {{"option", a15}, {"basis", basis}});
  ASSERT_EQ(applied.status, 200) << applied.body.dump();
  EXPECT_EQ(applied.body["lines"][2]["statement"], "Add([b,d],[e])");
  EXPECT_EQ(applied.body["lines"][2]["connection"], "[A15,2]");

  EXPECT_EQ(call("POST", "/sessions/" + id + "/apply", {{"option", 0}, {"basis", basis}}).status, 409);
  EXPECT_EQ(call("POST", "/sessions/" + id + "/apply", {{"option", 100000}}).status, 422);
  EXPECT_EQ(call("POST", "/sessions/" + id + "/apply", {{"option", "x"}}).status, 400);

  const Response ex = call("POST", "/sessions/" + id + "/extract");
  ASSERT_EQ(ex.status, 200);
  EXPECT_EQ(ex.body["theorem"], "[[Mult([-1,b],[d])], Add([b,d],[e])]");
  EXPECT_EQ(ex.body["redundant"], json::array({1}));

  EXPECT_EQ(call("POST", "/sessions/" + id + "/undo").status, 200);
  EXPECT_EQ(call("POST", "/sessions/" + id + "/undo").status, 409);
  EXPECT_EQ(call("POST", "/sessions/" + id + "/extract").status, 409);
  EXPECT_EQ(call("GET", "/sessions/" + id).body["basis"], basis);
}

TEST_F(ServiceTest, ExtractAppendMakesTheoremAvailable) {
  const std::string id = create_t1();
  const std::size_t a15 = option_index(id, "[A15,2]");
  ASSERT_EQ(call("POST", "/sessions/" + id + "/apply", {{"option", a15}}).status, 200);
  const Response ex = call("POST", "/sessions/" + id + "/extract", {{"append", true}});
  ASSERT_EQ(ex.status, 200);
  EXPECT_EQ(ex.body["label"], "T1");
  EXPECT_EQ(call("GET", "/axioms").body["entries"].size(), 32u);
  EXPECT_EQ(call("POST", "/sessions/" + id + "/extract", {{"append", 1}}).status, 400);
}

TEST_F(ServiceTest, SnapshotRestoresSession) {
  const std::string id = create_t1();
  ASSERT_EQ(call("POST", "/sessions/" + id + "/apply", {{"option", option_index(id, "[A15,2]")}}).status,
            200);
  const json snapshot = call("GET", "/sessions/" + id).body;
  const Response copy = call("POST", "/sessions", {{"snapshot", snapshot}});
  ASSERT_EQ(copy.status, 201);
  EXPECT_EQ(copy.body["lines"], snapshot["lines"]);
  json bad = snapshot;
  bad["lines"][2]["connection"] = "[A15,1]";
  EXPECT_EQ(call("POST", "/sessions", {{"snapshot", bad}}).status, 422);
}

TEST_F(ServiceTest, ConcurrentSessions) {
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([this] {
      for (int k = 0; k < 5; ++k) {
        const Response r = call("POST", "/sessions", {{"premises", "[Add([a,b],[c])]"}});
        const std::string id = r.body["id"];
        call("POST", "/sessions/" + id + "/apply", {{"option", 0}});
        call("GET", "/sessions/" + id + "/options");
      }
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(registry_.size(), 20u);
}

TEST_F(ServiceTest, OverHttp) {
  HttpServer server(registry_);
  const int port = server.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread loop([&server] { server.run(); });
  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  auto created = client.Post("/sessions", R"({"premises": "[Int([a],[])]"})", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const json body = json::parse(created->body);
  auto missing = client.Get("/sessions/zz");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  auto options = client.Get("/sessions/" + body["id"].get<std::string>() + "/options");
  ASSERT_TRUE(options);
  EXPECT_EQ(options->status, 200);
  EXPECT_FALSE(json::parse(options->body)["options"].empty());
  server.stop();
  loop.join();
}

}  // namespace
}  // namespace seqproof
