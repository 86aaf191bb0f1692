#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include <httplib.h>

#include "nirrt/guidance.hpp"
#include "nirrt/planner.hpp"
#include "nirrt/providers.hpp"
#include "nirrt/rng.hpp"

using namespace nirrt;
using nlohmann::json;

namespace {

/// In-process inference server; `handler` builds the response.
class FakeServer {
 public:
  explicit FakeServer(std::function<void(const httplib::Request&, httplib::Response&)> handler) {
    server_.Post("/infer", [this, handler](const httplib::Request& req, httplib::Response& res) {
      ++requests;
      last_body = req.body;
      handler(req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeServer() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  std::atomic<int> requests{0};
  std::string last_body;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

void echo_ones(const httplib::Request& req, httplib::Response& res) {
  const json body = json::parse(req.body);
  json probs = json::array();
  for (std::size_t i = 0; i < body["points"].size(); ++i) probs.push_back(i % 2 ? 1.0 : 0.0);
  res.set_content(json{{"probabilities", probs}}.dump(), "application/json");
}

PointCloud small_cloud(int n) {
  Rng rng(1);
  const World w = World::empty(State{0, 0}, State{100, 100});
  return normalize_coordinates(add_one_hot_features(
      point_cloud_sampling(w, std::nullopt, n, rng), State{10, 10}, State{90, 90}, 10));
}

}  // namespace

TEST(WireProtocol, EncodeRequest) {
  const std::vector<std::array<double, 3>> pts{{0.5, -0.25, 0.0}, {1, 1, 0}};
  const std::vector<PointFeatures> f{{true, false}, {true, true}};
  const std::string body = encode_infer_request({pts, f, {}, State{0, 0}, State{1, 1}});
  const json j = json::parse(body);
  EXPECT_EQ(j["points"], json::parse("[[0.5,-0.25,0.0],[1.0,1.0,0.0]]"));
  EXPECT_EQ(j["features"], json::parse("[[1,0],[1,1]]"));
}

TEST(WireProtocol, DecodeResponse) {
  EXPECT_EQ(decode_infer_response(R"({"probabilities":[0.1,0.9]})", 2),
            (std::vector<double>{0.1, 0.9}));
  EXPECT_THROW(decode_infer_response(R"({"probabilities":[0.1]})", 2), GuidanceUnavailable);
  EXPECT_THROW(decode_infer_response(R"({"probs":[0.1,0.2]})", 2), GuidanceUnavailable);
  EXPECT_THROW(decode_infer_response(R"({"probabilities":["a","b"]})", 2), GuidanceUnavailable);
  EXPECT_THROW(decode_infer_response("not json", 2), GuidanceUnavailable);
}

TEST(RemoteProvider, RoundTripThroughServer) {
  FakeServer server(echo_ones);
  RemoteGuidanceProvider remote(server.url() + "/");
  const PointCloud c = small_cloud(64);
  const GuidanceSet g = infer_guidance(c, remote, State{10, 10}, State{90, 90});
  EXPECT_EQ(g.size(), 32u);
  EXPECT_EQ(server.requests, 1);
  const json sent = json::parse(server.last_body);
  ASSERT_EQ(sent["points"].size(), 64u);
  EXPECT_EQ(sent["points"][0].size(), 3u);
  EXPECT_EQ(sent["points"][0][2], 0.0);
  EXPECT_EQ(sent["features"][0].size(), 2u);
}

TEST(RemoteProvider, ErrorsBecomeUnavailable) {
  const PointCloud c = small_cloud(16);
  {
    FakeServer server([](const httplib::Request&, httplib::Response& res) {
      res.status = 500;
      res.set_content("boom", "text/plain");
    });
    RemoteGuidanceProvider remote(server.url());
    EXPECT_THROW(infer_guidance(c, remote, State{0, 0}, State{1, 1}), GuidanceUnavailable);
  }
  {
    FakeServer server([](const httplib::Request&, httplib::Response& res) {
      res.set_content(R"({"probabilities":[1.0]})", "application/json");
    });
    RemoteGuidanceProvider remote(server.url());
    EXPECT_THROW(infer_guidance(c, remote, State{0, 0}, State{1, 1}), GuidanceUnavailable);
  }
  {
    // Nothing listens on this port once the server is gone.
    std::string url;
    {
      FakeServer gone(echo_ones);
      url = gone.url();
    }
    RemoteGuidanceProvider remote(url, std::chrono::milliseconds(500));
    EXPECT_THROW(infer_guidance(c, remote, State{0, 0}, State{1, 1}), GuidanceUnavailable);
  }
}

TEST(RemoteProvider, ConcurrentCallers) {
  FakeServer server(echo_ones);
  RemoteGuidanceProvider remote(server.url());
  const PointCloud c = small_cloud(32);
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int k = 0; k < 5; ++k) ok += infer_guidance(c, remote, State{0, 0}, State{1, 1}).size() == 16;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok, 20);
}

TEST(RemoteProvider, PlannerDegradesWhenServerFails) {
  FakeServer server([](const httplib::Request&, httplib::Response& res) { res.status = 503; });
  RemoteGuidanceProvider remote(server.url());
  const ProblemInstance p{World::empty(State{0, 0}, State{100, 100}), State{10, 50}, State{90, 50}, {}};
  NirrtConfig cfg = NirrtConfig::defaults_for(PlannerKind::NirrtPngFC, 2);
  cfg.planner.max_iterations = 500;
  cfg.guidance.n_points = 64;
  const PlanResult r = run_planner(p, &remote, cfg, Rng(1));
  EXPECT_EQ(r.record.count(EventKind::GuidanceUnavailable), 1);
  EXPECT_EQ(server.requests, 1);
  EXPECT_TRUE(std::isfinite(r.record.final_cost()));
}

TEST(ProviderUrl, EnvironmentOverride) {
  ::unsetenv("NIRRT_PROVIDER_URL");
  EXPECT_EQ(provider_url_from_env("http://a:1"), "http://a:1");
  ::setenv("NIRRT_PROVIDER_URL", "http://b:2", 1);
  EXPECT_EQ(provider_url_from_env("http://a:1"), "http://b:2");
  ::unsetenv("NIRRT_PROVIDER_URL");
  EXPECT_THROW(RemoteGuidanceProvider(""), ContractViolation);
}
