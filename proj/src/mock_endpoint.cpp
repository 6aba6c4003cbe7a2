#include "anares/mock_endpoint.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "anares/errors.hpp"

namespace anares {

using json = nlohmann::json;

struct MockEndpoint::Impl {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  std::mutex mutex;
  Mode mode = Mode::echo_gold;
  std::unordered_map<std::string, std::string> answers;
  std::vector<int> pending_statuses;

  std::atomic<int> requests{0};
  std::atomic<int> in_flight{0};
  std::atomic<int> high_water{0};

  void handle(const httplib::Request& req, httplib::Response& res) {
    requests.fetch_add(1);
    int now = in_flight.fetch_add(1) + 1;
    int seen = high_water.load();
    while (now > seen && !high_water.compare_exchange_weak(seen, now)) {
    }
    // hold the slot briefly so concurrent clients actually overlap
    std::this_thread::sleep_for(std::chrono::milliseconds(2));

    int forced_status = 0;
    std::string content;
    {
      std::lock_guard<std::mutex> lock(mutex);
      if (!pending_statuses.empty()) {
        forced_status = pending_statuses.front();
        pending_statuses.erase(pending_statuses.begin());
      }
    }
    if (forced_status != 0) {
      res.status = forced_status;
      res.set_content("{\"error\":\"scripted\"}", "application/json");
      in_flight.fetch_sub(1);
      return;
    }

    json body = json::parse(req.body, nullptr, false);
    std::string tag;
    if (!body.is_discarded() && body.contains("user"))
      tag = body["user"].get<std::string>();
    {
      std::lock_guard<std::mutex> lock(mutex);
      if (mode == Mode::echo_gold) {
        auto it = answers.find(tag);
        content = it == answers.end() ? "" : it->second;
      } else {
        content = "";
      }
    }

    json reply = {{"id", "mock-" + std::to_string(requests.load())},
                  {"object", "chat.completion"},
                  {"model", "mock"},
                  {"choices",
                   json::array({{{"index", 0},
                                 {"message", {{"role", "assistant"},
                                              {"content", content}}},
                                 {"finish_reason", "stop"}}})}};
    res.set_content(reply.dump(), "application/json");
    in_flight.fetch_sub(1);
  }
};

MockEndpoint::MockEndpoint() : impl_(std::make_unique<Impl>()) {
  impl_->server.Post("/v1/chat/completions",
                     [this](const httplib::Request& req,
                            httplib::Response& res) { impl_->handle(req, res); });
  impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
  if (impl_->port <= 0)
    throw Error(Errc::endpoint_unreachable, "mock endpoint failed to bind");
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

MockEndpoint::~MockEndpoint() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

void MockEndpoint::set_mode(Mode mode) {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  impl_->mode = mode;
}

void MockEndpoint::set_answers(
    std::unordered_map<std::string, std::string> answers) {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  impl_->answers = std::move(answers);
}

void MockEndpoint::push_statuses(std::vector<int> statuses) {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  impl_->pending_statuses = std::move(statuses);
}

std::string MockEndpoint::base_url() const {
  return "http://127.0.0.1:" + std::to_string(impl_->port) + "/v1";
}

int MockEndpoint::request_count() const { return impl_->requests.load(); }

int MockEndpoint::high_water_mark() const { return impl_->high_water.load(); }

void MockEndpoint::reset_counters() {
  impl_->requests.store(0);
  impl_->high_water.store(0);
}

}  // namespace anares
