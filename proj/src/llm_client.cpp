#include "anares/llm_client.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "anares/errors.hpp"

namespace anares {

using json = nlohmann::json;

void EndpointConfig::validate() const {
  if (max_in_flight < 1)
    throw Error(Errc::config_error, "max_in_flight must be at least 1");
  if (temperature < 0.0)
    throw Error(Errc::config_error, "temperature must be non-negative");
  if (max_retries < 0)
    throw Error(Errc::config_error, "max_retries must be non-negative");
  if (base_url.find("://") == std::string::npos)
    throw Error(Errc::config_error, "base_url needs a scheme, e.g. http://");
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (base_url.rfind("https://", 0) == 0)
    throw Error(Errc::config_error,
                "this build lacks TLS support; use an http endpoint or a "
                "local gateway");
#endif
}

namespace {

// base_url = scheme://host[:port][/prefix] -> (origin, path prefix)
std::pair<std::string, std::string> split_base_url(const std::string& url) {
  auto scheme_end = url.find("://");
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, ""};
  std::string prefix = url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {url.substr(0, path_start), prefix};
}

bool retryable_status(int status) {
  return status == 408 || status == 429 || (status >= 500 && status < 600);
}

}  // namespace

std::string complete(const std::string& prompt, const EndpointConfig& config,
                     const std::string& tag, CompletionStats* stats) {
  config.validate();
  auto [origin, prefix] = split_base_url(config.base_url);
  const std::string path = prefix + "/chat/completions";

  json body = {
      {"model", config.model_id},
      {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
      {"temperature", config.temperature},
      {"max_tokens", config.max_output_tokens},
  };
  if (!tag.empty()) body["user"] = tag;
  const std::string payload = body.dump();

  httplib::Client cli(origin);
  cli.set_connection_timeout(std::chrono::milliseconds(
      static_cast<int>(config.request_timeout_s * 1000)));
  cli.set_read_timeout(std::chrono::milliseconds(
      static_cast<int>(config.request_timeout_s * 1000)));
  httplib::Headers headers;
  if (const char* key = std::getenv(config.api_key_env.c_str());
      key && *key)
    headers.emplace("Authorization", std::string("Bearer ") + key);

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&t0] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  int attempts = 0;
  int last_status = 0;
  bool connected_once = false;
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    ++attempts;
    if (attempt > 0)
      std::this_thread::sleep_for(std::chrono::milliseconds(
          config.retry_backoff_ms << (attempt - 1)));

    httplib::Result res = cli.Post(path, headers, payload, "application/json");
    if (!res) continue;  // connection-level failure, retry
    connected_once = true;
    last_status = res->status;

    if (res->status == 200) {
      if (stats) *stats = {attempts, elapsed_ms()};
      json reply = json::parse(res->body, nullptr, false);
      if (reply.is_discarded() || !reply.contains("choices") ||
          reply["choices"].empty() ||
          !reply["choices"][0].contains("message") ||
          !reply["choices"][0]["message"].contains("content"))
        throw Error(Errc::malformed_response,
                    "completion lacks choices[0].message.content");
      return reply["choices"][0]["message"]["content"].get<std::string>();
    }
    if (!retryable_status(res->status)) {
      if (stats) *stats = {attempts, elapsed_ms()};
      std::string detail = res->body.substr(0, 200);
      throw Error(Errc::malformed_response,
                  "HTTP " + std::to_string(res->status) +
                      (detail.empty() ? "" : ": " + detail));
    }
  }

  if (stats) *stats = {attempts, elapsed_ms()};
  if (!connected_once)
    throw Error(Errc::endpoint_unreachable,
                config.base_url + " not reachable after " +
                    std::to_string(attempts) + " attempt(s)");
  throw Error(Errc::retries_exhausted,
              "still HTTP " + std::to_string(last_status) + " after " +
                  std::to_string(attempts) + " attempt(s)");
}

// ---------------------------------------------------------------------

RunStore::RunStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_ / "items");
}

std::filesystem::path RunStore::item_path(const std::string& id) const {
  std::string safe;
  for (char c : id)
    safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
             c == '_' || c == '.')
                ? c
                : '_';
  return dir_ / "items" / (safe + ".json");
}

std::optional<std::string> RunStore::lookup(const std::string& id) const {
  std::ifstream in(item_path(id));
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("raw")) return std::nullopt;
  return j["raw"].get<std::string>();
}

void RunStore::put(const BatchResult& result) {
  json j = {{"id", result.id},
            {"attempts", result.attempts},
            {"latency_ms", result.latency_ms}};
  if (result.raw) j["raw"] = *result.raw;
  if (result.error) j["error"] = *result.error;
  std::ofstream out(item_path(result.id));
  out << j.dump(2) << "\n";
}

void RunStore::log_request(const std::string& id, int attempts,
                           double latency_ms, const std::string& status) {
  static std::mutex log_mutex;
  std::lock_guard<std::mutex> lock(log_mutex);
  std::ofstream out(dir_ / "requests.jsonl", std::ios::app);
  json j = {{"id", id},
            {"attempts", attempts},
            {"latency_ms", latency_ms},
            {"status", status},
            {"ts", std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count()}};
  out << j.dump() << "\n";
}

std::vector<BatchResult> run_batch(const std::vector<BatchItem>& items,
                                   const EndpointConfig& config,
                                   RunStore* store) {
  config.validate();
  std::vector<BatchResult> results(items.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      BatchResult& r = results[i];
      r.id = items[i].id;

      if (store) {
        if (auto cached = store->lookup(r.id)) {
          r.raw = std::move(cached);
          r.from_cache = true;
          continue;
        }
      }

      CompletionStats stats;
      try {
        r.raw = complete(items[i].prompt, config, r.id, &stats);
        r.attempts = stats.attempts;
        r.latency_ms = stats.latency_ms;
        if (store) {
          store->put(r);
          store->log_request(r.id, r.attempts, r.latency_ms, "ok");
        }
      } catch (const std::exception& e) {
        r.error = e.what();
        r.attempts = stats.attempts;
        r.latency_ms = stats.latency_ms;
        // failed items are not persisted, so a rerun retries them
        if (store)
          store->log_request(r.id, r.attempts, r.latency_ms, e.what());
      }
    }
  };

  const std::size_t n_workers = std::min<std::size_t>(
      static_cast<std::size_t>(config.max_in_flight), items.size());
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace anares
