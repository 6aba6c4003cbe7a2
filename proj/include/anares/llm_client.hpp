#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace anares {

struct EndpointConfig {
  std::string base_url = "http://127.0.0.1:8000/v1";
  std::string model_id = "local";
  double temperature = 0.0;
  int max_output_tokens = 512;
  double request_timeout_s = 120.0;
  int max_retries = 3;
  int max_in_flight = 4;
  int retry_backoff_ms = 250;  // doubled per attempt
  std::string api_key_env = "ANARES_API_KEY";

  void validate() const;  // throws ConfigError
};

struct CompletionStats {
  int attempts = 0;
  double latency_ms = 0.0;
};

// One blocking chat completion against {base_url}/chat/completions.
// Transient failures (connect errors, timeouts, 429, 5xx) are retried
// with exponential backoff; the first choice's message text is returned.
// The request carries `tag` in the wire `user` field so servers (and the
// mock) can key on the passage id.
std::string complete(const std::string& prompt, const EndpointConfig& config,
                     const std::string& tag = "",
                     CompletionStats* stats = nullptr);

struct BatchItem {
  std::string id;
  std::string prompt;
};

struct BatchResult {
  std::string id;
  std::optional<std::string> raw;    // completion text
  std::optional<std::string> error;  // per-item failure, batch continues
  bool from_cache = false;
  int attempts = 0;
  double latency_ms = 0.0;
};

// Persists one file per item under a run directory, making batches
// resumable and auditable; also appends a request log line per network
// round trip.
class RunStore {
 public:
  explicit RunStore(std::filesystem::path dir);

  std::optional<std::string> lookup(const std::string& id) const;
  void put(const BatchResult& result);
  void log_request(const std::string& id, int attempts, double latency_ms,
                   const std::string& status);
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path item_path(const std::string& id) const;
  std::filesystem::path dir_;
};

// Runs all prompts with at most config.max_in_flight outstanding
// requests; output order matches input order and per-item errors never
// abort the batch. Items already present in the store are returned from
// cache without any network traffic.
std::vector<BatchResult> run_batch(const std::vector<BatchItem>& items,
                                   const EndpointConfig& config,
                                   RunStore* store = nullptr);

}  // namespace anares
