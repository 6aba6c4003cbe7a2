#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace anares {

// In-process chat-completions server for offline runs and tests. Serves
// the same wire format as a real endpoint, so the whole HTTP client
// path is exercised. Deterministic: echo_gold answers from an id-keyed
// table (requests carry the passage id in the `user` field), empty
// returns "" for everything.
class MockEndpoint {
 public:
  enum class Mode { echo_gold, empty };

  MockEndpoint();
  ~MockEndpoint();
  MockEndpoint(const MockEndpoint&) = delete;
  MockEndpoint& operator=(const MockEndpoint&) = delete;

  void set_mode(Mode mode);
  void set_answers(std::unordered_map<std::string, std::string> answers);
  // Status codes to serve before answering normally (for retry tests).
  void push_statuses(std::vector<int> statuses);

  std::string base_url() const;  // http://127.0.0.1:<port>/v1
  int request_count() const;
  int high_water_mark() const;  // max concurrent in-flight requests seen
  void reset_counters();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace anares
