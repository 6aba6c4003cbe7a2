#pragma once

#include <stdexcept>
#include <string>

namespace anares {

// Error codes for everything that can go wrong below the CLI layer.
enum class Errc {
  // tagged-text grammar
  unbalanced_tags,
  duplicate_tag,
  crossing_tags,
  empty_tag_content,
  invalid_span,
  span_out_of_range,
  // encoding
  invalid_utf8,
  // dataset loading
  io_error,
  schema_error,
  invariant_violation,
  // CoNLL-U ingestion
  malformed_conllu,
  alignment_error,
  // prompting
  candidate_missing,
  bad_shot_count,
  insufficient_exemplars,
  no_distractor_available,
  // endpoint
  endpoint_unreachable,
  retries_exhausted,
  malformed_response,
  // aggregation
  unknown_id,
  duplicate_id,
  // configuration
  config_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace anares
