#include "anares/errors.hpp"

namespace anares {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::unbalanced_tags: return "UnbalancedTags";
    case Errc::duplicate_tag: return "DuplicateTag";
    case Errc::crossing_tags: return "CrossingTags";
    case Errc::empty_tag_content: return "EmptyTagContent";
    case Errc::invalid_span: return "InvalidSpan";
    case Errc::span_out_of_range: return "SpanOutOfRange";
    case Errc::invalid_utf8: return "InvalidUtf8";
    case Errc::io_error: return "IoError";
    case Errc::schema_error: return "SchemaError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::malformed_conllu: return "MalformedConllu";
    case Errc::alignment_error: return "AlignmentError";
    case Errc::candidate_missing: return "CandidateMissing";
    case Errc::bad_shot_count: return "BadShotCount";
    case Errc::insufficient_exemplars: return "InsufficientExemplars";
    case Errc::no_distractor_available: return "NoDistractorAvailable";
    case Errc::endpoint_unreachable: return "EndpointUnreachable";
    case Errc::retries_exhausted: return "RetriesExhausted";
    case Errc::malformed_response: return "MalformedResponse";
    case Errc::unknown_id: return "UnknownId";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::config_error: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace anares
