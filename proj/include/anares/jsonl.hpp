#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace anares {

using json = nlohmann::json;

// Calls fn(line_number, parsed) for every non-blank line. Parse failures
// go to on_bad_line when given, otherwise surface as Error(schema_error)
// carrying the line number.
void for_each_jsonl(
    const std::filesystem::path& path,
    const std::function<void(std::size_t, const json&)>& fn,
    const std::function<void(std::size_t, const std::string&)>& on_bad_line =
        nullptr);

std::vector<json> read_jsonl(const std::filesystem::path& path);

void write_jsonl(const std::filesystem::path& path,
                 const std::vector<json>& rows);

}  // namespace anares
