#include "anares/jsonl.hpp"

#include <fstream>

#include "anares/errors.hpp"

namespace anares {

void for_each_jsonl(
    const std::filesystem::path& path,
    const std::function<void(std::size_t, const json&)>& fn,
    const std::function<void(std::size_t, const std::string&)>& on_bad_line) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::io_error, "cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      if (on_bad_line) {
        on_bad_line(line_no, line);
        continue;
      }
      throw Error(Errc::schema_error, path.filename().string() + " line " +
                                          std::to_string(line_no) +
                                          ": not valid JSON");
    }
    fn(line_no, j);
  }
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::vector<json> rows;
  for_each_jsonl(path, [&](std::size_t, const json& j) { rows.push_back(j); });
  return rows;
}

void write_jsonl(const std::filesystem::path& path,
                 const std::vector<json>& rows) {
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::io_error, "cannot write " + path.string());
  for (const json& j : rows) out << j.dump() << "\n";
}

}  // namespace anares
