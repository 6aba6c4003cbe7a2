#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace anares::testsupport {

// Scoped scratch directory under the system temp root.
class TmpDir {
 public:
  explicit TmpDir(const std::string& prefix = "anares") {
    std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            (prefix + "-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TmpDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TmpDir(const TmpDir&) = delete;
  TmpDir& operator=(const TmpDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name,
                              const std::string& content) const {
    auto p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace anares::testsupport
