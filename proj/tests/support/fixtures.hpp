#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "clsfront/data_source.hpp"
#include "clsfront/frontend.hpp"
#include "clsfront/unicode.hpp"

namespace clsfront::testing {

// Shipped data compiled into the library, loaded once per process.
inline const Frontend& shipped() {
  static const Frontend frontend = Frontend::load(DataSource::embedded());
  return frontend;
}

inline std::string utf8(std::u32string_view cps) { return encode_utf8(cps); }

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("clsfront-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace clsfront::testing

