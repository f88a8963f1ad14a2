#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clsfront {

namespace detail {
struct EmbeddedFile {
  std::string_view path;
  std::string_view content;
};
std::span<const EmbeddedFile> embedded_files();
}  // namespace detail

// Where inventory, script tables, packs, profiles and synthesizer profiles
// come from: a directory on disk, or the copies compiled into the library.
class DataSource {
 public:
  static constexpr const char* kEnvVar = "CLSFRONT_DATA_DIR";

  static DataSource embedded();
  static DataSource directory(std::filesystem::path root);

  // Explicit directory if given, else $CLSFRONT_DATA_DIR, else embedded.
  static DataSource resolve(const std::optional<std::filesystem::path>& explicit_dir);

  // `relative` uses forward slashes, e.g. "profiles/hindi.json".
  // Throws Errc::io_error when absent.
  std::string read(std::string_view relative) const;
  bool exists(std::string_view relative) const;

  // Sorted relative paths of the .json files directly under `subdir`.
  std::vector<std::string> list_json(std::string_view subdir) const;

  bool is_embedded() const noexcept { return !root_.has_value(); }
  std::string describe() const;

 private:
  explicit DataSource(std::optional<std::filesystem::path> root) : root_(std::move(root)) {}

  std::optional<std::filesystem::path> root_;
};

// Reads a whole file. Throws Errc::io_error.
std::string read_file(const std::filesystem::path& path);

}  // namespace clsfront
