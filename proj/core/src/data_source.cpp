#include "clsfront/data_source.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "clsfront/errors.hpp"

namespace clsfront {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Errc::io_error, "failed reading " + path.string());
  return buffer.str();
}

DataSource DataSource::embedded() { return DataSource(std::nullopt); }

DataSource DataSource::directory(fs::path root) {
  if (!fs::is_directory(root)) {
    throw Error(Errc::io_error, "data directory " + root.string() + " does not exist");
  }
  return DataSource(std::move(root));
}

DataSource DataSource::resolve(const std::optional<fs::path>& explicit_dir) {
  if (explicit_dir) return directory(*explicit_dir);
  if (const char* env = std::getenv(kEnvVar); env != nullptr && *env != '\0') {
    return directory(env);
  }
  return embedded();
}

std::string DataSource::read(std::string_view relative) const {
  if (root_) return read_file(*root_ / fs::path(relative));
  for (const auto& file : detail::embedded_files()) {
    if (file.path == relative) return std::string(file.content);
  }
  throw Error(Errc::io_error, "no embedded data file " + std::string(relative));
}

bool DataSource::exists(std::string_view relative) const {
  if (root_) return fs::is_regular_file(*root_ / fs::path(relative));
  const auto files = detail::embedded_files();
  return std::any_of(files.begin(), files.end(),
                     [&](const auto& f) { return f.path == relative; });
}

std::vector<std::string> DataSource::list_json(std::string_view subdir) const {
  std::vector<std::string> out;
  const std::string prefix = std::string(subdir) + "/";
  if (root_) {
    const fs::path dir = *root_ / fs::path(subdir);
    if (fs::is_directory(dir)) {
      for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          out.push_back(prefix + entry.path().filename().string());
        }
      }
    }
  } else {
    for (const auto& file : detail::embedded_files()) {
      std::string_view path = file.path;
      if (path.starts_with(prefix) && path.find('/', prefix.size()) == std::string_view::npos &&
          path.ends_with(".json")) {
        out.emplace_back(path);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DataSource::describe() const {
  return root_ ? root_->string() : std::string("<embedded>");
}

}  // namespace clsfront
