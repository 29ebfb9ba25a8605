#include "common/fs.hpp"

#include <fstream>
#include <sstream>

#include "common/error.hpp"

namespace flexarm {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void atomic_write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write file: " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw ConfigError("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

void commit_dir(const fs::path& tmp, const fs::path& final_path) {
  if (fs::exists(final_path)) {
    fs::remove_all(tmp);
    return;  // someone else finished first; their result is equivalent
  }
  fs::create_directories(final_path.parent_path());
  fs::rename(tmp, final_path);
}

}  // namespace flexarm
