#pragma once

#include <filesystem>
#include <string>

namespace flexarm {

std::string read_file(const std::filesystem::path& path);

// Write via a temp file in the same directory, then rename. A reader never
// observes a half-written file and an interrupted writer leaves no partial
// final file behind.
void atomic_write_file(const std::filesystem::path& path, const std::string& contents);

// Atomically publish a fully-written directory at `final`. `tmp` must be on
// the same filesystem.
void commit_dir(const std::filesystem::path& tmp, const std::filesystem::path& final_path);

}  // namespace flexarm
