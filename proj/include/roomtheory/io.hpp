#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

namespace roomtheory {

// Writes through a sibling temp file and renames it over `path` once the
// writer returns, so a failed write never leaves partial output behind.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& writer);

// Opens for reading or throws InputError naming the path.
std::ifstream open_input(const std::filesystem::path& path, bool binary = false);

}  // namespace roomtheory
