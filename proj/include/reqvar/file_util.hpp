#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace reqvar {

std::string read_file(const std::filesystem::path& path);

// Writes through a temporary file and renames, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace reqvar
