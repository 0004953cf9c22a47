#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace stepenum::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kViolation = 2 };

/// Runs one subcommand (enumerate, regularize, roundtrip, compare, fit,
/// report, generate). `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace stepenum::cli
