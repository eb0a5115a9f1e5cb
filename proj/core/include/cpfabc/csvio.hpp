#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cpfabc {

/// Formats a double so it parses back to the identical bits ("%.17g";
/// inf/nan spelled "inf"/"-inf"/"nan"). Used for every numeric CSV field so
/// outputs are byte-stable across runs and worker counts.
std::string format_double(double x);

double parse_double(const std::string& field);
long long parse_int(const std::string& field);

std::vector<std::string> split_csv_line(const std::string& line);

std::string join_csv(const std::vector<std::string>& fields);

/// Reads a whole text file; throws IoError if missing.
std::string read_text_file(const std::filesystem::path& path);

/// Writes text atomically (temp file + rename) creating parent directories.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace cpfabc
