#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace graphspace::csv {

/// Shortest round-trip decimal representation (locale-independent).
std::string cell(double v);
std::string cell(long long v);

void write_file(const std::filesystem::path& path, const std::string& text);

/// Splits CSV text into rows of fields (plain comma-separated, no quoting).
std::vector<std::vector<std::string>> parse(const std::string& text);

double parse_double(const std::string& field);

}  // namespace graphspace::csv
