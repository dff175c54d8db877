#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace emdet {

// All numeric CLI output goes through this: 17 significant digits, so every
// double round-trips exactly and re-runs are byte-identical.
std::string format_double(double v);

using CsvTable = std::vector<std::vector<std::string>>;

// Comma separator, LF line endings, no quoting (fields must not contain
// commas or newlines).
std::string csv_to_string(const CsvTable& table);
CsvTable csv_parse(std::string_view text);

void csv_write_file(const std::string& path, const CsvTable& table);
CsvTable csv_read_file(const std::string& path);

}  // namespace emdet
