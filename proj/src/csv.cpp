#include "emdet/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace emdet {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_to_string(const CsvTable& table) {
    std::string out;
    for (const auto& row : table) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += row[i];
        }
        out.push_back('\n');
    }
    return out;
}

CsvTable csv_parse(std::string_view text) {
    CsvTable table;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        std::vector<std::string> row;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string_view::npos) {
                row.emplace_back(line.substr(start));
                break;
            }
            row.emplace_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        table.push_back(std::move(row));
        pos = eol + 1;
    }
    return table;
}

void csv_write_file(const std::string& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    const std::string text = csv_to_string(table);
    if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
        throw std::runtime_error("csv_write_file: cannot write '" + path + "'");
}

CsvTable csv_read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("csv_read_file: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return csv_parse(buf.str());
}

}  // namespace emdet
