#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "su11/cli.hpp"

namespace su11::cli {
namespace {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_number(*d);
    }
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return csv_escape(*s);
    }
    return {};
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

}  // namespace

std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << csv_escape(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << cell_text(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Table& table) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            const Cell& cell = row.at(i);
            if (const auto* d = std::get_if<double>(&cell)) {
                obj[table.columns[i]] = *d;
            } else if (const auto* s = std::get_if<std::string>(&cell)) {
                obj[table.columns[i]] = *s;
            } else {
                obj[table.columns[i]] = nullptr;
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

std::string render(const Table& table, Format format) {
    return format == Format::csv ? to_csv(table) : to_json(table);
}

std::filesystem::path resolve_output_path(const std::filesystem::path& path) {
    const char* dir = std::getenv(kOutputDirEnv);
    if (dir && *dir && path.is_relative()) {
        return std::filesystem::path(dir) / path;
    }
    return path;
}

void emit(const Table& table, Format format, const std::filesystem::path& path) {
    if (table.rows.empty()) {
        throw std::invalid_argument("emit: empty table");
    }
    const auto target = resolve_output_path(path);
    std::ofstream out(target, std::ios::binary);
    if (!out) {
        throw std::runtime_error("emit: cannot write " + target.string());
    }
    out << render(table, format);
    if (!out) {
        throw std::runtime_error("emit: write failed for " + target.string());
    }
}

Table parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Table table;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("parse_csv: missing header");
    }
    table.columns = split_csv_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != table.columns.size()) {
            throw std::invalid_argument("parse_csv: row width does not match header");
        }
        std::vector<Cell> row;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (fields[i].empty()) {
                row.emplace_back(std::monostate{});
            } else if (table.columns[i] == "error") {
                row.emplace_back(fields[i]);
            } else {
                row.emplace_back(std::stod(fields[i]));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace su11::cli
