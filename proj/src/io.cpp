#include "lspom/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lspom/errors.hpp"

namespace lspom {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) {
        throw NumericalError("CsvTable: row width does not match the header");
    }
    rows.push_back(std::move(row));
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);  // binary: identical bytes everywhere
    if (!out) throw ConfigError("cannot open for writing: " + path);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << row[c];
        }
        out << "\n";
    }
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open for reading: " + path);
    CsvTable table;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        if (header) {
            table.columns = std::move(cells);
            header = false;
        } else {
            table.add_row(std::move(cells));
        }
    }
    return table;
}

CsvSchema CsvSchema::from_json_file(const std::string& path) {
    const auto doc = read_json(path);
    if (!doc.is_object() || !doc.contains("columns") || !doc.at("columns").is_array()) {
        throw ConfigError("schema: expected {\"columns\": [[name, type], ...]} in " + path);
    }
    CsvSchema s;
    for (const auto& col : doc.at("columns")) {
        if (!col.is_array() || col.size() != 2) {
            throw ConfigError("schema: each column must be a [name, type] pair");
        }
        s.columns.emplace_back(col.at(0).get<std::string>(), col.at(1).get<std::string>());
    }
    return s;
}

namespace {

bool parses_as_double(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

bool parses_as_int(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtol(s.c_str(), &end, 10);
    return end == s.c_str() + s.size();
}

} // namespace

void validate_csv(const CsvTable& table, const CsvSchema& schema) {
    if (table.columns.size() != schema.columns.size()) {
        throw ConfigError("csv validation: column count mismatch");
    }
    for (std::size_t c = 0; c < schema.columns.size(); ++c) {
        if (table.columns[c] != schema.columns[c].first) {
            throw ConfigError("csv validation: column " + std::to_string(c) + " is \"" +
                              table.columns[c] + "\", expected \"" +
                              schema.columns[c].first + "\"");
        }
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t c = 0; c < schema.columns.size(); ++c) {
            const std::string& type = schema.columns[c].second;
            const std::string& cell = table.rows[r][c];
            const bool ok = type == "string" ||
                            (type == "int" && parses_as_int(cell)) ||
                            (type == "float" && (parses_as_double(cell) || cell == "nan"));
            if (!ok) {
                throw ConfigError("csv validation: row " + std::to_string(r) + " column \"" +
                                  schema.columns[c].first + "\": bad " + type + " value \"" +
                                  cell + "\"");
            }
        }
    }
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << doc.dump(2) << "\n";
}

nlohmann::ordered_json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open for reading: " + path);
    try {
        return nlohmann::ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError("JSON parse error in " + path + ": " + e.what());
    }
}

} // namespace lspom
