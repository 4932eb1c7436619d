#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace lspom {

/// Format a double with full round-trip precision ("%.17g"); output is
/// deterministic across runs.
std::string format_double(double v);

/// Column-named table for CSV emission.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

/// Column schema: name plus "int" | "float" | "string".
struct CsvSchema {
    std::vector<std::pair<std::string, std::string>> columns;

    static CsvSchema from_json_file(const std::string& path);
};

/// Check column names, order and cell types. Throws ConfigError on mismatch.
void validate_csv(const CsvTable& table, const CsvSchema& schema);

void write_json(const std::string& path, const nlohmann::ordered_json& doc);
nlohmann::ordered_json read_json(const std::string& path);

} // namespace lspom
