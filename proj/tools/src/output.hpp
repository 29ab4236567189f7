#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qtide::cli {

using ordered_json = nlohmann::ordered_json;

/// Fixed 12-significant-digit rendering used for all CSV numbers, so
/// emitted files are diffable regression artifacts.
std::string format_number(double value);

/// One named result with its unit and the formula or model it came from.
struct ResultRow {
    std::string name;
    std::string value;
    std::string unit;
    std::string origin;
};

/// Envelope shared by all subcommand outputs: schema version, an echo of
/// the inputs that produced the numbers, the named results, and any
/// tabular series.
struct OutputRecord {
    int schema_version = 1;
    std::string subcommand;
    ordered_json inputs = ordered_json::object();
    ordered_json results = ordered_json::object();
    std::vector<ResultRow> rows;
    std::vector<std::string> csv_header;
    std::vector<std::vector<double>> csv_rows;

    void add_row(const std::string& name, double value, const std::string& unit,
                 const std::string& origin);
    void add_row(const std::string& name, const std::string& value, const std::string& unit,
                 const std::string& origin);

    std::string to_json() const;
    std::string to_csv() const;
};

} // namespace qtide::cli
