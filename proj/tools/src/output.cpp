#include "output.hpp"

#include <cstdio>

namespace qtide::cli {

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void OutputRecord::add_row(const std::string& name, double value, const std::string& unit,
                           const std::string& origin) {
    rows.push_back({name, format_number(value), unit, origin});
}

void OutputRecord::add_row(const std::string& name, const std::string& value,
                           const std::string& unit, const std::string& origin) {
    rows.push_back({name, value, unit, origin});
}

std::string OutputRecord::to_json() const {
    ordered_json doc;
    doc["schema_version"] = schema_version;
    doc["subcommand"] = subcommand;
    doc["inputs"] = inputs;
    if (!results.empty()) doc["results"] = results;
    if (!rows.empty()) {
        ordered_json list = ordered_json::array();
        for (const auto& row : rows)
            list.push_back({{"name", row.name},
                            {"value", row.value},
                            {"unit", row.unit},
                            {"origin", row.origin}});
        doc["quantities"] = list;
    }
    if (!csv_rows.empty()) {
        ordered_json series = ordered_json::object();
        series["columns"] = csv_header;
        ordered_json data = ordered_json::array();
        for (const auto& row : csv_rows) {
            ordered_json line = ordered_json::array();
            for (double v : row) line.push_back(v);
            data.push_back(line);
        }
        series["rows"] = data;
        doc["series"] = series;
    }
    return doc.dump(2) + "\n";
}

std::string OutputRecord::to_csv() const {
    std::string out;
    if (!csv_rows.empty()) {
        for (std::size_t i = 0; i < csv_header.size(); ++i) {
            if (i) out += ',';
            out += csv_header[i];
        }
        out += '\n';
        for (const auto& row : csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += format_number(row[i]);
            }
            out += '\n';
        }
        return out;
    }
    out = "name,value,unit,origin\n";
    for (const auto& row : rows)
        out += row.name + ',' + row.value + ',' + row.unit + ',' + row.origin + '\n';
    return out;
}

} // namespace qtide::cli
