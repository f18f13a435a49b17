#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qshock {

/// One named column, either numeric or textual (status/label columns).
struct Column {
    std::string name;
    std::variant<std::vector<double>, std::vector<std::string>> values;

    Column(std::string n, std::vector<double> v)
        : name(std::move(n)), values(std::move(v)) {}
    Column(std::string n, std::vector<std::string> v)
        : name(std::move(n)), values(std::move(v)) {}

    bool numeric() const noexcept { return values.index() == 0; }
    std::size_t size() const noexcept {
        return numeric() ? std::get<0>(values).size() : std::get<1>(values).size();
    }
    const std::vector<double>& nums() const { return std::get<0>(values); }
    const std::vector<std::string>& strs() const { return std::get<1>(values); }
};

/// Columnar table tagged with the emitting command for the schema line.
struct Table {
    std::string command; // appended to "# qshock-schema v1 "
    std::vector<Column> columns;
};

/// Deterministic float formatting: 17 significant digits round-trip exactly;
/// NaN and infinities render as "nan", "inf", "-inf".
std::string format_double(double v);

/// Ordered key/value run metadata (no timestamps; lives in a sidecar file).
using Meta = std::map<std::string, std::string>;

/// CSV layout: schema comment line, header row, one row per index, comma
/// separated, '.' decimal point, 17 significant digits.
void write_csv(const Table& table, const std::filesystem::path& path);

/// Read a CSV written by write_csv. Values round-trip with zero change.
/// A column becomes textual when any of its cells fails numeric parsing.
Table read_csv(const std::filesystem::path& path);

/// JSON mirror of a table: {"meta": {...}, "data": {column: [values...]}}.
/// Non-finite values are emitted as null.
void write_json(const Table& table, const Meta& meta, const std::filesystem::path& path);

/// Sidecar metadata file (JSON object of strings).
void write_sidecar(const Meta& meta, const std::filesystem::path& path);

} // namespace qshock
