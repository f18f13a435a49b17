#include "qshock/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qshock {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

double parse_double(const std::string& s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed numeric cell: " + s);
    return v;
}

void check_table(const Table& table) {
    if (table.columns.empty()) throw std::invalid_argument("table has no columns");
    const std::size_t rows = table.columns.front().size();
    for (const auto& c : table.columns)
        if (c.size() != rows)
            throw std::invalid_argument("table columns have unequal lengths");
}

std::string cell_text(const Column& c, std::size_t r) {
    return c.numeric() ? format_double(c.nums()[r]) : c.strs()[r];
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

} // namespace

void write_csv(const Table& table, const std::filesystem::path& path) {
    check_table(table);
    std::ofstream out(path, std::ios::binary); // binary: stable newlines
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "# qshock-schema v1 " << table.command << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c].name;
    out << "\n";
    const std::size_t rows = table.columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << cell_text(table.columns[c], r);
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

Table read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path.string());
    const std::string prefix = "# qshock-schema v1 ";
    if (line.rfind(prefix, 0) != 0)
        throw std::runtime_error("missing schema line in " + path.string());
    Table table;
    table.command = line.substr(prefix.size());
    if (!std::getline(in, line)) throw std::runtime_error("missing header row");
    const auto names = split(line, ',');
    std::vector<std::vector<std::string>> raw(names.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != names.size())
            throw std::runtime_error("row width mismatch in " + path.string());
        for (std::size_t c = 0; c < cells.size(); ++c) raw[c].push_back(cells[c]);
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
        std::vector<double> nums;
        nums.reserve(raw[c].size());
        bool ok = true;
        for (const auto& cell : raw[c]) {
            try {
                nums.push_back(parse_double(cell));
            } catch (const std::exception&) {
                ok = false;
                break;
            }
        }
        if (ok)
            table.columns.emplace_back(names[c], std::move(nums));
        else
            table.columns.emplace_back(names[c], std::move(raw[c]));
    }
    return table;
}

void write_json(const Table& table, const Meta& meta, const std::filesystem::path& path) {
    check_table(table);
    nlohmann::json root;
    root["schema"] = "qshock-schema v1 " + table.command;
    root["meta"] = nlohmann::json::object();
    for (const auto& [k, v] : meta) root["meta"][k] = v;
    nlohmann::json data = nlohmann::json::object();
    for (const auto& c : table.columns) {
        if (c.numeric()) {
            nlohmann::json arr = nlohmann::json::array();
            for (double v : c.nums())
                arr.push_back(std::isfinite(v) ? nlohmann::json(v) : nlohmann::json());
            data[c.name] = std::move(arr);
        } else {
            data[c.name] = c.strs();
        }
    }
    root["data"] = std::move(data);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << root.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_sidecar(const Meta& meta, const std::filesystem::path& path) {
    nlohmann::json root = nlohmann::json::object();
    for (const auto& [k, v] : meta) root[k] = v;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << root.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace qshock
