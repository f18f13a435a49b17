#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qshock/io.hpp"

using namespace qshock;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "qshock-io-tests") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const double qnan = std::numeric_limits<double>::quiet_NaN();
const double pinf = std::numeric_limits<double>::infinity();

} // namespace

TEST_CASE("format_double is deterministic and round-trip exact") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(82.0) == "82");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(qnan) == "nan");
    CHECK(format_double(pinf) == "inf");
    CHECK(format_double(-pinf) == "-inf");
    CHECK(std::stod(format_double(0.30000000000000004)) == 0.30000000000000004);
}

TEST_CASE("csv round trip preserves every value") {
    TempDir dir;
    const fs::path file = dir.path / "round.csv";

    Table table;
    table.command = "fields";
    table.columns.emplace_back(
        "x", std::vector<double>{-1.5, 0.1, 2.2250738585072014e-308, 1e300, qnan, pinf});
    table.columns.emplace_back(
        "status", std::vector<std::string>{"ok", "no-root", "ok", "ok", "ok", "ok"});
    write_csv(table, file);

    const Table back = read_csv(file);
    CHECK(back.command == "fields");
    REQUIRE(back.columns.size() == 2);
    CHECK(back.columns[0].name == "x");
    CHECK(back.columns[0].numeric());
    REQUIRE(back.columns[0].size() == 6);
    const auto& want = table.columns[0].nums();
    const auto& got = back.columns[0].nums();
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (std::isnan(want[i]))
            CHECK(std::isnan(got[i]));
        else
            CHECK(got[i] == want[i]);
    }
    CHECK_FALSE(back.columns[1].numeric());
    CHECK(back.columns[1].strs() == table.columns[1].strs());
}

TEST_CASE("csv starts with the schema line and is byte-stable") {
    TempDir dir;
    Table table;
    table.command = "shock";
    table.columns.emplace_back("t_s", std::vector<double>{82.0, 78.0});

    const fs::path a = dir.path / "a.csv";
    const fs::path b = dir.path / "b.csv";
    write_csv(table, a);
    write_csv(table, b);

    const std::string text = slurp(a);
    CHECK(text.rfind("# qshock-schema v1 shock\n", 0) == 0);
    CHECK(text == slurp(b));
    CHECK(text.find("t_s") != std::string::npos);
}

TEST_CASE("csv rejects malformed tables and files") {
    TempDir dir;
    Table lopsided;
    lopsided.command = "x";
    lopsided.columns.emplace_back("a", std::vector<double>{1.0, 2.0});
    lopsided.columns.emplace_back("b", std::vector<double>{1.0});
    CHECK_THROWS_AS(write_csv(lopsided, dir.path / "bad.csv"), std::invalid_argument);

    Table empty;
    empty.command = "x";
    CHECK_THROWS_AS(write_csv(empty, dir.path / "empty.csv"), std::invalid_argument);

    const fs::path no_schema = dir.path / "no_schema.csv";
    std::ofstream(no_schema) << "a,b\n1,2\n";
    CHECK_THROWS_AS(read_csv(no_schema), std::runtime_error);

    const fs::path ragged = dir.path / "ragged.csv";
    std::ofstream(ragged) << "# qshock-schema v1 x\na,b\n1,2\n3\n";
    CHECK_THROWS_AS(read_csv(ragged), std::runtime_error);

    CHECK_THROWS_AS(read_csv(dir.path / "missing.csv"), std::runtime_error);
}

TEST_CASE("a single non-numeric cell turns the column textual") {
    TempDir dir;
    const fs::path file = dir.path / "mixed.csv";
    std::ofstream(file) << "# qshock-schema v1 x\nv\n1.5\nabc\n2.5\n";
    const Table back = read_csv(file);
    REQUIRE(back.columns.size() == 1);
    CHECK_FALSE(back.columns[0].numeric());
    CHECK(back.columns[0].strs() == std::vector<std::string>{"1.5", "abc", "2.5"});
}

TEST_CASE("json mirror carries meta, data and nulls") {
    TempDir dir;
    const fs::path file = dir.path / "table.json";

    Table table;
    table.command = "riemann";
    table.columns.emplace_back("rho", std::vector<double>{0.5, 1.0});
    table.columns.emplace_back("f", std::vector<double>{qnan, 0.0});
    table.columns.emplace_back("status", std::vector<std::string>{"ok", "ok"});
    Meta meta{{"command", "riemann"}, {"mode", "paper"}};
    write_json(table, meta, file);

    const nlohmann::json doc = nlohmann::json::parse(slurp(file));
    CHECK(doc["schema"] == "qshock-schema v1 riemann");
    CHECK(doc["meta"]["command"] == "riemann");
    CHECK(doc["meta"]["mode"] == "paper");
    CHECK(doc["data"]["rho"][0] == 0.5);
    CHECK(doc["data"]["f"][0].is_null());
    CHECK(doc["data"]["f"][1] == 0.0);
    CHECK(doc["data"]["status"][1] == "ok");

    // byte-stable too
    const fs::path again = dir.path / "table2.json";
    write_json(table, meta, again);
    CHECK(slurp(file) == slurp(again));
}

TEST_CASE("sidecar metadata is a flat json object") {
    TempDir dir;
    const fs::path file = dir.path / "run.meta.json";
    write_sidecar(Meta{{"command", "evolve"}, {"n", "4096"}}, file);
    const nlohmann::json doc = nlohmann::json::parse(slurp(file));
    CHECK(doc["command"] == "evolve");
    CHECK(doc["n"] == "4096");
    CHECK(doc.size() == 2);
}
