#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "kacim/report.hpp"

using namespace kacim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("/tmp/kacim_report_" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("csv quoting follows RFC 4180") {
    CsvTable t({"plain", "with,comma", "with\"quote"});
    t.add_row({"a", "b,c", "d\"e"});
    t.add_row({"line\nbreak", "", "-1.5"});
    const std::string s = t.to_string();
    CHECK(s ==
          "plain,\"with,comma\",\"with\"\"quote\"\n"
          "a,\"b,c\",\"d\"\"e\"\n"
          "\"line\nbreak\",,-1.5\n");
}

TEST_CASE("csv rows must match the column arity") {
    CsvTable t({"a", "b"});
    CHECK_THROWS_AS(t.add_row({"1"}), std::invalid_argument);
    CHECK_THROWS_AS(t.add_row({"1", "2", "3"}), std::invalid_argument);
    t.add_row({"1", "2"});
    CHECK(t.row_count() == 1);
}

TEST_CASE("numeric formatting is locale-independent and stable") {
    CHECK(CsvTable::num(1.0) == "1");
    CHECK(CsvTable::num(0.5) == "0.5");
    CHECK(CsvTable::num(-0.25) == "-0.25");
    CHECK(CsvTable::num(1.0 / 3.0) == CsvTable::num(1.0 / 3.0));
    CHECK(CsvTable::num(1e-9) == "1e-09");
}

TEST_CASE("experiment report round trips through csv and json") {
    TempPath prefix("roundtrip");
    ExperimentReport rep{"estimate", nlohmann::json{{"seed", 7}, {"n", 128}},
                         CsvTable({"seed", "kappa"}), 1.25};
    rep.rows.add_row({"7", "0.42"});
    rep.write(prefix.path);
    TempPath csv_cleanup("roundtrip.csv");
    TempPath json_cleanup("roundtrip.json");

    const std::string csv = slurp(prefix.path + ".csv");
    CHECK(csv == "seed,kappa\n7,0.42\n");

    const auto j = nlohmann::json::parse(slurp(prefix.path + ".json"));
    CHECK(j.at("command") == "estimate");
    CHECK(j.at("config").at("seed") == 7);
    CHECK(j.at("config").at("n") == 128);
    CHECK(j.at("row_count") == 1);
    CHECK(j.at("duration_seconds") == 1.25);
    CHECK(j.at("rows_file") == prefix.path + ".csv");
}

TEST_CASE("svg chart is a self-contained document with all the pieces") {
    TempPath p("chart.svg");
    SvgSeries s1{"dependent", {{0.1, 0.5, 0.02}, {0.2, 0.4, 0.03}, {0.3, 0.2, 0.0}}};
    SvgSeries s2{"independent", {{0.1, 0.05, 0.01}, {0.2, 0.06, 0.01}, {0.3, 0.04, 0.01}}};
    svg_line_chart(p.path, "sweep", "lambda", "kappa", {s1, s2});
    const std::string svg = slurp(p.path);

    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find(">sweep</text>") != std::string::npos);
    CHECK(svg.find(">lambda</text>") != std::string::npos);
    CHECK(svg.find(">kappa</text>") != std::string::npos);
    CHECK(svg.find(">dependent</text>") != std::string::npos);
    CHECK(svg.find(">independent</text>") != std::string::npos);
    // two polylines, one per series; error bars only where yerr > 0
    std::size_t polylines = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++polylines;
        ++pos;
    }
    CHECK(polylines == 2);
    std::size_t circles = 0;
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        ++pos;
    }
    CHECK(circles == 6);
    std::size_t bars = 0;
    pos = 0;
    while ((pos = svg.find("<line ", pos)) != std::string::npos) {
        ++bars;
        ++pos;
    }
    CHECK(bars == 5);  // one point has yerr == 0
}

TEST_CASE("svg chart handles degenerate ranges without dividing by zero") {
    TempPath p("flat.svg");
    SvgSeries flat{"flat", {{1.0, 2.0, 0.0}, {1.0, 2.0, 0.0}}};
    svg_line_chart(p.path, "t", "x", "y", {flat});
    const std::string svg = slurp(p.path);
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("inf") == std::string::npos);
}
