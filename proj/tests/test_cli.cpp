#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pgic/commands.hpp"
#include "pgic/error.hpp"
#include "pgic/instance_io.hpp"
#include "support/generators.hpp"

using namespace pgic;

namespace {

const char* kExample = R"({"channels":[{"a":0.6,"b":0.6,"c":4,"d":4},{"a":0.24,"b":0.24,"c":1.2,"d":1.2}],"P":0.1,"Q":0.1})";

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("pgic_test_" + name);
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') quoted = !quoted;
        else if (ch == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else cur += ch;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("instance parsing") {
    const PgicInstance inst = parse_instance(kExample);
    CHECK(inst.size() == 2);
    CHECK(inst.channel(1).c() == 1.2);
    CHECK(inst.total_q() == 0.1);
    CHECK(parse_instance(instance_to_json(inst)).channel(0) == inst.channel(0));

    CHECK_THROWS_WITH_AS(parse_instance("{"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"channels":[],"P":1,"Q":1,"R":2})"), doctest::Contains("unknown key"), Error);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"channels":[{"a":0,"b":0,"c":1,"d":1,"e":0}],"P":1,"Q":1})"),
                         doctest::Contains("unknown key"), Error);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"channels":[{"a":0,"b":0,"c":1}],"P":1,"Q":1})"),
                         doctest::Contains("missing key"), Error);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"channels":[{"a":"x","b":0,"c":1,"d":1}],"P":1,"Q":1})"),
                         doctest::Contains("number"), Error);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"channels":[{"a":2,"b":0,"c":1,"d":1}],"P":1,"Q":1})"),
                         doctest::Contains("InvalidChannel"), Error);
    CHECK_THROWS_WITH_AS(load_instance("/nonexistent/instance.json"), doctest::Contains("cannot read"), Error);
}

TEST_CASE("number formatting round trips") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    testgen::Gen gen(71);
    for (int n = 0; n < 200; ++n) {
        const double x = gen.log_uniform(1e-9, 1e9);
        const std::string s = format_number(x);
        CHECK(format_number(std::strtod(s.c_str(), nullptr)) == s);
    }
    CHECK(csv_row({"a", "b,c", "d\"e"}) == "a,\"b,c\",\"d\"\"e\"");
}

TEST_CASE("check command") {
    std::ostringstream out, err;
    CHECK(cmd_check(write_temp("check.json", kExample), out, err) == kExitOk);
    CHECK(out.str().find("in region") != std::string::npos);
    CHECK(out.str().find("channel 1") != std::string::npos);

    std::ostringstream out2, err2;
    const std::string strong = R"({"channels":[{"a":0.25,"b":0.25,"c":1,"d":1}],"P":0.1,"Q":0.1})";
    CHECK(cmd_check(write_temp("strong.json", strong), out2, err2) == kExitOutside);
    CHECK(out2.str().find("conditions not met") != std::string::npos);

    std::ostringstream out3, err3;
    CHECK(cmd_check(write_temp("bad.json", "{\"channels\": ["), out3, err3) == kExitInput);
    CHECK_FALSE(err3.str().empty());
}

TEST_CASE("solve command") {
    SUBCASE("single channel echoes the budgets") {
        std::ostringstream out, err;
        const std::string one = R"({"channels":[{"a":0.6,"b":0.6,"c":4,"d":4}],"P":0.3,"Q":0.2})";
        REQUIRE(cmd_solve(write_temp("one.json", one), {}, out, err) == kExitOk);
        const auto rows = lines(out.str());
        REQUIRE(rows.size() == 3);
        CHECK(rows[0] == "channel_index,p_star,q_star,region_label,k_p_star,k_q_star,rate_nats");
        const auto cells = split(rows[1]);
        CHECK(std::stod(cells[1]) == doctest::Approx(0.3).epsilon(1e-9));
        CHECK(std::stod(cells[2]) == doctest::Approx(0.2).epsilon(1e-9));
        CHECK(cells[3] == "A1");
        CHECK(split(rows[2])[0] == "total");
    }
    SUBCASE("identical symmetric pair") {
        std::ostringstream out, err;
        const std::string twin =
            R"({"channels":[{"a":0.04,"b":0.04,"c":1,"d":1},{"a":0.04,"b":0.04,"c":1,"d":1}],"P":20,"Q":20})";
        REQUIRE(cmd_solve(write_temp("twin.json", twin), {}, out, err) == kExitOk);
        const auto rows = lines(out.str());
        for (int i : {1, 2}) {
            CHECK(std::stod(split(rows[i])[1]) == doctest::Approx(10).epsilon(1e-9));
            CHECK(std::stod(split(rows[i])[2]) == doctest::Approx(10).epsilon(1e-9));
        }
    }
    SUBCASE("bits") {
        std::ostringstream out, err;
        const std::string free = R"({"channels":[{"a":0,"b":0,"c":1,"d":1}],"P":3,"Q":0})";
        SolveOptions opts;
        opts.bits = true;
        REQUIRE(cmd_solve(write_temp("bits.json", free), opts, out, err) == kExitOk);
        const auto rows = lines(out.str());
        CHECK(split(rows[0]).back() == "rate_bits");
        CHECK(std::stod(split(rows[2]).back()) == doctest::Approx(1.0).epsilon(1e-11));
    }
    SUBCASE("oracle and audit blocks") {
        std::ostringstream out, err;
        SolveOptions opts;
        opts.oracle_steps = 16;
        opts.audit_samples = 200;
        opts.seed = 5;
        REQUIRE(cmd_solve(write_temp("example.json", kExample), opts, out, err) == kExitOk);
        const auto rows = lines(out.str());
        REQUIRE(rows.size() == 10);
        CHECK(rows[5].rfind("oracle_steps,", 0) == 0);
        CHECK(split(rows[6]).back() == "true");
        CHECK(rows[8].rfind("audit_samples,", 0) == 0);
    }
    SUBCASE("outside the region") {
        std::ostringstream out, err;
        const std::string big = R"({"channels":[{"a":0.6,"b":0.6,"c":4,"d":4}],"P":2,"Q":2})";
        CHECK(cmd_solve(write_temp("big.json", big), {}, out, err) == kExitOutside);
        CHECK(out.str().empty());
        CHECK(err.str().find("not in the noisy-interference power region") != std::string::npos);
    }
    SUBCASE("deterministic output") {
        std::ostringstream a, b, err;
        const std::string path = write_temp("det.json", kExample);
        cmd_solve(path, {}, a, err);
        cmd_solve(path, {}, b, err);
        CHECK(a.str() == b.str());
        CHECK(a.str().find('\r') == std::string::npos);
    }
}

TEST_CASE("sweep-ratio command") {
    std::ostringstream out, err;
    REQUIRE(cmd_sweep_ratio(0.04, 0.04, 1, out, err) == kExitOk);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 2);
    const auto cells = split(rows[1]);
    CHECK(std::stod(cells[2]) == doctest::Approx(75).epsilon(1e-11));
    CHECK(std::stod(cells[3]) == doctest::Approx(75).epsilon(1e-11));
    CHECK(cells[4] == "1");

    std::ostringstream wide, err2;
    REQUIRE(cmd_sweep_ratio(0.01, 0.24, 24, wide, err2) == kExitOk);
    const auto grid = lines(wide.str());
    CHECK(grid.size() == 1 + 24 * 24);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const auto c = split(grid[i]);
        const double ratio = std::stod(c[4]);
        if (c[0] == c[1]) CHECK(ratio == doctest::Approx(1).epsilon(1e-10));
        else CHECK(ratio < 1);
    }

    std::ostringstream bad, err3;
    CHECK(cmd_sweep_ratio(0.0, 0.2, 5, bad, err3) == kExitInput);
    CHECK(cmd_sweep_ratio(0.1, 0.3, 5, bad, err3) == kExitInput);
}

TEST_CASE("sweep-pbar command") {
    std::ostringstream out, err;
    REQUIRE(cmd_sweep_pbar(0.125, 0.005, 0.25, 50, out, err) == kExitOk);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 51);
    CHECK(rows[0] == "a1,p_bar");
    CHECK(std::stod(split(rows[50])[1]) == 0.0);
    double last = INFINITY;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double p = std::stod(split(rows[i])[1]);
        CHECK(p <= last);
        last = p;
    }

    std::ostringstream diag, err2, ratio, err3;
    cmd_sweep_pbar(0.125, 0.125, 0.125, 1, diag, err2);
    cmd_sweep_ratio(0.125, 0.125, 1, ratio, err3);
    CHECK(split(lines(diag.str())[1])[1] == split(lines(ratio.str())[1])[2]);

    std::ostringstream bad, err4;
    CHECK(cmd_sweep_pbar(0.125, 0.0, 0.25, 5, bad, err4) == kExitInput);
}

TEST_CASE("regions command") {
    std::ostringstream out, err;
    REQUIRE(cmd_regions(write_temp("regions.json", kExample), 60, out, err) == kExitOk);
    const auto rows = lines(out.str());
    CHECK(rows[0] == "record,channel,index,x,y,region,activity");
    int outer = 0, boundary = 0, sub = 0;
    for (const std::string& row : rows) {
        const auto c = split(row);
        if (c[0] == "b_outer") ++outer;
        if (c[0] == "power_boundary") ++boundary;
        if (c[0] == "subregion") {
            ++sub;
            if (c[5] == "B1^(2) B2^(4)") CHECK(c[6] == "(+,0) (0,0)");
            if (c[5] == "B1^(1) B2^(3)") CHECK(c[6] == "(+,+) (0,+)");
        }
    }
    CHECK(outer == 2 * 62);
    CHECK(boundary == 62);
    CHECK(sub == 9);

    std::ostringstream out2, err2;
    const std::string zic = R"({"channels":[{"a":0.5,"b":0,"c":1,"d":1}],"P":1,"Q":1})";
    CHECK(cmd_regions(write_temp("zic.json", zic), 20, out2, err2) == kExitOutside);
}
