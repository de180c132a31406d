#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "mahonian/int_poly.hpp"

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;  // stdout and stderr, interleaved
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = "'" MAHONIAN_CLI_PATH "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(MAHONIAN_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string strip_elapsed(const std::string& text) {
    static const std::regex ms_re("\"elapsed_ms\":[0-9]+");
    return std::regex_replace(text, ms_re, "\"elapsed_ms\":0");
}

} // namespace

TEST_CASE("distribution output") {
    auto r = run_cli("dist --group sn --stat maj --char sign -n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 - q^3\n");

    r = run_cli("dist --group bn --stat fmaj -n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + q\n");

    r = run_cli("dist --group bn --stat fmaj --char sign -n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 - q^4\n");

    r = run_cli("dist --group bn --stat fmaj --char sign -n 2 --order natural");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 - 2q^2 + q^4\n");

    r = run_cli("dist --group sn --stat maj -n 3 --last 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q^2 + q^3\n");

    r = run_cli("dist --group an --stat maj -n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + q + q^2\n");
}

TEST_CASE("machine distribution output") {
    const auto r = run_cli("dist --group sn --stat maj --char sign -n 3 --machine");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    const json j = json::parse(lines[0]);
    CHECK(j.at("command") == "dist");
    CHECK(j.at("group") == "sn");
    CHECK(j.at("stat") == "maj");
    CHECK(j.at("char") == "sign");
    CHECK(j.at("n") == 3);
    CHECK(!j.contains("order"));
    CHECK(!j.contains("last"));
    CHECK(j.at("poly").at("var") == "q");
    CHECK(j.at("poly").at("coeffs") == json::array({"1", "0", "0", "-1"}));
    CHECK(j.at("text") == "1 - q^3");

    // Coefficient strings reassemble into the rendered polynomial.
    std::vector<mahonian::Int> coeffs;
    for (const auto& c : j.at("poly").at("coeffs"))
        coeffs.emplace_back(c.get<std::string>());
    CHECK(mahonian::IntPoly::from_coeffs(std::move(coeffs)) ==
          mahonian::parse_int_poly(j.at("text").get<std::string>()));

    const auto signed_r =
        run_cli("dist --group bn --stat fmaj -n 2 --machine");
    const json sj = json::parse(lines_of(signed_r.out).at(0));
    CHECK(sj.at("order") == "neg-reversed");
    CHECK(sj.at("text") == "1 + 2q + 2q^2 + 2q^3 + q^4");

    const auto last_r = run_cli("dist --group sn --stat maj -n 3 --last 1 --machine");
    const json lj = json::parse(lines_of(last_r.out).at(0));
    CHECK(lj.at("last") == 1);
    CHECK(lj.at("text") == "q^2 + q^3");
}

TEST_CASE("table output") {
    auto r = run_cli("table --family mahonian --n-max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n1 + q\n");

    r = run_cli("table --family signed-mahonian --n-max 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_golden("table_signed_mahonian.txt"));

    r = run_cli("table --family subgroup-an --n-max 3 --machine");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    for (int i = 0; i < 3; ++i) {
        const json j = json::parse(lines[i]);
        CHECK(j.at("command") == "table");
        CHECK(j.at("family") == "subgroup-an");
        CHECK(j.at("n") == i + 1);
    }
    CHECK(json::parse(lines[2]).at("text") == "1 + q + q^2");
}

TEST_CASE("verification output") {
    auto r = run_cli("verify --identity gessel-simion --n-max 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "ok   gessel-simion n=3"));
    CHECK(contains(r.out, "cells: 3 passed: 3 failed: 0"));
    CHECK(!contains(r.out, "FAIL"));

    r = run_cli("verify --identity order-remark --n-max 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "ok   order-remark witness_n=2"));
    CHECK(contains(r.out, "  lhs: 1 - 2q^2 + q^4"));
    CHECK(contains(r.out, "  rhs: 1 - q^4"));

    r = run_cli("verify --identity olive --n-max 3 -m 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "cells: 8 passed: 8 failed: 0"));

    r = run_cli("verify --identity gordon-roselle --n-max 2 --deg-cap 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "cells: 2 passed: 2 failed: 0"));
}

TEST_CASE("a missing witness is a reported failure") {
    const auto r = run_cli("verify --identity order-remark --n-max 1");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "FAIL order-remark scanned_n_max=1"));
    CHECK(contains(r.out, "cells: 2 passed: 1 failed: 1"));
}

TEST_CASE("machine verification output") {
    const auto r = run_cli("verify --identity order-remark --n-max 2 --machine");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    for (const auto& line : lines) {
        const json j = json::parse(line);  // throws on any stray text
        CHECK(j.at("command") == "verify");
        CHECK(j.at("identity") == "order-remark");
        CHECK(j.at("passed") == true);
        CHECK(j.at("elapsed_ms").is_number_integer());
    }
    const json witness = json::parse(lines.back());
    CHECK(witness.at("params").at("witness_n") == 2);
    CHECK(witness.at("lhs") == "1 - 2q^2 + q^4");
    CHECK(witness.at("rhs") == "1 - q^4");
    CHECK(!json::parse(lines[0]).contains("lhs"));
}

TEST_CASE("usage errors exit with code 2") {
    const std::pair<std::string, std::string> cases[] = {
        {"dist --group bn --stat maj -n 0", "error: dist_group: n must be positive"},
        {"verify --identity nope --n-max 1", "error: verify: unknown identity 'nope'"},
        {"dist --group an --stat maj -n 2 --order natural",
         "error: --order applies to signed groups only"},
        {"table --family nope --n-max 1", "error: unknown family 'nope'"},
        {"verify --identity macmahon --n-max 2 --deg-cap 5",
         "error: --deg-cap applies to identity 'gordon-roselle' only"},
        {"verify --identity olive --n-max 2", "error: olive: -m is required"},
        {"verify --identity macmahon --n-max 2 -m 3",
         "error: verify: -m does not apply to identity 'macmahon'"},
        {"dist --group bn --stat fmaj -n 2 --last 1",
         "error: --last applies to group sn only"},
        {"dist --group sn --stat length -n 2",
         "error: dist_group: unsigned groups support inv and maj only"},
        {"dist --group sn --stat inv --char neg -n 2",
         "error: dist_group: unsigned groups carry the trivial and sign characters"},
    };
    for (const auto& [args, message] : cases) {
        const auto r = run_cli(args);
        CHECK_MESSAGE(r.exit_code == 2, args);
        CHECK_MESSAGE(contains(r.out, message), (args + "\n" + r.out));
    }

    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("dist --group sn --stat maj -n 4 --last 9").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output is deterministic") {
    const std::string table_args = "table --family fmaj-b --n-max 4 --machine";
    const auto t1 = run_cli(table_args);
    const auto t2 = run_cli(table_args);
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == t2.out);

    const std::string verify_args = "verify --identity un-factor --n-max 4 --machine";
    const auto v1 = run_cli(verify_args);
    const auto v2 = run_cli(verify_args);
    CHECK(v1.exit_code == 0);
    CHECK(strip_elapsed(v1.out) == strip_elapsed(v2.out));
}
