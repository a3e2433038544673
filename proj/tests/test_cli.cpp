// Black-box tests of the command line binary. The harness passes the binary
// path through ELIMKIT_BIN.
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

std::string binary() {
    const char* bin = std::getenv("ELIMKIT_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ELIMKIT_BIN must point at the CLI binary");
    return bin;
}

CliResult run_cli(const std::string& args, bool merge_stderr = true) {
    std::string cmd = binary() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("res prints the resultant and reruns byte-identically") {
    std::string args = "res --nvars 2 " + q("x0-x1") + " " + q("x0+x1");
    CliResult first = run_cli(args, false);
    CHECK(first.code == 0);
    auto j = nlohmann::json::parse(first.out);
    CHECK(j["schema"] == "elimkit/1");
    CHECK(j["op"] == "res");
    CHECK(j["resultant"] == "2");
    CliResult second = run_cli(args, false);
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
}

TEST_CASE("disc on the round quadric") {
    CliResult r = run_cli("disc --nvars 3 " + q("x0^2+x1^2+x2^2"), false);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["discriminant"] == "4");
    CHECK(j["smooth"] == true);
    CHECK(j["degree"] == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("res --nvars 2").code == 2);           // missing forms
    CHECK(run_cli("res --bogus-flag").code == 2);
    CHECK(run_cli("verify no-such-suite").code == 2);
    CHECK(run_cli("res --nvars 2 " + q("x0") + " " + q("x1") + " " + q("x0+x1")).code == 2);
}

TEST_CASE("parse errors cite the byte offset") {
    CliResult r = run_cli("disc --nvars 1 " + q("x0 + @"));
    CHECK(r.code == 2);
    CHECK(r.out.find("byte 5") != std::string::npos);
    CHECK(r.out.find("expected") != std::string::npos);
}

TEST_CASE("reduced discriminant of a curve truncation") {
    CliResult r = run_cli("rdisc --nvars 2 --order 2 " + q("x0^2*x1^2 + x0*x1^3 + x1^4"), false);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["valuation"] == 2);
    bool ok = j["value"] == "3" || j["value"] == "-3";
    CHECK(ok);

    // a vanishing deepest slice cannot be normalized: computation error
    CliResult bad = run_cli("rdisc --nvars 2 --order 2 " + q("x0^2*x1^2"));
    CHECK(bad.code == 1);
}

TEST_CASE("reduced resultant is seed independent in value") {
    std::string base = "rres --nvars 2 --degrees 2,2 --orders 1,1 ";
    std::string forms = q("x0*x1 + 3*x1^2") + " " + q("x0*x1 - 2*x1^2");
    CliResult a = run_cli(base + "--seed 5 " + forms, false);
    CliResult b = run_cli(base + "--seed 5 " + forms, false);
    CliResult c = run_cli(base + "--seed 9 " + forms, false);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // same argv, same bytes
    auto ja = nlohmann::json::parse(a.out);
    auto jc = nlohmann::json::parse(c.out);
    CHECK(ja["value"] == jc["value"]);
    CHECK(ja["seed"] == 5);
    CHECK(jc["seed"] == 9);
}

TEST_CASE("enum emits the degree table") {
    CliResult r = run_cli("enum --max-degree 4", false);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["table"]["node_couple_degree"]["3"] == 9);
    CHECK(j["table"]["node_couple_degree"]["4"] == 80);
    CHECK(j["table"]["bitangent_hyperplanes_n2"]["4"] == 28);
    CHECK(j["table"]["dual_degree_n3"]["3"] == 12);
    CliResult again = run_cli("enum --max-degree 4", false);
    CHECK(again.out == r.out);

    CliResult md = run_cli("enum --max-degree 4 --markdown", false);
    CHECK(md.code == 0);
    CHECK(md.out.find("node_couple_degree | 3 | 3 | 9") != std::string::npos);
}

TEST_CASE("salmon-check at a non-flex point of a smooth cubic") {
    CliResult r =
        run_cli("salmon-check --nvars 3 --point 1,1,1 " + q("x0^3+x1^3-2*x2^3"), false);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["checked"] == true);
    CHECK(j["valuation"] == 2);
    CHECK(j["identity_holds"] == true);
}

TEST_CASE("project drops one variable") {
    CliResult r = run_cli("project --nvars 3 --point 1,0,0 " + q("x0*x2 - x1^2") + " " + q("x1"),
                          false);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["image_degree"] == 1);
}

TEST_CASE("verify subcommand runs a fast suite") {
    CliResult r = run_cli("verify enumerative-consistency", false);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["suites"][0]["suite"] == "enumerative-consistency");
}
