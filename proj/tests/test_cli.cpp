#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// LPA_BIN is injected by the build: the path of the lpa executable.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LPA_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("lpa_cli_" + name);
    std::ofstream out(path);
    out << content;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

const std::string a2 = write_temp("a2.g", "graph A2 { vertices v1 v2; edges a1: v1 -> v2; }\n");
const std::string a3 =
    write_temp("a3.g", "graph A3 { vertices v1 v2 v3; edges a1: v1 -> v2; a2: v2 -> v3; }\n");
const std::string a4 = write_temp(
    "a4.g",
    "graph A4 { vertices v1 v2 v3 v4; edges a1: v1 -> v2; a2: v2 -> v3; a3: v3 -> v4; }\n");

} // namespace

TEST_CASE("normalize prints normal forms with degrees") {
    auto r = run("--graph " + a2 + " normalize \"a1~ a1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "v2  [deg (2,0,2)]\n");

    auto r4 = run("--graph " + a2 + " normalize \"a1 a1~\"");
    CHECK(r4.exit_code == 0);
    CHECK(r4.output == "v1  [deg (1,0,1)]\n");

    auto z = run("--graph " + a2 + " normalize \"v2 a1\"");
    CHECK(z.exit_code == 0);
    CHECK(z.output == "0\n");
}

TEST_CASE("inverse finds and certifies") {
    auto r = run("--graph " + a4 + " --ring Q inverse \"a1 a2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("a2~ a1~") != std::string::npos);
    CHECK(r.output.find("x y x == x : true") != std::string::npos);
}

TEST_CASE("inverse over Z/4 exits 1 with the divisibility proof") {
    auto r = run("--graph " + a2 + " --ring Zn:4 inverse \"2 v1\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("no graded inverse exists") != std::string::npos);
    CHECK(r.output.find("divisible") != std::string::npos);
}

TEST_CASE("check graded-regular: pass and fail exit codes") {
    CHECK(run("--graph " + a3 + " --ring Q check graded-regular --samples 50 --seed 7").exit_code ==
          0);
    auto fail = run("--graph " + a2 + " --ring Zn:4 check graded-regular --samples 20");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("2 v1") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("--graph " + a2 + " check no-such-checker").exit_code == 2);
    CHECK(run("--graph missing.g normalize v1").exit_code == 2);
    CHECK(run("normalize v1").exit_code == 2); // no graph loaded
    CHECK(run("--graph " + a2 + " normalize \"b9\"").exit_code == 2);
    CHECK(run("--graph " + a2 + " --ring Fp:6 graph").exit_code == 2);
}

TEST_CASE("same seed gives byte-identical JSON reports") {
    std::string j1 = write_temp("rep1.json", ""), j2 = write_temp("rep2.json", "");
    CHECK(run("--graph " + a3 + " check graded-regular --samples 40 --seed 11 --json " + j1)
              .exit_code == 0);
    CHECK(run("--graph " + a3 + " check graded-regular --samples 40 --seed 11 --json " + j2)
              .exit_code == 0);
    std::string s1 = slurp(j1), s2 = slurp(j2);
    REQUIRE(!s1.empty());
    CHECK(s1 == s2);
    // The schema carries the contract fields.
    for (const char* key : {"\"check\"", "\"verdict\"", "\"witnesses\"", "\"seed\"", "\"params\"",
                            "\"elapsed_ms\"", "\"certificates\""})
        CHECK(s1.find(key) != std::string::npos);
}

TEST_CASE("pass verdicts embed re-verified identities") {
    std::string j = write_temp("cert.json", "");
    run("--graph " + a3 + " check nearly-eps-strong --samples 30 --json " + j);
    std::string s = slurp(j);
    CHECK(s.find("eps(x) x = x = x eps'(x)") != std::string::npos);
}

TEST_CASE("report runs the applicable checkers and writes combined JSON") {
    std::string all = write_temp("all.json", "");
    auto r = run("--graph " + a2 + " --ring Q report " + all + " --samples 30");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    std::string s = slurp(all);
    for (const char* check : {"graded-regular", "nearly-eps-strong", "pseudo-unitary",
                              "semisimple-cert", "strongly-graded", "ds-audit", "brandt-axioms"})
        CHECK(s.find(check) != std::string::npos);
}

TEST_CASE("graph and weights subcommands") {
    auto g = run("--graph " + a3 + " graph");
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("sinks:   v3") != std::string::npos);
    auto w = run("--graph " + a3 + " weights");
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("\"a1\"") != std::string::npos);
}

TEST_CASE("iso-matrix on a line graph") {
    CHECK(run("--graph " + a4 + " check iso-matrix --samples 50").exit_code == 0);
}

TEST_CASE("explicit X vertex lists") {
    // A Cohn context with relation 4) imposed at v1 only.
    CHECK(run("--graph " + a3 + " --X v1 check pseudo-unitary").exit_code == 0);
    CHECK(run("--graph " + a3 + " --X v1,v2 check nearly-eps-strong --samples 20").exit_code == 0);
    CHECK(run("--graph " + a3 + " --X v9 graph").exit_code == 2);   // unknown vertex
    CHECK(run("--graph " + a3 + " --X v3 graph").exit_code == 2);   // sink is not regular
}

TEST_CASE("assignment from a JSON file") {
    auto af = write_temp("assign.json", R"({"v1": 1, "v2": 2, "v3": 3})");
    auto r = run("--graph " + a3 + " --assignment " + af + " weights");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"a1\"") != std::string::npos);
    // An invalid file (merging ranges of edges with equal sources) fails.
    auto bad = write_temp("assign_bad.json", R"({"v1": 1, "v2": 1, "v3": 3})");
    CHECK(run("--graph " + a3 + " --assignment " + bad + " weights").exit_code == 2);
}

TEST_CASE("cohn-iso with X=none") {
    CHECK(run("--graph " + a3 + " --X none check cohn-iso --samples 30").exit_code == 0);
}
