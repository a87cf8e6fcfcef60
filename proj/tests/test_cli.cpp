#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stderr is folded into the captured text when `with_stderr` is set
Run run(const std::string& args, bool with_stderr = false)
{
    const std::string cmd = std::string(ESDEF_BINARY) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    Run r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("invariants of the cusp")
{
    const Run r = run("invariants 'y2-x3' --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["mu"] == 2);
    CHECK(j["tau_s"] == 5);
    CHECK(j["free_vertices"] == 1);
}

TEST_CASE("every subcommand runs on the node")
{
    for (const char* sub : {"resolve", "invariants", "ideals", "newton", "audit", "graph"}) {
        CHECK_MESSAGE(run(std::string(sub) + " xy").code == 0, sub);
        CHECK_MESSAGE(run(std::string(sub) + " xy --format json").code == 0, sub);
    }
    CHECK(run("graph xy --format dot").out.rfind("digraph", 0) == 0);
}

TEST_CASE("strict audit")
{
    CHECK(run("audit 'x*y' --strict").code == 0);
    CHECK(run("audit 'y2-x3'").code == 0);
    CHECK(run("audit 'y2-x3' --strict").code == 3);
    CHECK(run("invariants 'y2-x3' --strict").code == 3);
}

TEST_CASE("input errors exit with 2 and a coded message")
{
    const Run nr = run("invariants x2", true);
    CHECK(nr.code == 2);
    CHECK(nr.out.find("error[NotReduced]") != std::string::npos);
    CHECK(run("invariants '1+x'", true).out.find("error[NotLocal]") != std::string::npos);
    CHECK(run("invariants 'x+'").code == 2);
    CHECK(run("invariants").code == 2);
    CHECK(run("resolve xy --format dot").code == 2);
    CHECK(run("resolve xy --format yaml").code == 2);
    CHECK(run("frobnicate xy").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("ideals 'y2-x3' --trunc 0").code == 2);
    CHECK(run("invariants --file /nonexistent/germ.txt").code == 2);
}

TEST_CASE("polynomial from a file")
{
    const std::string path = "cli_test_germ.txt";
    std::ofstream(path) << "x^3 + y^4\n";
    const Run r = run("invariants --file " + path + " --format json");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["mu"] == 6);
    CHECK(run("invariants xy --file " + path).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("corpus subcommand")
{
    CHECK(run("corpus --filter cusp").code == 0);
    CHECK(run("corpus --filter ''").code == 2);
    CHECK(run("corpus --filter no-such-fixture").code == 2);
    const Run fault = run("corpus --filter cusp --inject-mhat cusp:0:1");
    CHECK(fault.code == 3);
    CHECK(fault.out.find("regressions present") != std::string::npos);
    CHECK(run("corpus --filter cusp --inject-mhat cusp:zero:1").code == 2);
    CHECK(run("corpus --filter cusp --inject-mhat nothere:0:1").code == 2);
}

TEST_CASE("output is deterministic across runs")
{
    const std::string args = "invariants '(y3+x7)*(y3+x10)' --format json --seed 5";
    CHECK(run(args).out == run(args).out);
}
