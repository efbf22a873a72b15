#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Exercises the installed binary end to end. The test runner passes the
// binary location through DETGB_CLI.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const char* cli = std::getenv("DETGB_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("essential set output") {
    const RunResult res = run("schubert ess 2143");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "(1,1) rank 0; (3,3) rank 2\n");
}

TEST_CASE("space-separated one-line notation works") {
    const RunResult res = run("schubert redgb 1 2 3 --order new");
    CHECK(res.exit_code == 0);
    CHECK(res.output.empty());
}

TEST_CASE("elusive stats") {
    const RunResult res = run("schubert elusive [1,9,4,2,7,6,3,5,10,8] --stats");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("elusive: 91") != std::string::npos);
}

TEST_CASE("reduced basis text output") {
    const RunResult res = run("schubert redgb 2143 --order new");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("-x[1,3]*x[2,2]*x[3,1] + x[1,3]*x[2,1]*x[3,2] + "
                          "x[1,2]*x[2,3]*x[3,1] - x[1,2]*x[2,1]*x[3,3]") != std::string::npos);
    CHECK(res.output.find("x[1,1]") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    CHECK(run("verify gb --schubert 2143 --order new").exit_code == 0);
    CHECK(run("verify gb --schubert 2143 --order nwe").exit_code == 1);
    CHECK(run("verify reduced --elusive 2143 --order new").exit_code == 1);
    CHECK(run("verify minimal --elusive 2143 --order new").exit_code == 0);
}

TEST_CASE("error exit codes") {
    CHECK(run("schubert ess [1,1,2]").exit_code == 2);
    CHECK(run("schubert redgb 2143 --order nwe").exit_code == 3);
    CHECK(run("schubert redgb 2143").exit_code == 2);          // missing order
    CHECK(run("verify gb --schubert 2143").exit_code == 2);    // flag parse error
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("w-characteristic set output") {
    const RunResult res = run("schubert wchar 2143 --order new");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("x[1,1]: x[1,1]") != std::string::npos);
    CHECK(res.output.find("x[1,3]: -x[1,3]*x[2,2]*x[3,1]") != std::string::npos);
}

TEST_CASE("criteria verdicts from a block spec file") {
    const std::string path = "/tmp/detgb_cli_blocks.json";
    {
        std::ofstream out(path);
        out << R"({"m":4,"n":4,"blocks":[{"rect":[1,1]},{"rect":[3,3]}],"r":[1,3]})";
    }
    const RunResult res = run("ladder criteria --spec " + path + " --order nwe");
    CHECK(res.exit_code == 0);
    // All four criteria correctly decline this configuration, whose
    // generators are indeed no diagonal-order basis.
    CHECK(res.output.find("disjoint_blocks: false") != std::string::npos);
    CHECK(res.output.find("attend_or_lcm: false") != std::string::npos);
    CHECK(res.output.find("rowcolumn: false") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("ladder round trip through a spec file") {
    const std::string path = "/tmp/detgb_cli_test_spec.json";
    {
        std::ofstream out(path);
        out << R"({"a":[3],"b":[3],"r":[3],"m":6,"n":6})";
    }
    const RunResult res = run("ladder tovex --spec " + path + " -n 6");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("ess match: yes") != std::string::npos);
    std::remove(path.c_str());
}
