#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI under test; stderr is folded into the captured output.
RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("QCLAW_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "QCLAW_CLI must point at the built binary");
    const std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string seed_path(const std::string& name) {
    const char* dir = std::getenv("QCLAW_SEEDS");
    REQUIRE_MESSAGE(dir != nullptr, "QCLAW_SEEDS must point at the seed directory");
    return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("validate") {
    const RunResult r = run_cli("validate " + seed_path("rank1-frozen.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("d=(1)\n") != std::string::npos);
}

TEST_CASE("classical mutate golden output") {
    const RunResult r =
        run_cli("mutate " + seed_path("rank1-frozen.json") + " --seq 1 --classical");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x1' = x1^-1*x2 + x1^-1\nx2 = x2\n");
}

TEST_CASE("mutation round trip restores the initial printout") {
    const std::string file = seed_path("a2.json");
    const RunResult once = run_cli("mutate " + file + " --seq 1,2");
    const RunResult there_and_back = run_cli("mutate " + file + " --seq 1,2,2,1");
    const RunResult identity = run_cli("mutate " + file + " --seq 1,1");
    CHECK(once.exit_code == 0);
    CHECK(once.output != identity.output);
    CHECK(there_and_back.output == identity.output);
    CHECK(identity.output == "x1 = (1) * M[1,0]\nx2 = (1) * M[0,1]\n");
}

TEST_CASE("malformed input exits 2") {
    const std::string bad = "/tmp/qclaw_bad_seed.json";
    std::ofstream(bad) << R"({"m": 2, "n_ex": 1, "lambda": [[0,1],[1,0]], "b_tilde": [[0],[1]]})";
    CHECK(run_cli("validate " + bad).exit_code == 2);
    CHECK(run_cli("validate /tmp/qclaw_no_such_file.json").exit_code == 2);
    CHECK(run_cli("frobnicate " + seed_path("a2.json")).exit_code == 2);
    CHECK(run_cli("mutate " + seed_path("a2.json") + " --seq 3").exit_code == 2);
}

TEST_CASE("verify emits schema-conforming deterministic JSON") {
    const std::string args =
        "verify " + seed_path("a2.json") + " --check propkey --samples 10 --rng-seed 42";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);  // byte identical

    const nlohmann::json j = nlohmann::json::parse(a.output);
    CHECK(j.at("check_name") == "propkey");
    CHECK(j.at("status") == "pass");
    CHECK(j.at("cases_run").is_number_integer());
    CHECK(j.at("witnesses").is_array());
    CHECK(j.at("notes").is_array());
}

TEST_CASE("all verify checks run from the CLI") {
    CHECK(run_cli("verify " + seed_path("a2.json") + " --check laurent --depth 4 --samples 3")
              .exit_code == 0);
    CHECK(run_cli("verify " + seed_path("a2.json") + " --check powerids").exit_code == 0);
    CHECK(run_cli("verify " + seed_path("a2.json") + " --check specialization --depth 6")
              .exit_code == 0);
    CHECK(run_cli("verify " + seed_path("a2-principal.json") +
                  " --check graded --depth 6 --g-min -2 --g-max 2")
              .exit_code == 0);
    // graded without a grading vector in the file is an input error
    CHECK(run_cli("verify " + seed_path("a2.json") + " --check graded").exit_code == 2);
}
