#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the CLI binary with the given arguments, capturing stdout.
RunResult run(const std::string& args) {
    std::string out_path = "cli_test_stdout.tmp";
    std::string cmd = std::string(SEMIEQ_CLI_PATH) + " " + args + " > " + out_path + " 2> cli_test_stderr.tmp";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

// Remove the wall-clock section so reports from equal runs compare equal.
nlohmann::json strip_timings(nlohmann::json j) {
    j.erase("timings");
    return j;
}

} // namespace

TEST_CASE("validate: accepts a valid file and rejects bad ones") {
    write_file("cli_ok.json", R"({"order": 2, "table": [[0,1],[1,0]], "sigma": [0,1]})");
    auto ok = run("validate cli_ok.json");
    CHECK(ok.exit_code == 0);
    auto j = parse(ok.out);
    CHECK(j["valid"] == true);
    CHECK(j["semigroup"]["order"] == 2);

    // non-associative table: exit 2 with witnesses
    write_file("cli_bad.json", R"({"order": 2, "table": [[1,0],[0,0]]})");
    auto bad = run("validate cli_bad.json");
    CHECK(bad.exit_code == 2);
    auto jb = parse(bad.out);
    CHECK(jb["valid"] == false);
    CHECK(!jb["witnesses"].empty());

    // sigma that is not an automorphism: exit 2
    write_file("cli_badsigma.json", R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]], "sigma": [1,0,2]})");
    CHECK(run("validate cli_badsigma.json").exit_code == 2);

    // malformed JSON: exit 3
    write_file("cli_trunc.json", R"({"order": 2, "table": [[0,1],)");
    CHECK(run("validate cli_trunc.json").exit_code == 3);

    // missing file: exit 3
    CHECK(run("validate cli_no_such_file.json").exit_code == 3);
}

TEST_CASE("solve: catalog run with classification") {
    auto r = run("solve --catalog z2 --field gf:3");
    CHECK(r.exit_code == 0); // no certificates on a group table
    auto j = parse(r.out);
    CHECK(j["schema"] == "semieq-report/1");
    CHECK(j["solution_count"] == 33);
    CHECK(j["certificates"].empty());
    CHECK(j["structure_failures"] == 0);
    CHECK(j["solutions"].size() == 33);
    // histogram counts sum to the total
    size_t sum = 0;
    for (const auto& [k, v] : j["histogram"].items()) sum += v.get<size_t>();
    CHECK(sum == 33);

    // malformed field spec: exit 3
    CHECK(run("solve --catalog z2 --field gf:bogus").exit_code == 3);
    // unknown catalog name: exit 2
    CHECK(run("solve --catalog nope --field gf:3").exit_code == 2);
    // out-of-range sigma index: exit 2
    CHECK(run("solve --catalog z2 --field gf:3 --sigma-index 5").exit_code == 2);
    // budget too small: exit 4
    CHECK(run("solve --catalog z4 --field gf:5 --budget 10").exit_code == 4);
}

TEST_CASE("solve: file input uses the listed sigma") {
    write_file("cli_z3.json", R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]], "sigma": [0,2,1]})");
    auto r = run("solve cli_z3.json --field gf:3");
    CHECK(r.exit_code == 0);
    auto j = parse(r.out);
    CHECK(j["sigma"] == nlohmann::json::array({0, 2, 1}));
    CHECK(j["solution_count"] == 39);
}

TEST_CASE("catalog export round-trips through validate") {
    auto r = run("catalog klein4");
    CHECK(r.exit_code == 0);
    write_file("cli_klein4.json", r.out);
    auto v = run("validate cli_klein4.json");
    CHECK(v.exit_code == 0);
    auto j = parse(v.out);
    CHECK(j["sigmas"].size() == 4); // all involutive automorphisms exported
}

TEST_CASE("families: verified sampling and seeded determinism") {
    auto a = run("--seed 99 families --field gf:5 --samples 3 --verify");
    auto b = run("--seed 99 families --field gf:5 --samples 3 --verify");
    CHECK(a.exit_code == 0);
    auto ja = parse(a.out);
    CHECK(ja["construction_failures"] == 0);
    // byte-identical after stripping the timing section
    CHECK(strip_timings(ja).dump() == strip_timings(parse(b.out)).dump());
    // a different seed draws different samples but still verifies
    auto c = run("--seed 100 families --field gf:5 --samples 3 --verify");
    CHECK(c.exit_code == 0);
}

TEST_CASE("lemmas: structural sweep on one catalog table") {
    auto r = run("lemmas --catalog null3 --field gf:3");
    CHECK(r.exit_code == 0);
    auto j = parse(r.out);
    CHECK(j["certificates"] == 0);
    CHECK(j["sweeps"].size() == 2); // both involutions of null3
    for (const auto& sweep : j["sweeps"]) {
        CHECK(sweep["solutions"] == 105);
        CHECK(sweep["structure_failures"] == 0);
    }
}

TEST_CASE("solve reports are deterministic") {
    auto a = run("solve --catalog z3 --field gf:3 --sigma-index 1");
    auto b = run("solve --catalog z3 --field gf:3 --sigma-index 1");
    CHECK(strip_timings(parse(a.out)).dump() == strip_timings(parse(b.out)).dump());
}
