#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "grpi/json_io.hpp"

using namespace grpi;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the tool with the given arguments, stderr discarded. Arguments are
// single-quoted; none of the tests need a literal quote inside one.
RunResult run_tool(const std::vector<std::string>& args) {
    std::string cmd = GRPI_TOOL_PATH;
    for (const auto& a : args) cmd += " '" + a + "'";
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "grpi_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Exports a catalog entry once per process and returns the file path.
std::string entry_file(const std::string& name) {
    const fs::path p = work_dir() / (name + ".json");
    if (!fs::exists(p)) {
        const RunResult r = run_tool({"catalog", "export", name});
        REQUIRE(r.code == 0);
        write_file(p, r.out);
    }
    return p.string();
}

void check_golden(const std::string& golden_name, const RunResult& r, int expected_code = 0) {
    CAPTURE(golden_name);
    CHECK(r.code == expected_code);
    CHECK(r.out == slurp(fs::path(GRPI_GOLDEN_DIR) / golden_name));
}

const std::vector<std::string> kEntries = {
    "ut2",        "ut2_graded", "ut3",        "m2",      "m11",
    "m2_plus_m3", "grassmann1", "grassmann2", "grassmann3", "grassmann4",
    "a0",         "qq_swap",    "qc2"};

}  // namespace

TEST_CASE("catalog list matches the golden files in both formats") {
    check_golden("catalog_list.json", run_tool({"catalog", "list", "--format", "json"}));
    check_golden("catalog_list.txt", run_tool({"catalog", "list"}));
}

TEST_CASE("every exported catalog entry passes verify") {
    for (const auto& name : kEntries) {
        CAPTURE(name);
        const RunResult r = run_tool({"verify", entry_file(name)});
        CHECK(r.code == 0);
    }
}

TEST_CASE("exported algebras survive a parse and re-serialize round trip") {
    for (const auto& name : kEntries) {
        CAPTURE(name);
        const json j = json::parse(slurp(entry_file(name)));
        const AlgebraPtr a = algebra_from_json(j);
        CHECK(algebra_to_json(*a) == j);
    }
}

TEST_CASE("classify reports are pinned for every catalog entry") {
    for (const auto& name : kEntries)
        check_golden("classify_" + name + ".json",
                     run_tool({"classify", entry_file(name), "--format", "json"}));
}

TEST_CASE("structure reports are pinned for every catalog entry") {
    for (const auto& name : kEntries)
        check_golden("structure_" + name + ".json",
                     run_tool({"structure", entry_file(name), "--format", "json"}));
}

TEST_CASE("plain codimension reports at n = 2 are pinned for every catalog entry") {
    for (const auto& name : kEntries)
        check_golden("codim2_" + name + ".json",
                     run_tool({"codim", entry_file(name), "--n", "2", "--mode", "plain",
                               "--format", "json"}));
}

TEST_CASE("graded codimension reports are pinned for the nontrivially graded entries") {
    for (const std::string name : {"ut2_graded", "m11", "qc2"})
        check_golden("codimg2_" + name + ".json",
                     run_tool({"codim", entry_file(name), "--n", "2", "--mode", "graded",
                               "--format", "json"}));
}

TEST_CASE("cocharacter reports are pinned") {
    check_golden("cochar2_ut2.json", run_tool({"cochar", entry_file("ut2"), "--n", "2", "--mode",
                                               "plain", "--format", "json"}));
    check_golden("cochar3_ut2.json", run_tool({"cochar", entry_file("ut2"), "--n", "3", "--mode",
                                               "plain", "--format", "json"}));
    for (const std::string name : {"ut2_graded", "m11"})
        check_golden("cochar2_" + name + ".json",
                     run_tool({"cochar", entry_file(name), "--n", "2", "--mode", "graded",
                               "--format", "json"}));
}

TEST_CASE("pseudo certifies the sign map on the graded upper triangular algebra") {
    const fs::path sign = work_dir() / "sign.json";
    write_file(sign, "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"-1\"]]\n");
    check_golden("pseudo_ut2g_sign.json", run_tool({"pseudo", entry_file("ut2_graded"),
                                                    sign.string(), "--format", "json"}));
}

TEST_CASE("pseudo certifies the identity map with trivial coefficients") {
    const fs::path id4 = work_dir() / "id4.json";
    write_file(id4,
               "[[\"1\",\"0\",\"0\",\"0\"],[\"0\",\"1\",\"0\",\"0\"],"
               "[\"0\",\"0\",\"1\",\"0\"],[\"0\",\"0\",\"0\",\"1\"]]\n");
    const RunResult r = run_tool({"pseudo", entry_file("m2"), id4.string(), "--format", "json"});
    check_golden("pseudo_m2_id.json", r);
    const json j = json::parse(r.out);
    CHECK(j["certified"] == true);
    for (const auto& p : j["pairs"]) {
        CHECK(p["alpha"] == "1");
        CHECK(p["beta"] == "0");
    }
}

TEST_CASE("pseudo refuses a non-multiplicative map with exit code 2") {
    const fs::path bad = work_dir() / "bad.json";
    write_file(bad, "[[\"1\",\"1\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]\n");
    const RunResult r = run_tool({"pseudo", entry_file("ut2_graded"), bad.string(), "--format",
                                  "json"});
    CHECK(r.code == 2);
    const json j = json::parse(r.out);
    CHECK(j["certified"] == false);
    CHECK(!j["reason"].get<std::string>().empty());
}

TEST_CASE("action certifies the coordinate swap and its relation") {
    const RunResult exported = run_tool({"catalog", "export", "qq_swap", "--action", "swap"});
    REQUIRE(exported.code == 0);
    const fs::path act = work_dir() / "swap_action.json";
    write_file(act, exported.out);
    check_golden("action_qq_swap.json",
                 run_tool({"action", entry_file("qq_swap"), act.string(), "--format", "json"}));
}

TEST_CASE("identity accepts the two graded laws of the upper triangular algebra") {
    const std::string file = entry_file("ut2_graded");
    CHECK(run_tool({"identity", file, "[x^{(0)}, y^{(0)}]"}).code == 0);
    CHECK(run_tool({"identity", file, "x^{(1)} y^{(1)}"}).code == 0);
}

TEST_CASE("identity rejects the plain commutator with a pinned witness") {
    check_golden("identity_ut2g_comm.json",
                 run_tool({"identity", entry_file("ut2_graded"), "[x, y]", "--format", "json"}),
                 2);
}

TEST_CASE("identity handles coefficients, parentheses and decorations") {
    const std::string file = entry_file("ut2_graded");
    // x y - y x equals [x, y], written out with explicit coefficients.
    const RunResult r = run_tool({"identity", file, "1 x y - 1 y x", "--format", "json"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["witness"]["assignment"] ==
          json::parse(slurp(fs::path(GRPI_GOLDEN_DIR) / "identity_ut2g_comm.json"))
              ["witness"]["assignment"]);
    CHECK(run_tool({"identity", file, "(x y) z - x (y z)"}).code == 0);

    const RunResult exported = run_tool({"catalog", "export", "ut2_graded", "--span", "flip_span"});
    REQUIRE(exported.code == 0);
    const fs::path span = work_dir() / "flip_span.json";
    write_file(span, exported.out);
    // s swaps e11 and e22, so x.s - x is not identically zero but kills e12.
    const RunResult dec = run_tool({"identity", file, "x.s - x", "--span", span.string()});
    CHECK(dec.code == 2);
}

TEST_CASE("identity reports malformed expressions as input errors") {
    const std::string file = entry_file("ut2_graded");
    CHECK(run_tool({"identity", file, "x +"}).code == 3);
    CHECK(run_tool({"identity", file, "[x, y"}).code == 3);
    CHECK(run_tool({"identity", file, "x y - x"}).code == 3);      // arity mismatch
    CHECK(run_tool({"identity", file, "x x"}).code == 3);          // repeated variable
    CHECK(run_tool({"identity", file, "x^{(2)} y"}).code == 3);    // unknown label
    CHECK(run_tool({"identity", file, "x.s y", "--span", ""}).code == 3);
}

TEST_CASE("equality report is pinned for the graded upper triangular algebra") {
    check_golden("equality_ut2g_2.json",
                 run_tool({"equality", entry_file("ut2_graded"), "--n", "2", "--format", "json"}));
}

TEST_CASE("codimension of the ground field is 1") {
    const fs::path q = work_dir() / "ground.json";
    write_file(q, "{\"dim\":1,\"basis\":[\"1\"],\"labels\":[\"0\"],\"degrees\":[\"0\"],"
                  "\"sc\":[[0,0,0,\"1\"]],\"flags\":{\"associative\":true,"
                  "\"group_grading\":true}}\n");
    const RunResult r = run_tool({"codim", q.string(), "--n", "4", "--mode", "plain", "--format",
                                  "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["c_n"] == 1);
}

TEST_CASE("input problems exit with code 3") {
    CHECK(run_tool({"verify", (work_dir() / "missing.json").string()}).code == 3);
    const fs::path garbage = work_dir() / "garbage.json";
    write_file(garbage, "{not json");
    CHECK(run_tool({"verify", garbage.string()}).code == 3);
    CHECK(run_tool({"codim", entry_file("ut2"), "--n", "0"}).code != 0);
}

TEST_CASE("an undersized budget exits with code 4") {
    const RunResult r = run_tool({"codim", entry_file("grassmann4"), "--n", "5", "--mode", "plain",
                                  "--budget", "1000"});
    CHECK(r.code == 4);
}

TEST_CASE("an operator that moves the radical is refused with exit code 2") {
    const fs::path rogue = work_dir() / "rogue.json";
    write_file(rogue, "{\"generators\":[{\"name\":\"rogue\",\"matrix\":"
                      "[[\"0\",\"0\",\"1\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"0\"]]}],"
                      "\"relations\":[]}\n");
    const RunResult r = run_tool({"structure", entry_file("ut2_graded"), rogue.string(),
                                  "--format", "json"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["reason"] == "operator 'rogue' does not preserve the radical");
}

TEST_CASE("thread count never changes codimension output") {
    const std::vector<std::string> base = {"codim", entry_file("m11"), "--n", "3", "--mode",
                                           "graded", "--format", "json"};
    auto with_threads = [&](const char* t) {
        auto args = base;
        args.insert(args.end(), {"--threads", t});
        return run_tool(args);
    };
    const RunResult one = with_threads("1");
    const RunResult four = with_threads("4");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("repeated runs are byte for byte identical") {
    const std::vector<std::string> cmds[] = {
        {"structure", entry_file("m2_plus_m3"), "--format", "json"},
        {"cochar", entry_file("ut2_graded"), "--n", "3", "--mode", "graded", "--format", "json"},
    };
    for (const auto& cmd : cmds) {
        const RunResult a = run_tool(cmd);
        const RunResult b = run_tool(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("exported spans and actions parse under the documented schemas") {
    const RunResult span = run_tool({"catalog", "export", "ut2_graded", "--span", "flip_span"});
    REQUIRE(span.code == 0);
    const SpanInput s = span_from_json(json::parse(span.out));
    CHECK(s.operators.size() == 2);
    CHECK(s.unit_name == "1");

    const RunResult act = run_tool({"catalog", "export", "qq_swap", "--action", "swap"});
    REQUIRE(act.code == 0);
    const ActionInput a = action_from_json(json::parse(act.out));
    CHECK(a.generators.size() == 1);
    CHECK(!a.relations.empty());
}
