#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "rainbow/graph.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary with stderr silenced; stdout is captured.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RAINBOW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    CHECK(r.code != 3);  // the guarantee-violated code must never appear here
    return r;
}

// Scratch directory shared by the whole test binary, fresh per process and
// outside the source tree.
const std::string& scratch_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/cli_scratch_XXXXXX";
        REQUIRE(mkdtemp(tmpl) != nullptr);
        return std::string(tmpl);
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
    return path;
}

std::string cycle5_edges() { return write_file("c5.edges", rainbow::write_edge_list(rainbow::generate_cycle(5))); }
std::string cycle5_col() { return write_file("c5.col", rainbow::write_dimacs(rainbow::generate_cycle(5))); }

}  // namespace

TEST_CASE("chromatic subcommand") {
    auto r = run_cli("chromatic " + cycle5_edges());
    CHECK(r.code == 0);
    CHECK(r.out == "{\"chi\":3,\"witness\":[1,2,1,2,3]}\n");

    r = run_cli("chromatic " + cycle5_col() + " --circular");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"chi_c\":{\"d\":2,\"n\":5},\"witness\":[1,3,5,2,4]}\n");

    auto k4 = write_file("k4.col", rainbow::write_dimacs(rainbow::generate_complete(4)));
    r = run_cli("chromatic " + k4);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["chi"] == 4);

    // a DIMACS body under an edge-list extension still parses with --format
    auto odd = write_file("c5col.edges", rainbow::write_dimacs(rainbow::generate_cycle(5)));
    r = run_cli("chromatic " + odd + " --format col");
    CHECK(r.code == 0);

    r = run_cli("chromatic " + write_file("empty.edges", ""));
    CHECK(r.code == 2);
    r = run_cli("chromatic " + scratch_dir() + "/no_such_file.edges");
    CHECK(r.code == 2);
}

TEST_CASE("outputs are byte-stable across runs") {
    auto path = cycle5_edges();
    for (const std::string& args :
         {"chromatic " + path, "chromatic " + path + " --circular", "color " + path + " --theorem 1",
          "color " + path + " --theorem 2"}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("construction subcommand runs and verifies") {
    auto r = run_cli("color " + cycle5_edges() + " --theorem 1");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["theorem"] == 1);
    CHECK(j["k"] == 3);
    CHECK(j["coloring"] == json::array({1, 2, 3, 1, 2}));
    for (const auto& v : j["report"]["lies_on"]) CHECK(v == true);
    CHECK(j["trace"]["base_circular"]["values"] == json::array({1, 3, 5, 2, 4}));

    auto w5 = write_file("w5.edges", rainbow::write_edge_list(rainbow::generate_wheel(5)));
    r = run_cli("color " + w5 + " --theorem 3");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    for (const auto& v : j["report"]["begins"]) CHECK(v == true);

    r = run_cli("color " + w5 + " --theorem 3 --cycle 0,1,2,5");
    CHECK(r.code == 0);

    r = run_cli("color " + cycle5_edges() + " --theorem 2");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["trace"]["bound"] == json({{"num", 3}, {"den", 5}}));
}

TEST_CASE("construction subcommand rejects unmet hypotheses") {
    CHECK(run_cli("color " + cycle5_edges() + " --theorem 3").code == 2);  // no 3-cycle
    auto k4 = write_file("k4.edges", rainbow::write_edge_list(rainbow::generate_complete(4)));
    CHECK(run_cli("color " + k4 + " --theorem 2").code == 2);  // chi_c = chi
    CHECK(run_cli("color " + k4 + " --theorem 5").code == 2);  // out of range
    CHECK(run_cli("color " + k4).code == 2);                   // --theorem required
    CHECK(run_cli("color " + k4 + " --theorem 4").code == 2);  // orientation missing
}

TEST_CASE("directed construction via an orientation file") {
    auto graph = cycle5_edges();
    auto arcs = write_file("c5.arcs", "4 0\n0 1\n2 1\n2 3\n4 3\n");
    auto r = run_cli("color " + graph + " --theorem 4 --orientation " + arcs);
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["theorem"] == 4);
    CHECK(j["trace"]["case"] == "layered");
    CHECK(j["witnesses"]["directed_path"] == json::array({4, 0, 1}));
    CHECK(j["coloring"] == json::array({2, 3, 1, 3, 1}));
}

TEST_CASE("verify subcommand decides the requested property") {
    auto graph = cycle5_edges();
    auto good = write_file("good.colors", "1,2,3,1,2\n");
    auto r = run_cli("verify " + graph + " " + good);
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    for (const auto& v : j["lies_on"]) CHECK(v == true);
    CHECK(j["witnesses"].size() == 5);

    // also fine in begins mode, and as a JSON array coloring
    CHECK(run_cli("verify " + graph + " " + good + " --mode begins").code == 0);
    auto arr = write_file("good.json", "[1, 2, 3, 1, 2]");
    CHECK(run_cli("verify " + graph + " " + arr).code == 0);

    // every proper 3-coloring of the 5-cycle has the property, oracle decides
    auto alt = write_file("alt.colors", "1 2 1 2 3  # same as the search's first hit\n");
    CHECK(run_cli("verify " + graph + " " + alt).code == 0);

    auto p3 = write_file("p3.edges", rainbow::write_edge_list(rainbow::generate_path(3)));
    auto rainbow3 = write_file("p3.colors", "1 2 3\n");
    CHECK(run_cli("verify " + p3 + " " + rainbow3 + " --mode lies_on").code == 0);
    CHECK(run_cli("verify " + p3 + " " + rainbow3 + " --mode begins").code == 1);

    auto improper = write_file("bad.colors", "1 2 1 2 1\n");
    CHECK(run_cli("verify " + graph + " " + improper).code == 2);
    auto short_list = write_file("short.colors", "1 2 3\n");
    CHECK(run_cli("verify " + graph + " " + short_list).code == 2);
    CHECK(run_cli("verify " + graph + " " + good + " --mode nonsense").code == 2);
}

TEST_CASE("verify round-trips a construction's coloring") {
    auto graph = cycle5_edges();
    auto r = run_cli("color " + graph + " --theorem 1");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    auto path = write_file("roundtrip.json", j["coloring"].dump());
    CHECK(run_cli("verify " + graph + " " + path + " --mode lies_on").code == 0);
}

TEST_CASE("directed verification modes") {
    auto p3 = write_file("p3d.edges", rainbow::write_edge_list(rainbow::generate_path(3)));
    auto colors = write_file("p3d.colors", "1 2 3\n");
    auto fwd = write_file("fwd.arcs", "0 1\n1 2\n");
    auto r = run_cli("verify " + p3 + " " + colors + " --mode directed --orientation " + fwd);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json({{"found", true}, {"witness", {0, 1, 2}}}));

    auto inward = write_file("in.arcs", "0 1\n2 1\n");
    r = run_cli("verify " + p3 + " " + colors + " --mode directed --orientation " + inward);
    CHECK(r.code == 1);
    CHECK(json::parse(r.out) == json({{"found", false}, {"witness", nullptr}}));

    CHECK(run_cli("verify " + p3 + " " + colors + " --mode directed").code == 2);
}

TEST_CASE("sweep subcommand with a config file") {
    auto cfg = write_file("sweep3.json", "{\"max_vertices\": 3}");
    auto out_path = scratch_dir() + "/records.jsonl";
    auto r = run_cli("sweep " + cfg + " --out " + out_path);
    CHECK(r.code == 0);
    json summary = json::parse(r.out);
    CHECK(summary["pass"] == 15);
    CHECK(summary["fail"] == 0);
    CHECK(summary["skipped"] == 16);
    CHECK(summary["open"] == 0);
    CHECK(summary["begins_everywhere_colorings"] == 0);
    CHECK(summary["lies_on_everywhere_colorings"] == 84);
    CHECK(summary["c5_begins_everywhere_colorings"] == 30);

    std::ifstream records(out_path);
    REQUIRE(records.good());
    std::string line;
    int lines = 0;
    while (std::getline(records, line)) {
        ++lines;
        json rec = json::parse(line);
        rainbow::Graph replay = rainbow::parse_edge_list_string(rec["graph"].get<std::string>());
        CHECK(rainbow::write_edge_list(replay) == rec["graph"].get<std::string>());
    }
    CHECK(lines == 31);

    // identical bytes on a rerun, summary and record file alike
    auto out2 = scratch_dir() + "/records2.jsonl";
    auto r2 = run_cli("sweep " + cfg + " --out " + out2);
    CHECK(r2.out == r.out);
    std::ifstream a(out_path), b(out2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().size() > 0);
}

TEST_CASE("sweep budget and config error handling") {
    auto cfg = write_file("budget0.json",
                          "{\"max_vertices\": 3, \"checks\": [\"theorem3\"], \"budget_ms\": 0}");
    auto r = run_cli("sweep " + cfg);
    CHECK(r.code == 0);  // skipped records are not failures
    json summary = json::parse(r.out);
    CHECK(summary["fail"] == 0);
    CHECK(summary["pass"] == 0);
    CHECK(summary["skipped"] == 6);

    CHECK(run_cli("sweep " + write_file("badkey.json", "{\"max_verts\": 3}")).code == 2);
    CHECK(run_cli("sweep " + write_file("badjson.json", "{")).code == 2);
    CHECK(run_cli("sweep " + write_file("badcheck.json", "{\"checks\": [\"chi\"]}")).code == 2);
    CHECK(run_cli("sweep " + write_file("nocorpus.json", "{\"max_vertices\": 0}")).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").code == 2);             // a subcommand is required
    CHECK(run_cli("paint x").code == 2);      // unknown subcommand
    CHECK(run_cli("chromatic").code == 2);    // missing input
    CHECK(run_cli("--help").code == 0);
}
