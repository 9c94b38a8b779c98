#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "mdl/atlas.hpp"
#include "mdl/families.hpp"
#include "mdl/graph.hpp"
#include "mdl/ilp.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed-style binary through the shell, capturing stdout.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(MDL_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string value_of(const std::string& out, const std::string& key) {
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
    return "";
}

std::string temp_path(const std::string& name) {
    return std::string(MDL_TEST_TMPDIR) + "/" + name;
}

}  // namespace

TEST_CASE("gen emits a canonical labeled edge list") {
    RunResult r = run_cli("gen J:4,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("c J:4,2\np 6 12\n", 0) == 0);
    CHECK(r.out.find("c label 1 {1,2}") != std::string::npos);
    std::istringstream in(r.out);
    mdl::Graph parsed = mdl::read_edge_list(in);
    CHECK(parsed.n_vertices() == 6);
    CHECK(parsed.edges() == mdl::johnson(4, 2).edges());
}

TEST_CASE("gen rejects parameters outside the family range") {
    RunResult r = run_cli("gen K:3,2", /*merge_stderr=*/true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("gen round-trips an edge-list file") {
    std::string path = temp_path("gen_roundtrip.el");
    {
        RunResult first = run_cli("gen K:5,2 --output " + path);
        CHECK(first.exit_code == 0);
    }
    RunResult again = run_cli("gen " + path);
    CHECK(again.exit_code == 0);
    std::istringstream in(again.out);
    CHECK(mdl::read_edge_list(in).edges() == mdl::kneser(5, 2).edges());
}

TEST_CASE("invariant reports value, status and certificate") {
    RunResult beta = run_cli("invariant beta J:7,2");
    CHECK(beta.exit_code == 0);
    CHECK(value_of(beta.out, "value") == "5");
    CHECK(value_of(beta.out, "status") == "Optimal");
    CHECK(value_of(beta.out, "vertices") == "21");

    RunResult psi = run_cli("invariant psi K:5,2");
    CHECK(psi.exit_code == 0);
    CHECK(value_of(psi.out, "value") == "3");
    CHECK(value_of(psi.out, "certificate") == "{1,2} {1,3} {1,4}");

    RunResult betas = run_cli("invariant beta_s J:5,2");
    CHECK(betas.exit_code == 0);
    CHECK(value_of(betas.out, "value") == "6");
}

TEST_CASE("invariant signals budget-limited results via exit code 2") {
    RunResult r = run_cli("invariant beta_s K:8,3 --budget 1");
    CHECK(r.exit_code == 2);
    CHECK(value_of(r.out, "status") == "UpperBoundOnly");

    // MDL_BUDGET drives the same path when no flag is given.
    RunResult env2 = [] {
        std::string cmd = "MDL_BUDGET=1 " + std::string(MDL_CLI_PATH) +
                          " invariant beta_s K:8,3 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        RunResult rr;
        char buf[4096];
        while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) rr.out.append(buf, got);
        int status = pclose(pipe);
        rr.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return rr;
    }();
    CHECK(env2.exit_code == 2);
    CHECK(value_of(env2.out, "status") == "UpperBoundOnly");
}

TEST_CASE("invariant rejects disconnected input") {
    RunResult r = run_cli("invariant beta K:4,2", /*merge_stderr=*/true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("connected") != std::string::npos);
}

TEST_CASE("verify passes known identities and fails unknown ids") {
    RunResult r = run_cli("verify prop-betas-johnson --n 4..7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS prop-betas-johnson J(5,2): beta_s = 6") != std::string::npos);
    CHECK(r.out.find("failed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    RunResult eq17 = run_cli("verify eq17-doubly --n 4..8");
    CHECK(eq17.exit_code == 0);

    RunResult unknown = run_cli("verify no-such-id", /*merge_stderr=*/true);
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("verify prints SKIP for instances beyond the guard") {
    RunResult r = run_cli("verify lem-mmd-johnson --n 10..11 --k 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS lem-mmd-johnson J(10,5)") != std::string::npos);
    CHECK(r.out.find("SKIP lem-mmd-johnson J(11,5)") != std::string::npos);
}

TEST_CASE("export-lp writes a parseable model with the advertised counts") {
    std::string path = temp_path("k73_strong.lp");
    RunResult r = run_cli("export-lp K:7,3 --mode strong --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("35 variables, 595 constraints") != std::string::npos);

    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream text;
    text << in.rdbuf();
    mdl::IlpModel model = mdl::read_lp(text.str());
    CHECK(model.binaries.size() == 35);
    CHECK(model.constraints.size() == 595);

    std::string dpath = temp_path("j42_doubly.lp");
    RunResult d = run_cli("export-lp J:4,2 --mode doubly --output " + dpath);
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("21 variables") != std::string::npos);
}

TEST_CASE("export-lp rejects disconnected input") {
    RunResult r = run_cli("export-lp K:4,2 --mode strong", /*merge_stderr=*/true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("atlas writes a sorted csv that the reader reproduces") {
    std::string path = temp_path("atlas.csv");
    RunResult r = run_cli("atlas --family K --n 7..8 --k 3 --invariants beta_s,diam --output " +
                          path);
    CHECK(r.exit_code == 0);

    std::ifstream in(path);
    REQUIRE(in);
    auto rows = mdl::read_atlas_csv(in);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 7);
    CHECK(rows[0].invariant == mdl::AtlasInvariant::BetaS);
    CHECK(rows[0].value == 30);
    CHECK(rows[0].status == mdl::AtlasStatus::Optimal);
    CHECK(rows[1].invariant == mdl::AtlasInvariant::Diam);
    CHECK(rows[1].value == 3);
    CHECK(rows[1].status == mdl::AtlasStatus::Formula);
    CHECK(rows[2].value == 54);

    std::ostringstream rewritten;
    mdl::write_atlas_csv(rewritten, rows);
    std::ifstream raw(path);
    std::ostringstream original;
    original << raw.rdbuf();
    CHECK(rewritten.str() == original.str());
}

TEST_CASE("atlas with an empty range emits only the header") {
    RunResult r = run_cli("atlas --family J --n 5..4 --k 2 --invariants beta");
    CHECK(r.exit_code == 0);
    CHECK(r.out == std::string(mdl::kAtlasCsvHeader) + "\n");
}

TEST_CASE("atlas records budget-limited rows and exits 2") {
    RunResult r = run_cli("atlas --family J --n 8 --k 2 --invariants beta --budget 1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("UpperBoundOnly") != std::string::npos);
}

TEST_CASE("export-lp derives a default output name from the source") {
    std::string cmd = "cd " + std::string(MDL_TEST_TMPDIR) + " && " + MDL_CLI_PATH +
                      " export-lp J:4,2 --mode strong 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(out.find("wrote J_4_2_strong.lp") != std::string::npos);
    std::ifstream in(temp_path("J_4_2_strong.lp"), std::ios::binary);
    REQUIRE(in);
    std::ostringstream text;
    text << in.rdbuf();
    CHECK(mdl::read_lp(text.str()).binaries.size() == 6);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("invariant sigma J:5,2", true).exit_code == 1);
    CHECK(run_cli("gen J:4,2 --format csv", true).exit_code == 1);
    CHECK(run_cli("gen /no/such/file.el", true).exit_code == 1);
    CHECK(run_cli("gen Z:4,2", true).exit_code == 1);
}
