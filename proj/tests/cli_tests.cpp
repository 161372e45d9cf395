// End-to-end checks of the command line binary: exit codes, the
// stdout/stderr split (data vs logs), file outputs that parse back
// through the library loaders, and byte determinism across reruns.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "sizeramsey/graph.hpp"
#include "sizeramsey/io.hpp"
#include "sizeramsey/random_model.hpp"

using namespace ramsey;

namespace {

namespace fs = std::filesystem;

const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("sizeramsey-cli-" + std::to_string(static_cast<long>(::getpid())));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Counter prefix keeps every generated file distinct across test cases.
std::string scratch_path(const std::string& name) {
    static int counter = 0;
    return (scratch_dir() / (std::to_string(counter++) + "-" + name)).string();
}

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::string& args) {
    const std::string out_file = scratch_path("stdout.txt");
    const std::string err_file = scratch_path("stderr.txt");
    const std::string cmd = std::string(SIZERAMSEY_CLI_PATH) + " " + args + " >" + out_file +
                            " 2>" + err_file;
    const int raw = std::system(cmd.c_str());
    CliRun run;
    run.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    run.out = read_text_file(out_file);
    run.err = read_text_file(err_file);
    return run;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

Json read_json(const std::string& path) { return Json::parse(read_text_file(path)); }

// Certificate files store only the vertex sequence; the edge indices are
// recovered from the host graph's sorted arc lists.
Path path_from_vertices(const Graph& g, const std::vector<Vertex>& vs) {
    Path p;
    p.vertices = vs;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        bool found = false;
        for (const Graph::Arc& arc : g.neighbours(vs[i])) {
            if (arc.to == vs[i + 1]) {
                p.edge_indices.push_back(arc.edge);
                found = true;
                break;
            }
        }
        REQUIRE(found);
    }
    return p;
}

} // namespace

TEST_CASE("help goes to stdout and exits cleanly") {
    const CliRun run = run_cli("--help");
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "sample"));
    CHECK(contains(run.out, "ramsey-trial"));
    CHECK(contains(run.out, "check-expansion"));
    CHECK(contains(run.out, "bounds"));
    CHECK(contains(run.out, "oracle"));
}

TEST_CASE("usage mistakes exit 1 with a message on stderr") {
    SUBCASE("no subcommand") {
        const CliRun run = run_cli("");
        CHECK(run.exit_code == 1);
        CHECK(run.err != "");
    }
    SUBCASE("unknown subcommand") {
        const CliRun run = run_cli("frobnicate");
        CHECK(run.exit_code == 1);
        CHECK(run.err != "");
    }
    SUBCASE("unknown flag") {
        const CliRun run = run_cli("sample --n 16 --r 2 --seed 1 --bogus 3");
        CHECK(run.exit_code == 1);
        CHECK(run.err != "");
    }
    SUBCASE("missing required option") {
        const CliRun run = run_cli("sample --n 16 --seed 1");
        CHECK(run.exit_code == 1);
        CHECK(run.err != "");
    }
}

TEST_CASE("sample writes a graph and a report next to the given prefix") {
    const std::string prefix = scratch_path("host");
    const CliRun run = run_cli("sample --n 16 --r 2 --seed 5 --out " + prefix);
    CHECK(run.exit_code == 0);
    CHECK(run.out == "");
    CHECK(contains(run.err, "sample: 224 vertices"));

    const Graph g = graph_from_json(read_json(prefix + ".graph.json"));
    CHECK(g.vertex_count() == 224);

    const RamseyParams params = RamseyParams::make(16, 2);
    CHECK(static_cast<double>(g.edge_count()) > params.edge_lower);
    CHECK(static_cast<double>(g.edge_count()) < params.edge_upper);

    const Json report = read_json(prefix + ".report.json");
    CHECK(report.at("edge_count").get<std::size_t>() == g.edge_count());
    CHECK(report.at("satisfies_ii").get<bool>() == true);
    CHECK(report.at("out_of_regime").get<bool>() == false);
    CHECK(report.at("attempts").get<std::uint64_t>() >= 1);
    CHECK(report.at("expansion").at("method").get<std::string>() == "skipped");
}

TEST_CASE("sample reruns byte-identically under the same seed") {
    const std::string first = scratch_path("host-a");
    const std::string second = scratch_path("host-b");
    const CliRun run_a = run_cli("sample --n 16 --r 2 --seed 31 --out " + first);
    const CliRun run_b = run_cli("sample --n 16 --r 2 --seed 31 --out " + second);
    CHECK(run_a.exit_code == 0);
    CHECK(run_b.exit_code == 0);
    CHECK(read_text_file(first + ".graph.json") == read_text_file(second + ".graph.json"));
    CHECK(read_text_file(first + ".report.json") == read_text_file(second + ".report.json"));

    const std::string other = scratch_path("host-c");
    const CliRun run_c = run_cli("sample --n 16 --r 2 --seed 32 --out " + other);
    CHECK(run_c.exit_code == 0);
    CHECK(read_text_file(first + ".graph.json") != read_text_file(other + ".graph.json"));
}

TEST_CASE("explicit probability exits 2 but still writes its output") {
    const std::string prefix = scratch_path("forced");
    const CliRun run =
        run_cli("sample --n 16 --r 2 --p 0.5 --seed 3 --retry-limit 3 --out " + prefix);
    CHECK(run.exit_code == 2);
    CHECK(contains(run.err, "out of regime"));

    // p = 0.5 lands far below the edge window, so the report records the
    // failed property instead of aborting the run.
    const Graph g = graph_from_json(read_json(prefix + ".graph.json"));
    CHECK(g.vertex_count() == 224);
    const Json report = read_json(prefix + ".report.json");
    CHECK(report.at("out_of_regime").get<bool>() == true);
    CHECK(report.at("satisfies_ii").get<bool>() == false);
    CHECK(report.at("attempts").get<std::uint64_t>() == 3);
}

TEST_CASE("infeasible derived probability exits 2 before writing anything") {
    // 22 ln(2) / 10 > 1: no valid edge probability exists for n = 10.
    const std::string prefix = scratch_path("norun");
    const CliRun run = run_cli("sample --n 10 --r 2 --seed 1 --out " + prefix);
    CHECK(run.exit_code == 2);
    CHECK(run.err != "");
    CHECK(!fs::exists(prefix + ".graph.json"));
    CHECK(!fs::exists(prefix + ".report.json"));
}

TEST_CASE("ramsey-trial emits one csv row per trial plus header and summary") {
    const std::string out = scratch_path("trials.csv");
    const CliRun run = run_cli("ramsey-trial --n 16 --r 2 --seed 12 --trials 3 --out " + out);
    CHECK(run.exit_code == 0);
    CHECK(run.out == "");
    CHECK(contains(run.err, "ramsey-trial: 3 trials, path rate "));

    const auto lines = lines_of(read_text_file(out));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "trial,seed,edge_count,outcome,path_found,phases_used,max_f_count");
    CHECK(lines[1].rfind("0,", 0) == 0);
    CHECK(lines[2].rfind("1,", 0) == 0);
    CHECK(lines[3].rfind("2,", 0) == 0);
    CHECK(lines[4].rfind("summary,12,,,", 0) == 0);
}

TEST_CASE("dash output puts data on stdout and keeps logs on stderr") {
    const std::string file_out = scratch_path("trials-file.csv");
    const CliRun to_file =
        run_cli("ramsey-trial --n 16 --r 2 --seed 12 --trials 2 --out " + file_out);
    const CliRun to_stdout = run_cli("ramsey-trial --n 16 --r 2 --seed 12 --trials 2 --out -");
    CHECK(to_file.exit_code == 0);
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.out == read_text_file(file_out));
    CHECK(contains(to_stdout.err, "ramsey-trial: 2 trials"));
    CHECK(!contains(to_stdout.out, "ramsey-trial:"));
}

TEST_CASE("ramsey-trial json output echoes the run parameters") {
    const std::string out = scratch_path("trials.json");
    const CliRun run =
        run_cli("ramsey-trial --n 16 --r 2 --seed 9 --trials 2 --format json --out " + out);
    CHECK(run.exit_code == 0);

    const Json j = read_json(out);
    CHECK(j.at("strategy").get<std::string>() == "uniform-random");
    CHECK(j.at("seed").get<std::uint64_t>() == 9);
    CHECK(j.at("params").at("n").get<std::uint32_t>() == 16);
    CHECK(j.at("params").at("host_vertices").get<std::uint64_t>() == 224);
    CHECK(j.at("params").at("phase_count").get<std::uint32_t>() == 14);
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j.at("rows")[0].at("outcome").get<std::string>() == "path_found");
    CHECK(j.at("summary").at("trials").get<std::uint64_t>() == 2);
}

TEST_CASE("per-trial certificates re-validate against their graph and colouring") {
    const std::string dir = scratch_path("certs");
    const std::string out = scratch_path("cert-trials.csv");
    const CliRun run = run_cli("ramsey-trial --n 16 --r 2 --seed 4 --trials 2 "
                               "--adversary greedy-path-breaker --cert-dir " +
                               dir + " --out " + out);
    CHECK(run.exit_code == 0);

    for (int k = 0; k < 2; ++k) {
        const std::string stem = dir + "/trial_000" + std::to_string(k);
        const Graph g = graph_from_json(read_json(stem + ".graph.json"));
        const Colouring c = colouring_from_json(read_json(stem + ".colouring.json"));
        REQUIRE(c.size() == g.edge_count());

        const CertificateFile cert = certificate_from_json(read_json(stem + ".cert.json"),
                                                           g.edge_count());
        REQUIRE(cert.outcome == "path_found");
        REQUIRE(cert.path_vertices.has_value());
        const Path p = path_from_vertices(g, *cert.path_vertices);
        CHECK(verify_path(g, c, p, 16, cert.colour));
    }
}

TEST_CASE("check-expansion reads edge lists and reports a witness") {
    const std::string gfile = scratch_path("k4.txt");
    write_text_file(gfile, "# vertices: 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");

    SUBCASE("explicit budget below a single edge") {
        const std::string out = scratch_path("expansion.json");
        const CliRun run =
            run_cli("check-expansion --graph " + gfile + " --n 1 --budget 0.5 --out " + out);
        CHECK(run.exit_code == 0);
        CHECK(contains(run.err, "check-expansion: witness"));
        const Json j = read_json(out);
        CHECK(j.at("result").get<std::string>() == "witness");
        CHECK(j.at("budget").get<std::string>() == "0.5");
        CHECK(j.at("witness").at("edge_count").get<std::size_t>() >= 1);
    }
    SUBCASE("budget derived from a colour count is far out of reach") {
        const std::string out = scratch_path("expansion-pass.json");
        const CliRun run =
            run_cli("check-expansion --graph " + gfile + " --n 1 --r 2 --out " + out);
        CHECK(run.exit_code == 0);
        CHECK(contains(run.err, "check-expansion: pass"));
        const Json j = read_json(out);
        CHECK(j.at("result").get<std::string>() == "pass");
        CHECK(j.at("witness").is_null());
    }
    SUBCASE("budget and colour count are mutually exclusive") {
        const CliRun run =
            run_cli("check-expansion --graph " + gfile + " --n 1 --budget 0.5 --r 2");
        CHECK(run.exit_code == 1);
        CHECK(run.err != "");
    }
    SUBCASE("one of budget or colour count is required") {
        const CliRun run = run_cli("check-expansion --graph " + gfile + " --n 1");
        CHECK(run.exit_code == 1);
        CHECK(run.err != "");
    }
    SUBCASE("monte carlo reports its trial count") {
        const std::string out = scratch_path("expansion-mc.json");
        const CliRun run = run_cli("check-expansion --graph " + gfile +
                                   " --n 1 --budget 0.5 --method monte-carlo --trials 5 "
                                   "--seed 2 --out " +
                                   out);
        CHECK(run.exit_code == 0);
        const Json j = read_json(out);
        CHECK(j.at("result").get<std::string>() == "witness");
        CHECK(j.at("trials").get<std::uint64_t>() >= 1);
    }
}

TEST_CASE("bounds tabulates rows on the requested grid") {
    SUBCASE("csv to stdout") {
        const CliRun run = run_cli("bounds --r-min 2 --r-max 10 --steps 3 --out -");
        CHECK(run.exit_code == 0);
        CHECK(run.err == "bounds: 3 rows\n");
        const auto lines = lines_of(run.out);
        REQUIRE(lines.size() == 5);
        CHECK(lines[0].rfind("#", 0) == 0);
        CHECK(lines[1].rfind("r,", 0) == 0);
        CHECK(lines[2].rfind("2,", 0) == 0);
        CHECK(lines[4].rfind("10,", 0) == 0);
    }
    SUBCASE("json carries one row per grid point") {
        const std::string out = scratch_path("bounds.json");
        const CliRun run = run_cli("bounds --r-min 2 --format json --out " + out);
        CHECK(run.exit_code == 0);
        const Json j = read_json(out);
        REQUIRE(j.at("rows").size() == 1);
        CHECK(j.at("rows")[0].at("r").get<std::uint32_t>() == 2);
    }
    SUBCASE("empty grid is a usage error") {
        const CliRun run = run_cli("bounds --r-min 2 --r-max 1");
        CHECK(run.exit_code == 1);
    }
}

TEST_CASE("oracle arrows decides the triangle") {
    const std::string gfile = scratch_path("k3.json");
    write_text_file(gfile, graph_to_json(Graph::complete(3)).dump() + "\n");
    const std::string out = scratch_path("verdict.json");
    const CliRun run = run_cli("oracle arrows --graph " + gfile + " --n 3 --r 2 --out " + out);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.err, "oracle arrows: arrows after 4 colourings"));
    const Json j = read_json(out);
    CHECK(j.at("arrows").get<bool>() == true);
    CHECK(j.at("counterexample").is_null());
    CHECK(j.at("examined").get<std::uint64_t>() == 4);
    CHECK(j.at("method").get<std::string>() == "canonicalized");
}

TEST_CASE("oracle arrows refuses oversized colouring spaces with exit 3") {
    // 30 edges leave 2^29 canonical 2-colourings, over the 2^20 default cap.
    std::string text = "# vertices: 31\n";
    for (int v = 0; v + 1 < 31; ++v) {
        text += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
    }
    const std::string gfile = scratch_path("p31.txt");
    write_text_file(gfile, text);
    const std::string out = scratch_path("refused.json");
    const CliRun run = run_cli("oracle arrows --graph " + gfile + " --n 31 --r 2 --out " + out);
    CHECK(run.exit_code == 3);
    CHECK(run.err != "");
    CHECK(!fs::exists(out));
}

TEST_CASE("oracle longest-path finds the spine of a path graph") {
    const std::string gfile = scratch_path("p5.txt");
    write_text_file(gfile, "0 1\n1 2\n2 3\n3 4\n");
    const std::string out = scratch_path("longest.json");
    const CliRun run = run_cli("oracle longest-path --graph " + gfile + " --out " + out);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.err, "oracle longest-path: 5 vertices"));
    const Json j = read_json(out);
    CHECK(j.at("length").get<std::size_t>() == 5);
    CHECK(j.at("path") == Json::array({0, 1, 2, 3, 4}));
}

TEST_CASE("oracle min-ramsey reproduces the triangle threshold") {
    const std::string out = scratch_path("minramsey.json");
    const CliRun run = run_cli("oracle min-ramsey --n 3 --r 2 --cap 5 --out " + out);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.err, "oracle min-ramsey: m = 3"));
    const Json j = read_json(out);
    CHECK(j.at("m").get<std::size_t>() == 3);
    CHECK(j.at("graphs_examined").get<std::uint64_t>() == 8);
    const Graph witness = graph_from_json(j.at("witness"));
    CHECK(witness.vertex_count() == 3);
    CHECK(witness.edge_count() == 3);
}

TEST_CASE("malformed input files exit 1") {
    SUBCASE("broken json") {
        const std::string gfile = scratch_path("broken.json");
        write_text_file(gfile, "{\"vertex_count\": 3, \"edges\": [[0,");
        const CliRun run = run_cli("oracle longest-path --graph " + gfile);
        CHECK(run.exit_code == 1);
        CHECK(run.err != "");
    }
    SUBCASE("edge list with trailing tokens") {
        const std::string gfile = scratch_path("trailing.txt");
        write_text_file(gfile, "0 1 2\n");
        const CliRun run = run_cli("check-expansion --graph " + gfile + " --n 1 --budget 1");
        CHECK(run.exit_code == 1);
        CHECK(contains(run.err, "trailing content"));
    }
    SUBCASE("missing file") {
        const CliRun run = run_cli("oracle longest-path --graph " + scratch_path("absent.txt"));
        CHECK(run.exit_code == 1);
        CHECK(run.err != "");
    }
}
