#include "doctest.h"

#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mwis/esd.hpp"
#include "mwis/generators.hpp"

using namespace mwis;
namespace fs = std::filesystem;

namespace {

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("mwis_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& body) const {
        auto p = dir / name;
        std::ofstream(p) << body;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    int code = -1;
    std::string out, err;
};

Run cli(const Scratch& s, const std::string& args) {
    const auto out = s.path("stdout"), err = s.path("stderr");
    const std::string cmd = std::string(MWIS_CLI_PATH) + " " + args + " >" + out + " 2>" + err;
    int raw = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

Esd p3_strip() {
    Esd d = empty_esd(Graph(2, {{0, 1}}), 3);
    d.eta_edge[0].all = VertexSet(3, {0, 1, 2});
    d.eta_edge[0].end_u = VertexSet(3, {0});
    d.eta_edge[0].end_v = VertexSet(3, {2});
    return d;
}

}  // namespace

TEST_CASE("cli solve") {
    Scratch s;
    auto wg = generate("class:14:3/10:pt:5", 4, 1, 20);
    const auto g = s.file("g.txt", format_graph(wg.graph, wg.weights));

    auto r = cli(s, "solve --graph " + g + " --class pt:5 --mode exact --oracle");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["verification"]["oracle_match"] == true);
    CHECK(j["verification"]["independent"] == true);

    auto a = cli(s, "solve --graph " + g + " --class pt:5 --mode approx --eps 1/4 --oracle");
    CHECK(a.code == 0);

    CHECK(cli(s, "solve --graph " + g + " --class pt:5 --mode approx").code == 1);
    CHECK(cli(s, "solve --graph " + g + " --class pt:5 --mode approx --eps 3/2").code == 1);
    CHECK(cli(s, "solve --graph " + s.path("missing.txt") + " --class pt:5").code == 1);
    CHECK(cli(s, "solve --graph " + s.file("bad.txt", "p 2 1\ne 0 0\n") + " --class pt:5").code == 1);

    const auto empty = s.file("empty.txt", "p 0 0\n");
    auto e = cli(s, "solve --graph " + empty + " --class pt:5 --mode exact");
    REQUIRE(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["result"]["weight"] == 0);

    // P5 handed to a P5-free solve with the class check on
    const auto p5 = s.file("p5.txt", format_graph(path_graph(5), WeightFn(5, 1)));
    CHECK(cli(s, "solve --graph " + p5 + " --class pt:5 --check-class").code == 2);
}

TEST_CASE("cli validate") {
    Scratch s;
    const auto g = s.file("p3.txt", format_graph(path_graph(3), WeightFn(3, 1)));
    const auto ok = s.file("ok.json", esd_to_json(trivial_esd(path_graph(3))).dump());
    CHECK(cli(s, "validate --graph " + g + " --esd " + ok).code == 0);
    CHECK(cli(s, "validate --graph " + g + " --esd " + s.file("strip.json", esd_to_json(p3_strip()).dump()) +
                     " --atoms")
              .code == 0);

    Esd bad = p3_strip();
    bad.eta_vertex[1] = VertexSet(3, {1});
    auto r = cli(s, "validate --graph " + g + " --esd " + s.file("bad.json", esd_to_json(bad).dump()));
    CHECK(r.code == 2);
    CHECK(r.err.find("vertex 1 lies in two parts") != std::string::npos);

    // K2 with X = {0}: (0, 1/2)-good for weights (0, 1), not for (1, 1)
    const auto k2 = s.file("k2.txt", format_graph(path_graph(2), WeightFn{0, 1}));
    Esd rest = trivial_esd(path_graph(2), VertexSet(2, {1}));
    const auto entry = s.file("entry.json", esd_to_json(rest).dump());
    CHECK(cli(s, "validate --graph " + k2 + " --esd " + entry + " --x 0 --goodness 0,1/2").code == 0);
    const auto heavy = s.file("w.txt", "n 0 1\nn 1 1\n");
    CHECK(cli(s, "validate --graph " + k2 + " --esd " + entry + " --x 0 --goodness 0,1/2 --weights " + heavy).code ==
          2);
}

TEST_CASE("cli gen and reports are deterministic") {
    Scratch s;
    auto a = cli(s, "gen line:6:1/2 --seed 9 --wmax 7");
    auto b = cli(s, "gen line:6:1/2 --seed 9 --wmax 7");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(cli(s, "gen line:6:1/2 --seed 10 --wmax 7").out != a.out);

    const auto g = s.file("g.txt", a.out);
    auto r1 = cli(s, "solve --graph " + g + " --class claw:1 --mode approx --eps 1/2");
    auto r2 = cli(s, "solve --graph " + g + " --class claw:1 --mode approx --eps 1/2");
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("cli bench and treedecomp") {
    Scratch s;
    auto b = cli(s, "bench --gen class:10:3/10:pt:5 --class pt:5 --count 4 --oracle --seed 3 --report " +
                        s.path("bench.json"));
    CHECK(b.code == 0);
    auto j = nlohmann::json::parse(slurp(s.path("bench.json")));
    CHECK(j["summary"]["mismatches"] == 0);
    CHECK(j["rows"].size() == 4);

    const auto c4 = s.file("c4.txt", format_graph(cycle_graph(4), WeightFn(4, 1)));
    auto t = cli(s, "treedecomp --graph " + c4 + " --t 5");
    CHECK(t.code == 0);
    auto tj = nlohmann::json::parse(t.out);
    CHECK(tj["result"]["width"] <= tj["result"]["bound"]);
}
