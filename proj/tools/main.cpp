// mwis: solve / validate / gen / bench / treedecomp / disperser
//
// exit codes: 0 ok, 1 usage or parse error, 2 verification failure

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "mwis/solvers.hpp"
#include "report.hpp"

using namespace mwis;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kVerify = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string report;
    bool timing = false;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--report", c.report, "write the JSON report here instead of stdout");
    sub->add_flag("--timing", c.timing, "include wall times (reports are then not byte-stable)");
    sub->add_option("--seed", c.seed, "seed recorded in the report and used by generators");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<Vertex> parse_vertices(const std::string& s, int n) {
    std::vector<Vertex> out;
    for (const auto& tok : split(s, ',')) {
        std::size_t pos = 0;
        int v = -1;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::logic_error&) {
            pos = 0;
        }
        if (pos != tok.size() || v < 0 || v >= n) throw UsageError("bad vertex '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

Ratio parse_eps(const std::string& s) {
    Ratio e;
    try {
        e = Ratio::parse(s);
    } catch (const std::exception&) {
        throw UsageError("bad --eps '" + s + "'");
    }
    if (!(Ratio(0) < e && e < Ratio(1))) throw UsageError("--eps must lie strictly between 0 and 1");
    return e;
}

std::string ratio_text(Ratio r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

std::string big_text(const BigRational& r) { return r.str(); }

// weight >= (1 - eps) opt
bool within(Weight got, Weight opt, Ratio eps) {
    return static_cast<__int128>(got) * eps.den >= static_cast<__int128>(opt) * (eps.den - eps.num);
}

struct Loaded {
    WeightedGraph wg;
    std::string digest;
};

Loaded load(const std::string& path) {
    std::string text = cli::read_file(path);
    return {parse_graph(text), cli::sha256_hex(text)};
}

bool same_graph(const Graph& a, const Graph& b) { return a.n() == b.n() && a.edges() == b.edges(); }

json violation_json(const ClassViolation& cv) { return {{"message", cv.what()}, {"witness", cv.witness}}; }

// ---- solve

struct SolveOpts {
    std::string graph, cls, mode = "exact", eps, external_esd;
    bool oracle = false, check_class = false, force = false;
    long long n0 = -1;
    int j_cap = 2, factor = 4, oracle_cap = 40;
};

struct Solver {
    GraphClass cls;
    std::string mode;
    Ratio eps;
    const SolveOpts* o;
    OracleOptions oracle;

    json config() const {
        json c{{"class", cls.name()}, {"mode", mode}, {"j_cap", o->j_cap}, {"force_disperser", o->force}};
        if (mode == "approx") {
            c["eps"] = ratio_text(eps);
            c["internal_factor"] = o->factor;
        }
        if (o->n0 >= 0) c["n0"] = o->n0;
        return c;
    }

    SolveResult run(const Graph& g, const WeightFn& w) const {
        if (cls.kind == GraphClass::Kind::ExplicitH) {
            HFreeConfig hc;
            hc.j_cap = o->j_cap;
            hc.internal_factor = o->factor;
            hc.force_disperser = o->force;
            hc.n0 = std::max(0LL, o->n0);
            hc.oracle = oracle;
            return mode == "exact" ? mwis_hfree_exact(g, w, cls.h, hc) : mwis_hfree_approx(g, w, eps, cls.h, hc);
        }
        if (mode == "exact") {
            SubexpConfig sc = subexp_config(cls, o->force);
            if (o->n0 >= 0) sc.n0 = o->n0;
            sc.oracle = oracle;
            return subexp_exact(g, w, sc);
        }
        QptasConfig qc;
        qc.eps = eps;
        qc.cls = cls;
        qc.j_cap = o->j_cap;
        qc.internal_factor = o->factor;
        qc.oracle = oracle;
        return qptas(g, w, qc);
    }
};

Solver make_solver(const SolveOpts& o) {
    Solver s;
    s.o = &o;
    s.mode = o.mode;
    try {
        s.cls = GraphClass::parse(o.cls);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--class: ") + e.what());
    }
    if (o.mode == "approx") {
        if (o.eps.empty()) throw UsageError("--mode approx needs --eps");
        s.eps = parse_eps(o.eps);
    }
    if (o.j_cap < 0 || o.factor < 1) throw UsageError("--j-cap must be >= 0 and --internal-factor >= 1");
    return s;
}

int cmd_solve(const SolveOpts& o, const Common& c, const std::vector<std::string>& argv) {
    Solver s = make_solver(o);
    auto in = load(o.graph);
    const Graph& g = in.wg.graph;
    const WeightFn& w = in.wg.weights;

    json rep = cli::base_report("solve", argv, c.seed);
    rep["input"] = {{"graph", o.graph}, {"sha256", in.digest}, {"n", g.n()}, {"m", g.m()}};
    if (s.cls.kind == GraphClass::Kind::ExplicitH)
        rep["input"]["h_sha256"] = cli::sha256_hex(cli::read_file(o.cls.substr(o.cls.find(':') + 1)));
    rep["config"] = s.config();

    long long external_used = 0;
    Esd external;
    if (!o.external_esd.empty()) {
        const std::string text = cli::read_file(o.external_esd);
        json j = json::parse(text);
        external = esd_from_json(j.contains("esd") ? j["esd"] : j, g.n());
        rep["input"]["external_esd_sha256"] = cli::sha256_hex(text);
        s.oracle.provider = [&](const Graph& sg, const VertexSet& scope,
                                const std::array<Vertex, 3>&) -> std::optional<Esd> {
            if (!same_graph(sg, g) || !(external.domain() == scope)) return std::nullopt;
            ++external_used;
            return external;
        };
    }

    json ver;
    int code = kOk;
    if (o.check_class && s.cls.kind != GraphClass::Kind::ExplicitH) {
        auto fr = freeness_check(g, s.cls);
        ver["class_member"] = fr.free;
        if (!fr.free) {
            ver["class_witness"] = fr.witness;
            rep["verification"] = ver;
            rep["status"] = "not_in_class";
            cli::emit(rep, c.report);
            return kVerify;
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    SolveResult r;
    try {
        r = s.run(g, w);
    } catch (const ClassViolation& cv) {
        ver["class_violation"] = violation_json(cv);
        rep["verification"] = ver;
        rep["status"] = "class_violation";
        cli::emit(rep, c.report);
        return kVerify;
    }
    const double wall = ms_since(t0);

    rep["result"] = {{"weight", r.weight}, {"size", r.set.size()}, {"set", cli::set_json(r.set)}};
    rep["stats"] = stats_to_json(r.stats, c.timing);
    if (!o.external_esd.empty()) rep["stats"]["external_esd_used"] = external_used;

    ver["independent"] = is_independent(g, r.set);
    ver["weight_consistent"] = weight_of(w, r.set) == r.weight;
    if (!ver["independent"].get<bool>() || !ver["weight_consistent"].get<bool>()) code = kVerify;
    if (o.oracle) {
        if (g.n() <= o.oracle_cap) {
            auto bf = mwis_bruteforce(g, w, o.oracle_cap);
            const bool match = s.mode == "exact" ? bf.weight == r.weight : within(r.weight, bf.weight, s.eps);
            ver["oracle_weight"] = bf.weight;
            ver["oracle_match"] = match;
            if (!match) code = kVerify;
        } else {
            ver["oracle_skipped"] = "n above oracle cap " + std::to_string(o.oracle_cap);
        }
    }
    rep["verification"] = ver;
    rep["status"] = code == kOk ? "ok" : "mismatch";
    if (c.timing) rep["wall_ms"] = wall;
    cli::emit(rep, c.report);
    return code;
}

// ---- validate

struct ValidateOpts {
    std::string graph, esd, shatter, x, goodness, weights;
    bool atoms = false;
};

int cmd_validate(const ValidateOpts& o, const Common& c, const std::vector<std::string>& argv) {
    auto in = load(o.graph);
    const Graph& g = in.wg.graph;
    const std::string text = cli::read_file(o.esd);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(o.esd + ": " + e.what());
    }
    FamilyEntry e;
    if (j.contains("esd")) {
        e = entry_from_json(j, g);
    } else {
        e.esd = esd_from_json(j, g.n());
        e.x = VertexSet(g.n());
    }
    if (!o.x.empty()) {
        e.x = VertexSet(g.n());
        for (Vertex v : parse_vertices(o.x, g.n())) e.x.insert(v);
    }

    json rep = cli::base_report("validate", argv, c.seed);
    rep["input"] = {{"graph", o.graph}, {"sha256", in.digest}, {"esd_sha256", cli::sha256_hex(text)}};
    rep["x"] = cli::set_json(e.x);
    bool ok = true;
    json ver;

    auto er = validate_esd(g, e.esd, g.all() - e.x);
    ver["esd_valid"] = er.ok;
    ver["esd_violations"] = er.violations;
    ok = ok && er.ok;

    if (!o.shatter.empty()) {
        auto z = parse_vertices(o.shatter, g.n());
        if (z.size() != 3) throw UsageError("--shatter needs three vertices");
        bool sh = er.ok && shatters(g, e.esd, {z[0], z[1], z[2]});
        ver["shatters"] = sh;
        ok = ok && sh;
    }
    if (o.atoms && er.ok) {
        json list = json::array();
        for (const auto& a : mwis::atoms(g, e.esd))
            list.push_back({{"name", atom_name(e.esd, a)}, {"trivial", a.trivial}, {"vertices", cli::set_json(a.vertices)}});
        rep["atoms"] = list;
    }
    if (!o.goodness.empty()) {
        auto parts = split(o.goodness, ',');
        if (parts.size() != 2) throw UsageError("--goodness wants GAMMA,DELTA");
        Ratio gamma, delta;
        try {
            gamma = Ratio::parse(parts[0]);
            delta = Ratio::parse(parts[1]);
        } catch (const std::exception&) {
            throw UsageError("bad --goodness '" + o.goodness + "'");
        }
        WeightFn w = in.wg.weights;
        if (!o.weights.empty()) w = parse_weights(cli::read_file(o.weights), g.n());
        if (er.ok) {
            auto gd = is_good(g, w, e, gamma, delta.big());
            ver["shrinking"] = gd.shrinking;
            ver["safe"] = gd.safe;
            ver["good"] = gd.good();
            ok = ok && gd.good();
        } else {
            ver["good"] = false;
            ok = false;
        }
    }
    rep["verification"] = ver;
    rep["status"] = ok ? "ok" : "violation";
    cli::emit(rep, c.report);
    if (!er.ok)
        for (const auto& v : er.violations) std::cerr << "violation: " << v << "\n";
    return ok ? kOk : kVerify;
}

// ---- gen

struct GenOpts {
    std::string spec, out;
    Weight wmin = 1, wmax = 1;
};

int cmd_gen(const GenOpts& o, const Common& c, const std::vector<std::string>& argv) {
    if (o.wmin < 0 || o.wmax < o.wmin) throw UsageError("need 0 <= --wmin <= --wmax");
    WeightedGraph wg;
    try {
        wg = generate(o.spec, c.seed, o.wmin, o.wmax);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string text = format_graph(wg.graph, wg.weights);
    if (o.out.empty()) {
        std::cout << text;
        return kOk;
    }
    {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + o.out);
        f << text;
    }
    json rep = cli::base_report("gen", argv, c.seed);
    rep["config"] = {{"spec", o.spec}, {"wmin", o.wmin}, {"wmax", o.wmax}};
    rep["result"] = {{"file", o.out}, {"sha256", cli::sha256_hex(text)}, {"n", wg.graph.n()}, {"m", wg.graph.m()}};
    rep["status"] = "ok";
    if (!c.report.empty()) cli::emit(rep, c.report);
    return kOk;
}

// ---- bench

struct BenchOpts {
    std::string dir, gen, cls, eps = "1/4";
    int count = 10;
    Weight wmin = 1, wmax = 20;
    bool oracle = false, force = false;
    long long n0 = -1;
    int j_cap = 2, factor = 4, oracle_cap = 24;
};

int cmd_bench(const BenchOpts& b, const Common& c, const std::vector<std::string>& argv) {
    SolveOpts so;
    so.cls = b.cls;
    so.force = b.force;
    so.n0 = b.n0;
    so.j_cap = b.j_cap;
    so.factor = b.factor;
    so.mode = "exact";
    Solver exact = make_solver(so);
    SolveOpts sa = so;
    sa.mode = "approx";
    sa.eps = b.eps;
    Solver approx = make_solver(sa);
    exact.o = &so;
    approx.o = &sa;

    struct Instance {
        std::string name;
        std::optional<WeightedGraph> wg;
        std::string digest, error;
    };
    std::vector<Instance> inst;
    if (!b.dir.empty() == !b.gen.empty()) throw UsageError("bench needs exactly one of --dir and --gen");
    if (!b.dir.empty()) {
        std::vector<std::filesystem::path> files;
        std::error_code ec;
        for (const auto& de : std::filesystem::directory_iterator(b.dir, ec))
            if (de.is_regular_file() && de.path().filename().string()[0] != '.') files.push_back(de.path());
        if (ec) throw UsageError("cannot list " + b.dir + ": " + ec.message());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            Instance it{f.filename().string(), std::nullopt, "", ""};
            try {
                auto l = load(f.string());
                it.wg = std::move(l.wg);
                it.digest = l.digest;
            } catch (const std::exception& e) {
                it.error = e.what();
            }
            inst.push_back(std::move(it));
        }
    } else {
        Rng rng(c.seed);
        for (int i = 0; i < b.count; ++i) {
            const std::uint64_t s = rng();
            Instance it{"gen-" + std::to_string(i), std::nullopt, "", ""};
            try {
                it.wg = generate(b.gen, s, b.wmin, b.wmax);
                it.digest = cli::sha256_hex(format_graph(it.wg->graph, it.wg->weights));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            } catch (const std::exception& e) {
                it.error = e.what();
            }
            inst.push_back(std::move(it));
        }
    }

    json rows = json::array();
    int violations = 0, mismatches = 0, unreadable = 0;
    std::printf("%-24s %5s %-12s %10s %10s %8s %10s %10s  %s\n", "instance", "n", "class", "exact", "approx", "ratio",
                "nodes", "time_ms", "notes");
    for (const auto& it : inst) {
        json row{{"instance", it.name}};
        if (!it.wg) {
            ++unreadable;
            row["error"] = it.error;
            rows.push_back(row);
            std::printf("%-24s %5s %-12s %10s %10s %8s %10s %10s  unreadable: %s\n", it.name.c_str(), "-",
                        exact.cls.name().c_str(), "-", "-", "-", "-", "-", it.error.c_str());
            continue;
        }
        const Graph& g = it.wg->graph;
        const WeightFn& w = it.wg->weights;
        std::string notes;
        auto t0 = std::chrono::steady_clock::now();
        SolveResult re, ra;
        try {
            re = exact.run(g, w);
            ra = approx.run(g, w);
        } catch (const ClassViolation& cv) {
            ++violations;
            row["class_violation"] = violation_json(cv);
            rows.push_back(row);
            std::printf("%-24s %5d %-12s %10s %10s %8s %10s %10s  class violation\n", it.name.c_str(), g.n(),
                        exact.cls.name().c_str(), "-", "-", "-", "-", "-");
            continue;
        }
        const double wall = ms_since(t0);
        const double ratio = re.weight == 0 ? 1.0 : static_cast<double>(ra.weight) / static_cast<double>(re.weight);
        const bool ok_ratio = within(ra.weight, re.weight, approx.eps);
        if (!ok_ratio) ++violations, notes += "ratio-violation ";
        row.update({{"n", g.n()},
                    {"m", g.m()},
                    {"sha256", it.digest},
                    {"exact", re.weight},
                    {"approx", ra.weight},
                    {"ratio_ok", ok_ratio},
                    {"nodes", re.stats.nodes + ra.stats.nodes}});
        if (b.oracle) {
            if (g.n() <= b.oracle_cap) {
                auto bf = mwis_bruteforce(g, w, b.oracle_cap);
                row["oracle"] = bf.weight;
                if (bf.weight != re.weight) ++mismatches, notes += "oracle-mismatch ";
            } else {
                notes += "oracle-skipped ";
            }
        }
        if (c.timing) row["wall_ms"] = wall;
        rows.push_back(row);
        char tbuf[32] = "-";
        if (c.timing) std::snprintf(tbuf, sizeof tbuf, "%.1f", wall);
        std::printf("%-24s %5d %-12s %10lld %10lld %8.4f %10lld %10s  %s\n", it.name.c_str(), g.n(),
                    exact.cls.name().c_str(), static_cast<long long>(re.weight), static_cast<long long>(ra.weight),
                    ratio, re.stats.nodes + ra.stats.nodes, tbuf, notes.c_str());
    }
    std::printf("instances %zu  ratio violations %d  oracle mismatches %d  unreadable %d\n", inst.size(), violations,
                mismatches, unreadable);

    json rep = cli::base_report("bench", argv, c.seed);
    rep["config"] = {{"class", exact.cls.name()}, {"eps", ratio_text(approx.eps)}, {"oracle", b.oracle},
                     {"source", b.dir.empty() ? "gen:" + b.gen : "dir:" + b.dir}, {"count", inst.size()}};
    rep["rows"] = rows;
    rep["summary"] = {{"violations", violations}, {"mismatches", mismatches}, {"unreadable", unreadable}};
    const int code = violations + mismatches > 0 ? kVerify : unreadable > 0 ? kUsage : kOk;
    rep["status"] = code == kOk ? "ok" : code == kVerify ? "violation" : "unreadable";
    if (!c.report.empty()) cli::emit(rep, c.report);
    return code;
}

// ---- treedecomp

struct TdOpts {
    std::string graph;
    int t = 5, ct = -1;
    bool bags = false;
};

int cmd_treedecomp(const TdOpts& o, const Common& c, const std::vector<std::string>& argv) {
    if (o.t < 4) throw UsageError("--t must be at least 4");
    auto in = load(o.graph);
    const Graph& g = in.wg.graph;
    json rep = cli::base_report("treedecomp", argv, c.seed);
    rep["input"] = {{"graph", o.graph}, {"sha256", in.digest}, {"n", g.n()}, {"m", g.m()}};
    const int ct = o.ct > 0 ? o.ct : 3 * o.t;
    rep["config"] = {{"t", o.t}, {"c_t", ct}};
    TreeDecomposition td;
    try {
        td = treedecomp_longhole(g, o.t);
    } catch (const ClassViolation& cv) {
        rep["verification"] = {{"class_violation", violation_json(cv)}};
        rep["status"] = "class_violation";
        cli::emit(rep, c.report);
        return kVerify;
    }
    auto v = validate_tree_decomposition(g, td);
    const int bound = longhole_width_bound(g, o.t);
    const bool ok = v.ok() && td.width <= bound;
    rep["result"] = {{"width", td.width}, {"nodes", td.tree.n()}, {"bound", bound},
                     {"c_t_delta", static_cast<long long>(ct) * g.max_degree()}};
    if (o.bags) {
        json bl = json::array();
        for (const auto& b : td.bags) bl.push_back(cli::set_json(b));
        rep["result"]["bags"] = bl;
        rep["result"]["tree_edges"] = td.tree.edges();
    }
    rep["verification"] = {{"vertex_coverage", v.vertex_coverage}, {"edge_coverage", v.edge_coverage},
                           {"subtree", v.subtree}, {"is_tree", v.is_tree}, {"within_bound", td.width <= bound}};
    rep["status"] = ok ? "ok" : "violation";
    cli::emit(rep, c.report);
    return ok ? kOk : kVerify;
}

// ---- disperser

struct DispOpts {
    std::string graph, cls, gamma = "1/4";
    int j_cap = 2, index = -1;
};

int cmd_disperser(const DispOpts& o, const Common& c, const std::vector<std::string>& argv) {
    auto in = load(o.graph);
    const Graph& g = in.wg.graph;
    GraphClass cls;
    Ratio gamma;
    try {
        cls = GraphClass::parse(o.cls);
        gamma = Ratio::parse(o.gamma);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cls.kind == GraphClass::Kind::ExplicitH) throw UsageError("disperser: hfree classes have no disperser");
    Disperser d;
    try {
        d = build_disperser(g, cls, gamma, o.j_cap);
    } catch (const ClassViolation& cv) {
        json rep = cli::base_report("disperser", argv, c.seed);
        rep["verification"] = {{"class_violation", violation_json(cv)}};
        rep["status"] = "class_violation";
        cli::emit(rep, c.report);
        return kVerify;
    }
    if (o.index >= 0) {
        if (o.index >= static_cast<int>(d.entries.size())) throw UsageError("--index past the last entry");
        cli::emit(entry_to_json(d.entries[o.index]), c.report);
        return kOk;
    }
    json rep = cli::base_report("disperser", argv, c.seed);
    rep["input"] = {{"graph", o.graph}, {"sha256", in.digest}};
    rep["config"] = {{"class", cls.name()}, {"gamma", ratio_text(gamma)}, {"j_cap", o.j_cap}};
    rep["result"] = disperser_to_json(d);
    rep["status"] = "ok";
    cli::emit(rep, c.report);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum weight independent set via dispersers and strip decompositions"};
    app.require_subcommand(1);
    const std::vector<std::string> args(argv + 1, argv + argc);

    Common common;
    SolveOpts so;
    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--graph", so.graph, "graph file")->required();
    solve->add_option("--class", so.cls, "pt:T | hole:T | claw:T | lobster:T | hfree:FILE")->required();
    solve->add_option("--mode", so.mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
    solve->add_option("--eps", so.eps, "approximation slack, e.g. 1/4");
    solve->add_flag("--oracle", so.oracle, "cross-check against brute force");
    solve->add_option("--oracle-cap", so.oracle_cap, "largest n the brute force oracle runs on");
    solve->add_option("--external-esd", so.external_esd, "decomposition handed to the three-in-a-tree step");
    solve->add_flag("--check-class", so.check_class, "run the freeness check first");
    solve->add_flag("--force-disperser", so.force, "exact mode: use dispersers even when the degree test fails");
    solve->add_option("--n0", so.n0, "exact mode: brute force at or below this size");
    solve->add_option("--j-cap", so.j_cap, "largest guessed heavy set");
    solve->add_option("--internal-factor", so.factor, "run the recursion with eps / factor");
    add_common(solve, common);

    ValidateOpts vo;
    auto* validate = app.add_subcommand("validate", "check a decomposition");
    validate->add_option("--graph", vo.graph, "graph file")->required();
    validate->add_option("--esd", vo.esd, "decomposition (or disperser entry) JSON")->required();
    validate->add_option("--x", vo.x, "removed set X, comma separated");
    validate->add_option("--shatter", vo.shatter, "Z1,Z2,Z3");
    validate->add_flag("--atoms", vo.atoms, "list atoms");
    validate->add_option("--goodness", vo.goodness, "GAMMA,DELTA");
    validate->add_option("--weights", vo.weights, "weights file ('n v w' lines)");
    add_common(validate, common);

    GenOpts go;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("spec", go.spec, "path:N, cycle:N, random:N:P, tree:N[:D], interval:N[:S], split:N, line:M:P, "
                                     "class:N:P:<class>")
        ->required();
    gen->add_option("--wmin", go.wmin);
    gen->add_option("--wmax", go.wmax);
    gen->add_option("--out", go.out, "write here (a report then goes to --report)");
    add_common(gen, common);

    BenchOpts bo;
    auto* bench = app.add_subcommand("bench", "exact vs approx table");
    bench->add_option("--dir", bo.dir, "instance directory");
    bench->add_option("--gen", bo.gen, "generator spec, instances seeded from --seed");
    bench->add_option("--count", bo.count);
    bench->add_option("--class", bo.cls)->required();
    bench->add_option("--eps", bo.eps);
    bench->add_option("--wmin", bo.wmin);
    bench->add_option("--wmax", bo.wmax);
    bench->add_flag("--oracle", bo.oracle);
    bench->add_option("--oracle-cap", bo.oracle_cap);
    bench->add_flag("--force-disperser", bo.force);
    bench->add_option("--n0", bo.n0);
    bench->add_option("--j-cap", bo.j_cap);
    bench->add_option("--internal-factor", bo.factor);
    add_common(bench, common);

    TdOpts to;
    auto* td = app.add_subcommand("treedecomp", "tree decomposition of a long-hole-free graph");
    td->add_option("--graph", to.graph)->required();
    td->add_option("--t", to.t, "forbidden hole length");
    td->add_option("--ct", to.ct, "report width against ct * max degree (default 3t)");
    td->add_flag("--bags", to.bags);
    add_common(td, common);

    DispOpts dop;
    auto* disp = app.add_subcommand("disperser", "build and dump a disperser");
    disp->add_option("--graph", dop.graph)->required();
    disp->add_option("--class", dop.cls)->required();
    disp->add_option("--gamma", dop.gamma);
    disp->add_option("--j-cap", dop.j_cap);
    disp->add_option("--index", dop.index, "dump only this entry");
    add_common(disp, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) return cmd_solve(so, common, args);
        if (*validate) return cmd_validate(vo, common, args);
        if (*gen) return cmd_gen(go, common, args);
        if (*bench) return cmd_bench(bo, common, args);
        if (*td) return cmd_treedecomp(to, common, args);
        if (*disp) return cmd_disperser(dop, common, args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
