#include "mwis/generators.hpp"

#include <algorithm>
#include <sstream>

namespace mwis {

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph random_tree(int n, int max_degree, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> e;
    std::vector<int> deg(n, 0);
    std::vector<Vertex> open;
    if (n > 0) open.push_back(0);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        std::size_t i = pick(rng);
        Vertex p = open[i];
        e.emplace_back(p, v);
        ++deg[p], ++deg[v];
        if (max_degree > 0 && deg[p] >= max_degree) {
            open[i] = open.back();
            open.pop_back();
        }
        if (max_degree == 0 || deg[v] < max_degree) open.push_back(v);
    }
    return Graph(n, e);
}

Graph random_interval_graph(int n, int span, Rng& rng) {
    std::uniform_int_distribution<int> start(0, std::max(0, n - 1));
    std::uniform_int_distribution<int> len(0, std::max(0, span));
    std::vector<std::pair<int, int>> iv(n);
    for (auto& [a, b] : iv) {
        a = start(rng);
        b = a + len(rng);
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph random_split_graph(int n, Rng& rng) {
    std::uniform_int_distribution<int> cut(0, n);
    int k = cut(rng);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = k; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph line_graph(const Graph& base) {
    const auto& be = base.edges();
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < be.size(); ++i)
        for (std::size_t j = i + 1; j < be.size(); ++j) {
            auto [a, b] = be[i];
            auto [c, d] = be[j];
            if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
        }
    return Graph(static_cast<int>(be.size()), e);
}

Graph random_class_graph(int n, double p, const GraphClass& cls, Rng& rng, int max_flips) {
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a[i][j] = a[j][i] = coin(rng);
    auto build = [&] {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (a[i][j]) e.emplace_back(i, j);
        return Graph(n, e);
    };
    for (int flip = 0; flip <= max_flips; ++flip) {
        Graph g = build();
        auto res = freeness_check(g, cls);
        if (res.free) return g;
        auto& w = res.witness;
        std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
        Vertex x = w[pick(rng)], y = w[pick(rng)];
        while (x == y) y = w[pick(rng)];
        a[x][y] = a[y][x] = !a[x][y];
    }
    throw std::runtime_error("random_class_graph: no convergence for " + cls.name());
}

WeightFn random_weights(int n, Weight lo, Weight hi, Rng& rng) {
    std::uniform_int_distribution<Weight> d(lo, hi);
    WeightFn w(n);
    for (auto& x : w) x = d(rng);
    return w;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep, std::size_t max_parts) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (out.size() + 1 < max_parts) {
        auto pos = s.find(sep, start);
        if (pos == std::string::npos) break;
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    out.push_back(s.substr(start));
    return out;
}

int to_int(const std::string& s) {
    std::size_t pos;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

}  // namespace

WeightedGraph generate(const std::string& spec, std::uint64_t seed, Weight wmin, Weight wmax) {
    Rng rng(seed);
    auto parts = split(spec, ':', 4);
    const std::string& kind = parts[0];
    auto need = [&](std::size_t k) {
        if (parts.size() < k) throw std::invalid_argument("generator spec '" + spec + "' is missing fields");
    };
    Graph g;
    try {
        if (kind == "path") need(2), g = path_graph(to_int(parts[1]));
        else if (kind == "cycle") need(2), g = cycle_graph(to_int(parts[1]));
        else if (kind == "random") need(3), g = random_graph(to_int(parts[1]), Ratio::parse(parts[2]).to_double(), rng);
        else if (kind == "tree") {
            need(2);
            g = random_tree(to_int(parts[1]), parts.size() > 2 ? to_int(parts[2]) : 0, rng);
        } else if (kind == "interval") {
            need(2);
            int n = to_int(parts[1]);
            g = random_interval_graph(n, parts.size() > 2 ? to_int(parts[2]) : std::max(1, n / 4), rng);
        } else if (kind == "split") need(2), g = random_split_graph(to_int(parts[1]), rng);
        else if (kind == "line") {
            need(3);
            g = line_graph(random_graph(to_int(parts[1]), Ratio::parse(parts[2]).to_double(), rng));
        } else if (kind == "class") {
            need(4);
            g = random_class_graph(to_int(parts[1]), Ratio::parse(parts[2]).to_double(), GraphClass::parse(parts[3]),
                                   rng);
        } else {
            throw std::invalid_argument("unknown generator '" + kind + "'");
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("generator spec '" + spec + "': " + e.what());
    }
    if (wmin < 0 || wmax < wmin) throw std::invalid_argument("bad weight range");
    return {g, random_weights(g.n(), wmin, wmax, rng)};
}

}  // namespace mwis
