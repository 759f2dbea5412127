#include "mwis/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace mwis {

namespace {

// Primal-dual blossom algorithm (Edmonds / Galil), O(n^3), integer weights.
// Endpoint p of edge k is endpoint[p], p = 2k or 2k+1.
class Blossom {
public:
    Blossom(int n, const std::vector<WeightedEdge>& edges) : nv_(n), edges_(edges) {}

    std::vector<int> solve() {
        const int n = nv_;
        const int m = static_cast<int>(edges_.size());
        if (m == 0) return std::vector<int>(n, -1);
        std::int64_t maxw = 0;
        for (auto& e : edges_) maxw = std::max(maxw, e.w);
        endpoint_.resize(2 * m);
        for (int p = 0; p < 2 * m; ++p) endpoint_[p] = p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v;
        neighbend_.assign(n, {});
        for (int k = 0; k < m; ++k) {
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }
        mate_.assign(n, -1);
        label_.assign(2 * n, 0);
        labelend_.assign(2 * n, -1);
        inblossom_.resize(n);
        for (int i = 0; i < n; ++i) inblossom_[i] = i;
        blossomparent_.assign(2 * n, -1);
        blossomchilds_.assign(2 * n, {});
        blossombase_.assign(2 * n, -1);
        for (int i = 0; i < n; ++i) blossombase_[i] = i;
        blossomendps_.assign(2 * n, {});
        bestedge_.assign(2 * n, -1);
        blossombestedges_.assign(2 * n, {});
        hasbestlist_.assign(2 * n, 0);
        unused_.clear();
        for (int b = 2 * n - 1; b >= n; --b) unused_.push_back(b);
        // pop from the back gives the same order as the reference implementation
        std::reverse(unused_.begin(), unused_.end());
        dualvar_.assign(2 * n, 0);
        for (int i = 0; i < n; ++i) dualvar_[i] = maxw;
        allowedge_.assign(m, 0);

        for (int stage = 0; stage < n; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n; b < 2 * n; ++b) {
                blossombestedges_[b].clear();
                hasbestlist_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (int v = 0; v < n; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        int k = p / 2, w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        std::int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                int deltatype = 1, deltaedge = -1, deltablossom = -1;
                std::int64_t delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n);
                for (int v = 0; v < n; ++v)
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        std::int64_t d = slack(bestedge_[v]);
                        if (d < delta) delta = d, deltatype = 2, deltaedge = bestedge_[v];
                    }
                for (int b = 0; b < 2 * n; ++b)
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        std::int64_t ks = slack(bestedge_[b]);
                        if (ks % 2 != 0) throw std::logic_error("blossom: odd slack between S-blossoms");
                        std::int64_t d = ks / 2;
                        if (d < delta) delta = d, deltatype = 3, deltaedge = bestedge_[b];
                    }
                for (int b = n; b < 2 * n; ++b)
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 && dualvar_[b] < delta)
                        delta = dualvar_[b], deltatype = 4, deltablossom = b;

                for (int v = 0; v < n; ++v) {
                    if (label_[inblossom_[v]] == 1) dualvar_[v] -= delta;
                    else if (label_[inblossom_[v]] == 2) dualvar_[v] += delta;
                }
                for (int b = n; b < 2 * n; ++b)
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) dualvar_[b] += delta;
                        else if (label_[b] == 2) dualvar_[b] -= delta;
                    }

                if (deltatype == 1) break;
                if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = edges_[deltaedge].u, j = edges_[deltaedge].v;
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    queue_.push_back(edges_[deltaedge].u);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = n; b < 2 * n; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
                    expand_blossom(b, true);
        }
        std::vector<int> out(n, -1);
        for (int v = 0; v < n; ++v)
            if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
        return out;
    }

private:
    std::int64_t slack(int k) const {
        return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].w;
    }

    void leaves(int b, std::vector<int>& out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) leaves(t, out);
    }
    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            for (int v : leaves(b)) queue_.push_back(v);
        } else {
            int base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].u, w = edges_[k].v;
        int bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
        int b = unused_.back();
        unused_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        auto& path = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (int x : leaves(b)) {
            if (label_[inblossom_[x]] == 2) queue_.push_back(x);
            inblossom_[x] = b;
        }
        std::vector<int> bestedgeto(2 * nv_, -1);
        for (int sub : path) {
            std::vector<std::vector<int>> nblists;
            if (!hasbestlist_[sub]) {
                for (int x : leaves(sub)) {
                    std::vector<int> l;
                    for (int p : neighbend_[x]) l.push_back(p / 2);
                    nblists.push_back(std::move(l));
                }
            } else {
                nblists.push_back(blossombestedges_[sub]);
            }
            for (auto& nbl : nblists)
                for (int kk : nbl) {
                    int i = edges_[kk].u, j = edges_[kk].v;
                    if (inblossom_[j] == b) std::swap(i, j);
                    int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = kk;
                }
            blossombestedges_[sub].clear();
            hasbestlist_[sub] = 0;
            bestedge_[sub] = -1;
        }
        blossombestedges_[b].clear();
        for (int kk : bestedgeto)
            if (kk != -1) blossombestedges_[b].push_back(kk);
        hasbestlist_[b] = 1;
        bestedge_[b] = -1;
        for (int kk : blossombestedges_[b])
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : std::vector<int>(blossomchilds_[b])) {
            blossomparent_[s] = -1;
            if (s < nv_) inblossom_[s] = s;
            else if (endstage && dualvar_[s] == 0) expand_blossom(s, endstage);
            else
                for (int v : leaves(s)) inblossom_[v] = s;
        }
        if (!endstage && label_[b] == 2) {
            auto& childs = blossomchilds_[b];
            auto& endps = blossomendps_[b];
            const int len = static_cast<int>(childs.size());
            auto at = [&](const std::vector<int>& vec, int idx) { return vec[((idx % len) + len) % len]; };
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
            int jstep, endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[at(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[at(endps, j - endptrick) / 2] = 1;
                j += jstep;
                p = at(endps, j - endptrick) ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = at(childs, j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (at(childs, j) != entrychild) {
                bv = at(childs, j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int v : leaves(bv))
                    if (label_[v] != 0) {
                        found = v;
                        break;
                    }
                if (found >= 0) {
                    label_[found] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        hasbestlist_[b] = 0;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= nv_) augment_blossom(t, v);
        auto& childs = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        const int len = static_cast<int>(childs.size());
        auto at = [&](const std::vector<int>& vec, int idx) { return vec[((idx % len) + len) % len]; };
        int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
        int j = i, jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = at(childs, j);
            int p = at(endps, j - endptrick) ^ endptrick;
            if (t >= nv_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = at(childs, j);
            if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[b] = blossombase_[childs[0]];
    }

    void augment_matching(int k) {
        int v = edges_[k].u, w = edges_[k].v;
        for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            while (true) {
                int bs = inblossom_[s];
                if (bs >= nv_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= nv_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int nv_;
    std::vector<WeightedEdge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_, unused_, queue_;
    std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
    std::vector<char> hasbestlist_, allowedge_;
    std::vector<std::int64_t> dualvar_;
};

struct Canon {
    std::vector<WeightedEdge> edges;  // positive, deduplicated (max kept), sorted by (u, v)
};

Canon canonical_edges(int n, const std::vector<WeightedEdge>& in) {
    std::map<std::pair<Vertex, Vertex>, std::int64_t> best;
    for (auto& e : in) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
            throw std::invalid_argument("matching: bad edge");
        auto key = std::minmax(e.u, e.v);
        auto it = best.find({key.first, key.second});
        if (it == best.end()) best[{key.first, key.second}] = e.w;
        else it->second = std::max(it->second, e.w);
    }
    Canon c;
    for (auto& [k, w] : best)
        if (w > 0) c.edges.push_back({k.first, k.second, w});
    return c;
}

Matching from_mate(const std::vector<int>& mate, const std::vector<WeightedEdge>& edges) {
    Matching m;
    std::map<std::pair<Vertex, Vertex>, std::int64_t> wmap;
    for (auto& e : edges) wmap[{e.u, e.v}] = e.w;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) {
            m.edges.emplace_back(v, mate[v]);
            m.weight = checked_add(m.weight, wmap.at({v, mate[v]}));
        }
    return m;
}

}  // namespace

Matching max_weight_matching(int n, const std::vector<WeightedEdge>& input) {
    auto c = canonical_edges(n, input);
    const auto& es = c.edges;
    if (es.empty()) return {};
    for (auto& e : es)
        if (e.w > (std::int64_t{1} << 60) / (n + 1)) throw std::overflow_error("matching: weights too large");

    auto solve_on = [&](const std::vector<WeightedEdge>& sub) {
        if (sub.empty()) return Matching{};
        return from_mate(Blossom(n, sub).solve(), sub);
    };
    Matching best = solve_on(es);
    const std::int64_t target = best.weight;

    // Lexicographic canonicalisation: fix edges greedily in sorted order while the optimum survives.
    std::vector<char> used(n, 0);
    std::vector<std::pair<Vertex, Vertex>> chosen;
    std::int64_t chosen_w = 0;
    Matching witness = best;  // an optimal matching consistent with decisions so far
    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto& e = es[i];
        if (used[e.u] || used[e.v]) continue;
        bool take = std::binary_search(witness.edges.begin(), witness.edges.end(), std::pair{e.u, e.v});
        if (!take) {
            std::vector<WeightedEdge> rest;
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                const auto& f = es[j];
                if (!used[f.u] && !used[f.v] && f.u != e.u && f.u != e.v && f.v != e.u && f.v != e.v)
                    rest.push_back(f);
            }
            Matching r = solve_on(rest);
            if (chosen_w + e.w + r.weight == target) {
                take = true;
                witness.edges = chosen;
                witness.edges.emplace_back(e.u, e.v);
                witness.edges.insert(witness.edges.end(), r.edges.begin(), r.edges.end());
                std::sort(witness.edges.begin(), witness.edges.end());
            }
        }
        if (take) {
            chosen.emplace_back(e.u, e.v);
            chosen_w += e.w;
            used[e.u] = used[e.v] = 1;
        }
    }
    if (chosen_w != target) throw std::logic_error("matching canonicalisation lost optimality");
    return {chosen, chosen_w};
}

Matching brute_force_matching(int n, const std::vector<WeightedEdge>& input, int cap) {
    if (static_cast<int>(input.size()) > cap)
        throw CapExceeded("brute_force_matching: " + std::to_string(input.size()) + " edges");
    auto c = canonical_edges(n, input);
    const auto& es = c.edges;
    Matching best;
    std::vector<std::pair<Vertex, Vertex>> cur;
    std::vector<char> used(n, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t w) {
        if (i == es.size()) {
            // enumeration visits lists in lexicographic order, so only strict improvements replace
            if (w > best.weight) best = {cur, w};
            return;
        }
        const auto& e = es[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            cur.emplace_back(e.u, e.v);
            rec(i + 1, w + e.w);
            cur.pop_back();
            used[e.u] = used[e.v] = 0;
        }
        rec(i + 1, w);
    };
    rec(0, 0);
    return best;
}

}  // namespace mwis
