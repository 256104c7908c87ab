#include "strongcover/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace strongcover::chordal {

namespace {

std::vector<int> positions(const Graph& g, std::span<const Vertex> order)
{
    const int n = g.size();
    if (static_cast<int>(order.size()) != n) {
        throw InputError("ordering does not list every vertex exactly once");
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) {
            throw InputError("ordering does not list every vertex exactly once");
        }
        pos[v] = i;
    }
    return pos;
}

VertexSet later_neighbors(const Graph& g, const std::vector<int>& pos, Vertex v)
{
    VertexSet later = g.neighbors(v);
    for (auto w = later.find_first(); w != VertexSet::npos; w = later.find_next(w)) {
        if (pos[w] < pos[v]) {
            later.reset(w);
        }
    }
    return later;
}

void require_peo(const Graph& g, std::span<const Vertex> peo)
{
    if (!is_peo(g, peo)) {
        throw InputError("ordering is not a perfect elimination ordering");
    }
}

// Candidate cliques {v} + later neighbours, one per vertex.
std::vector<VertexSet> peo_candidates(const Graph& g, std::span<const Vertex> peo)
{
    require_peo(g, peo);
    auto pos = positions(g, peo);
    std::vector<VertexSet> out;
    out.reserve(g.size());
    for (Vertex v : peo) {
        VertexSet c = later_neighbors(g, pos, v);
        c.set(v);
        out.push_back(std::move(c));
    }
    return out;
}

// Hole through v: shortest a-b path avoiding the rest of N[v].
std::optional<VertexList> hole_through(const Graph& g, Vertex v, Vertex a, Vertex b)
{
    VertexSet allowed = g.all_vertices() - g.neighbors(v);
    allowed.reset(v);
    allowed.set(a);
    allowed.set(b);
    VertexList path = g.shortest_path(a, b, allowed);
    if (path.empty()) {
        return std::nullopt;
    }
    VertexList cycle{v};
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

struct DisjointSets {
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

VertexList mcs_order(const Graph& g)
{
    const int n = g.size();
    std::vector<int> weight(n, 0);
    std::vector<bool> done(n, false);
    VertexList order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!done[v] && (best == -1 || weight[v] > weight[best])) {
                best = v;
            }
        }
        done[best] = true;
        order.push_back(best);
        const VertexSet& nb = g.neighbors(best);
        for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) {
            if (!done[w]) {
                ++weight[w];
            }
        }
    }
    return order;
}

std::optional<PeoViolation> find_peo_violation(const Graph& g, std::span<const Vertex> order)
{
    auto pos = positions(g, order);
    for (Vertex v : order) {
        VertexSet later = later_neighbors(g, pos, v);
        for (auto a = later.find_first(); a != VertexSet::npos; a = later.find_next(a)) {
            VertexSet missing = later - g.neighbors(static_cast<Vertex>(a));
            missing.reset(a);
            if (missing.any()) {
                return PeoViolation{v, static_cast<Vertex>(a), static_cast<Vertex>(missing.find_first())};
            }
        }
    }
    return std::nullopt;
}

bool is_peo(const Graph& g, std::span<const Vertex> order)
{
    return !find_peo_violation(g, order).has_value();
}

bool is_hole(const Graph& g, std::span<const Vertex> cycle)
{
    const int len = static_cast<int>(cycle.size());
    if (len < 4) {
        return false;
    }
    VertexSet seen(g.size());
    for (Vertex v : cycle) {
        if (v < 0 || v >= g.size() || seen.test(v)) {
            return false;
        }
        seen.set(v);
    }
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) {
                return false;
            }
        }
    }
    return true;
}

ChordalCertificate is_chordal(const Graph& g)
{
    VertexList order = mcs_order(g);
    VertexList peo(order.rbegin(), order.rend());
    auto violation = find_peo_violation(g, peo);
    if (!violation) {
        return {std::move(peo), std::nullopt};
    }
    if (auto cycle = hole_through(g, violation->v, violation->a, violation->b)) {
        return {std::nullopt, std::move(cycle)};
    }
    // Any hole has a vertex whose two cycle neighbours are joined by the rest
    // of the cycle outside its closed neighbourhood, so this scan cannot miss.
    for (Vertex v = 0; v < g.size(); ++v) {
        VertexList nb = to_list(g.neighbors(v));
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) {
                    continue;
                }
                if (auto cycle = hole_through(g, v, nb[i], nb[j])) {
                    return {std::nullopt, std::move(cycle)};
                }
            }
        }
    }
    throw std::logic_error("non-chordal ordering without an induced cycle");
}

VertexList max_clique_chordal(const Graph& g, std::span<const Vertex> peo)
{
    std::optional<VertexList> best;
    for (const VertexSet& c : peo_candidates(g, peo)) {
        VertexList list = to_list(c);
        if (!best || list.size() > best->size() || (list.size() == best->size() && list < *best)) {
            best = std::move(list);
        }
    }
    return best.value_or(VertexList{});
}

std::vector<VertexList> maximal_cliques_chordal(const Graph& g, std::span<const Vertex> peo)
{
    auto candidates = peo_candidates(g, peo);
    std::vector<VertexList> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
            if (i != j && candidates[i].is_proper_subset_of(candidates[j])) {
                dominated = true;
            }
        }
        if (!dominated) {
            out.push_back(to_list(candidates[i]));
        }
    }
    std::ranges::sort(out);
    auto dup = std::ranges::unique(out);
    out.erase(dup.begin(), dup.end());
    return out;
}

std::vector<VertexList> greedy_color_chordal(const Graph& g, std::span<const Vertex> peo)
{
    require_peo(g, peo);
    std::vector<int> color(g.size(), -1);
    std::vector<VertexList> classes;
    for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
        Vertex v = *it;
        std::vector<bool> taken(classes.size() + 1, false);
        const VertexSet& nb = g.neighbors(v);
        for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) {
            if (color[w] >= 0) {
                taken[color[w]] = true;
            }
        }
        int c = static_cast<int>(std::ranges::find(taken, false) - taken.begin());
        if (c == static_cast<int>(classes.size())) {
            classes.emplace_back();
        }
        color[v] = c;
        classes[c].push_back(v);
    }
    for (auto& cls : classes) {
        std::ranges::sort(cls);
    }
    return classes;
}

std::optional<CliqueCutset> clique_cutset(const Graph& g, std::span<const Vertex> peo)
{
    if (!g.is_connected()) {
        throw InputError("clique cut-set requires a connected graph");
    }
    if (!is_peo(g, peo)) {
        throw InputError("clique cut-set requires a chordal graph with a valid PEO");
    }
    if (g.is_complete()) {
        return std::nullopt;
    }
    auto cliques = maximal_cliques_chordal(g, peo);
    const int m = static_cast<int>(cliques.size());
    std::vector<VertexSet> sets;
    for (const auto& c : cliques) {
        sets.push_back(make_vertex_set(g.size(), c));
    }

    // Clique tree: maximum-weight spanning tree of the clique intersection graph.
    std::vector<std::tuple<int, int, int>> edges;  // (-weight, i, j)
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int w = static_cast<int>((sets[i] & sets[j]).count());
            if (w > 0) {
                edges.emplace_back(-w, i, j);
            }
        }
    }
    std::ranges::sort(edges);
    DisjointSets forest(m);
    std::vector<std::pair<int, int>> tree;
    for (auto [w, i, j] : edges) {
        if (forest.unite(i, j)) {
            tree.emplace_back(i, j);
        }
    }
    if (static_cast<int>(tree.size()) != m - 1) {
        throw std::logic_error("clique graph of a connected chordal graph is disconnected");
    }

    auto [ci, cj] = tree.front();
    DisjointSets sides(m);
    for (std::size_t e = 1; e < tree.size(); ++e) {
        sides.unite(tree[e].first, tree[e].second);
    }
    VertexSet q = sets[ci] & sets[cj];
    VertexSet a(g.size());
    for (int c = 0; c < m; ++c) {
        if (sides.find(c) == sides.find(ci)) {
            a |= sets[c];
        }
    }
    a -= q;
    VertexSet b = g.all_vertices() - a - q;

    for (auto v = a.find_first(); v != VertexSet::npos; v = a.find_next(v)) {
        if (g.neighbors(static_cast<Vertex>(v)).intersects(b)) {
            throw std::logic_error("clique tree separator does not separate");
        }
    }
    if (a.none() || b.none() || !g.is_clique(q)) {
        throw std::logic_error("degenerate clique cut-set");
    }
    return CliqueCutset{to_list(a), to_list(q), to_list(b)};
}

C4Check induced_c4_free(const Graph& g)
{
    const int n = g.size();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex c = a + 1; c < n; ++c) {
            if (g.adjacent(a, c)) {
                continue;
            }
            VertexSet common = g.neighbors(a) & g.neighbors(c);
            for (auto b = common.find_first(); b != VertexSet::npos; b = common.find_next(b)) {
                VertexSet opposite = common - g.neighbors(static_cast<Vertex>(b));
                auto d = opposite.find_next(b);
                if (d != VertexSet::npos) {
                    return {false, VertexList{a, static_cast<Vertex>(b), c, static_cast<Vertex>(d)}};
                }
            }
        }
    }
    return {};
}

EdgeBoundReport chordal_edge_bound_check(const Graph& g)
{
    ChordalCertificate cert = is_chordal(g);
    if (!cert.chordal()) {
        throw InputError("edge bound check requires a chordal graph");
    }
    EdgeBoundReport r;
    const long long n = g.size();
    r.edges = g.edge_count();
    r.omega = static_cast<int>(max_clique_chordal(g, *cert.peo).size());
    const long long w = r.omega;
    r.partition_bound = (w - 1) * n - w * (w - 1) / 2;
    r.coarse_bound = w * (n - 1);
    r.holds = r.edges <= r.partition_bound && r.edges <= r.coarse_bound;
    return r;
}

bool bipartite_part_is_forest(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y)
{
    DisjointSets forest(g.size());
    for (Vertex u : x) {
        for (Vertex v : y) {
            if (g.adjacent(u, v) && !forest.unite(u, v)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<VertexList> maximal_cliques(const Graph& g)
{
    std::vector<VertexList> out;
    VertexSet r(g.size());
    auto expand = [&](auto&& self, VertexSet& clique, VertexSet p, VertexSet x) -> void {
        if (p.none() && x.none()) {
            out.push_back(to_list(clique));
            return;
        }
        // Pivot: vertex of P u X with the most neighbours in P.
        VertexSet px = p | x;
        Vertex pivot = -1;
        std::size_t best = 0;
        for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
            std::size_t k = (p & g.neighbors(static_cast<Vertex>(u))).count();
            if (pivot == -1 || k > best) {
                pivot = static_cast<Vertex>(u);
                best = k;
            }
        }
        VertexSet todo = p - g.neighbors(pivot);
        for (auto v = todo.find_first(); v != VertexSet::npos; v = todo.find_next(v)) {
            const VertexSet& nb = g.neighbors(static_cast<Vertex>(v));
            clique.set(v);
            self(self, clique, p & nb, x & nb);
            clique.reset(v);
            p.reset(v);
            x.set(v);
        }
    };
    if (g.size() > 0) {
        expand(expand, r, g.all_vertices(), VertexSet(g.size()));
    }
    std::ranges::sort(out);
    return out;
}

}  // namespace strongcover::chordal
