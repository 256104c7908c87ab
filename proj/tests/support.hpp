#pragma once

// Brute-force oracles and small graph builders shared by the unit tests and
// the acceptance binary. Everything here is exponential on purpose and only
// meant for n <= 10 or so.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "strongcover/coloring.hpp"
#include "strongcover/graph.hpp"

namespace strongcover::oracle {

inline Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

inline Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline std::uint32_t neighbor_mask(const Graph& g, Vertex v)
{
    std::uint32_t m = 0;
    for (Vertex u = 0; u < g.size(); ++u) {
        if (g.adjacent(u, v)) {
            m |= 1U << u;
        }
    }
    return m;
}

inline bool mask_is_clique(const Graph& g, std::uint32_t mask)
{
    for (Vertex v = 0; v < g.size(); ++v) {
        if ((mask >> v & 1U) && (mask & ~(1U << v) & ~neighbor_mask(g, v)) != 0) {
            return false;
        }
    }
    return true;
}

/// Repeatedly delete a simplicial vertex; chordal iff the graph empties.
inline bool chordal_by_elimination(const Graph& g)
{
    std::uint32_t alive = g.size() == 32 ? ~0U : (1U << g.size()) - 1;
    while (alive != 0) {
        bool removed = false;
        for (Vertex v = 0; v < g.size() && !removed; ++v) {
            if ((alive >> v & 1U) && mask_is_clique(g, neighbor_mask(g, v) & alive)) {
                alive &= ~(1U << v);
                removed = true;
            }
        }
        if (!removed) {
            return false;
        }
    }
    return true;
}

inline int clique_number(const Graph& g)
{
    int best = 0;
    for (std::uint32_t m = 0; m < (1U << g.size()); ++m) {
        if (std::popcount(m) > best && mask_is_clique(g, m)) {
            best = std::popcount(m);
        }
    }
    return best;
}

inline std::vector<std::uint32_t> all_cliques(const Graph& g)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1U << g.size()); ++m) {
        if (mask_is_clique(g, m)) {
            out.push_back(m);
        }
    }
    return out;
}

inline bool has_induced_c4(const Graph& g)
{
    const int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int deg[4] = {};
                    int vs[4] = {a, b, c, d};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) {
                                ++deg[i];
                                ++deg[j];
                                ++edges;
                            }
                    if (edges == 4 && std::all_of(deg, deg + 4, [](int x) { return x == 2; })) {
                        return true;
                    }
                }
    return false;
}

/// For every reachable covered-vertex mask, the fewest cliques reaching it.
/// Colors are processed one at a time, each contributing any of its cliques
/// (including the empty one, which costs nothing).
inline std::unordered_map<std::uint32_t, int> reachable_covers(const MultiColoring& col)
{
    std::unordered_map<std::uint32_t, int> best{{0U, 0}};
    for (Color c = 1; c <= col.t(); ++c) {
        const auto cliques = all_cliques(color_graph(col, c));
        std::unordered_map<std::uint32_t, int> next = best;
        for (const auto& [mask, used] : best) {
            for (std::uint32_t q : cliques) {
                if (q == 0) {
                    continue;
                }
                std::uint32_t m = mask | q;
                auto it = next.find(m);
                if (it == next.end() || it->second > used + 1) {
                    next[m] = used + 1;
                }
            }
        }
        best = std::move(next);
    }
    return best;
}

inline int naive_max_cover(const MultiColoring& col)
{
    int best = 0;
    for (const auto& [mask, used] : reachable_covers(col)) {
        best = std::max(best, std::popcount(mask));
    }
    return best;
}

inline std::optional<int> naive_theta(const MultiColoring& col)
{
    const std::uint32_t full = (1U << col.n()) - 1;
    auto table = reachable_covers(col);
    auto it = table.find(full);
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second;
}

/// Direct k-subset scan of the (t,k) condition.
inline bool naive_is_tk(const MultiColoring& col, int k)
{
    const int n = col.n();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        if (std::popcount(m) != k) {
            continue;
        }
        bool some = false;
        for (Color c = 1; c <= col.t() && !some; ++c) {
            bool mono = true;
            for (Vertex u = 0; u < n && mono; ++u)
                for (Vertex v = u + 1; v < n && mono; ++v)
                    if ((m >> u & 1U) && (m >> v & 1U) && !col.has_color(u, v, c)) {
                        mono = false;
                    }
            some = mono;
        }
        if (!some) {
            return false;
        }
    }
    return true;
}

}  // namespace strongcover::oracle
