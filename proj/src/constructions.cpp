#include "strongcover/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "strongcover/chordal.hpp"
#include "strongcover/random.hpp"

namespace strongcover::constructions {

std::vector<Walk> hamilton_decomposition_bipartite(int m)
{
    if (m < 2 || m % 2 != 0) {
        throw InputError("Hamilton decomposition of K_{m,m} needs an even m >= 2");
    }
    std::vector<Walk> cycles;
    for (int r = 0; r < m / 2; ++r) {
        // a_i is matched to b_{i+2r} and b_{i+2r+1}; walking a_i -> b_{i+2r+1}
        // -> a_{i+1} visits every vertex once.
        Walk cycle;
        for (int i = 0; i < m; ++i) {
            cycle.push_back(i);
            cycle.push_back(m + (i + 2 * r + 1) % m);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<Walk> hamilton_paths_for_construction(int t)
{
    if (t < 2) {
        throw InputError("construction needs t >= 2");
    }
    const int m = 2 * t - 2;
    const Vertex dropped = m + (m - 1);
    std::vector<Walk> paths;
    for (const Walk& cycle : hamilton_decomposition_bipartite(m)) {
        auto at = std::ranges::find(cycle, dropped);
        Walk path(at + 1, cycle.end());
        path.insert(path.end(), cycle.begin(), at);
        paths.push_back(std::move(path));
    }
    return paths;
}

TIntervalFamily construct_onefourth(int t)
{
    if (t < 2) {
        throw InputError("construct_onefourth needs t >= 2");
    }
    const int a_size = 2 * t - 2;
    const int n = 4 * t - 5;
    TIntervalFamily fam;
    fam.t = t;
    fam.members.assign(n, std::vector<ClosedInterval>(t));
    for (Vertex v = 0; v < n; ++v) {
        fam.members[v][0] = v < a_size ? ClosedInterval{0, 1} : ClosedInterval{2, 3};
    }
    auto paths = hamilton_paths_for_construction(t);
    for (int j = 0; j < t - 1; ++j) {
        const Walk& path = paths[j];
        for (long long p = 0; p < static_cast<long long>(path.size()); ++p) {
            fam.members[path[p]][j + 1] = {2 * p, 2 * p + 2};
        }
    }
    return fam;
}

MultiColoring construct_k5star()
{
    MultiColoring col(5, 2);
    for (Vertex i = 0; i < 5; ++i) {
        col.add_color(i, (i + 1) % 5, 1);
        col.add_color(i, (i + 2) % 5, 2);
    }
    return col;
}

MultiColoring construct_k4_two_paths()
{
    MultiColoring col(4, 2);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}}) {
        col.add_color(u, v, 1);
    }
    for (auto [u, v] : {std::pair{2, 0}, {0, 3}, {3, 1}}) {
        col.add_color(u, v, 2);
    }
    return col;
}

TIntervalFamily construct_partition_coloring(int n, int t)
{
    if (t < 1 || n < t) {
        throw InputError("construct_partition_coloring needs n >= t >= 1");
    }
    std::vector<int> part(n);
    for (int i = 0, v = 0; i < t; ++i) {
        int size = n / t + (i < n % t ? 1 : 0);
        for (int s = 0; s < size; ++s) {
            part[v++] = i;
        }
    }
    const long long wide = 2LL * n;
    TIntervalFamily fam;
    fam.t = t;
    fam.members.assign(n, std::vector<ClosedInterval>(t));
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < t; ++i) {
            if (part[v] == i) {
                fam.members[v][i] = {0, wide};
            } else if (part[v] > i) {
                fam.members[v][i] = {2LL * v + 1, 2LL * v + 1};
            } else {
                fam.members[v][i] = {2 * wide + v, 2 * wide + v};
            }
        }
    }
    return fam;
}

MultiColoring construct_k8_c4free_3col()
{
    // Cyclic orders and extra edges on labels 1..8.
    struct ColorClass {
        std::vector<int> cycle;
        std::vector<std::pair<int, int>> extra;
    };
    const std::vector<ColorClass> classes = {
        {{1, 2, 3, 4, 5, 6, 7}, {{4, 8}, {7, 8}}},
        {{1, 8, 3, 5, 7, 4, 6}, {{2, 5}, {2, 6}}},
        {{1, 4, 2, 7, 3, 6, 8, 5}, {{1, 3}, {2, 8}}},
    };
    MultiColoring col(8, 3);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        const Color color = static_cast<Color>(c + 1);
        for (std::size_t i = 0; i < cls.cycle.size(); ++i) {
            col.add_color(cls.cycle[i] - 1, cls.cycle[(i + 1) % cls.cycle.size()] - 1, color);
        }
        for (auto [u, v] : cls.extra) {
            col.add_color(u - 1, v - 1, color);
        }
    }
    return col;
}

MultiColoring blow_up(const BlowupSpec& spec)
{
    const MultiColoring& base = spec.base;
    if (static_cast<int>(spec.sizes.size()) != base.n()) {
        throw InputError("blow-up needs one size per vertex");
    }
    std::vector<Vertex> origin;
    for (Vertex v = 0; v < base.n(); ++v) {
        if (spec.sizes[v] < 1) {
            throw InputError("blow-up sizes must be positive");
        }
        origin.insert(origin.end(), spec.sizes[v], v);
    }
    const int n = static_cast<int>(origin.size());
    MultiColoring out(n, base.t());
    for (Vertex p = 0; p < n; ++p) {
        for (Vertex q = p + 1; q < n; ++q) {
            out.set_colors(p, q, origin[p] == origin[q] ? ColorSet::all(base.t()) : base.colors(origin[p], origin[q]));
        }
    }
    return out;
}

MultiColoring clique_substitute(const MultiColoring& col, Vertex v, int size)
{
    col.check_vertex(v);
    if (size < 1) {
        throw InputError("substituted clique size must be positive");
    }
    std::vector<int> sizes(col.n(), 1);
    sizes[v] = size;
    return blow_up({col, sizes});
}

TIntervalFamily random_interval_family(int n, int t, std::uint64_t seed, const IntervalParams& params)
{
    if (n < 1 || t < 1) {
        throw InputError("random_interval_family needs n, t >= 1");
    }
    Rng rng(seed);
    const int anchors = std::max(params.anchors_per_track, 1);
    std::vector<std::vector<long long>> anchor(t, std::vector<long long>(anchors));
    for (auto& track : anchor) {
        for (auto& a : track) {
            a = rng.uniform(0, params.coord_range);
        }
    }
    TIntervalFamily fam;
    fam.t = t;
    fam.members.assign(n, std::vector<ClosedInterval>(t));
    for (auto& member : fam.members) {
        for (int j = 0; j < t; ++j) {
            if (rng.chance(params.anchor_probability)) {
                long long reach = std::max(params.max_length / 2, 0LL);
                long long at = anchor[j][rng.uniform(0, anchors - 1)];
                member[j] = {at - rng.uniform(0, reach), at + rng.uniform(0, reach)};
            } else {
                long long lo = rng.uniform(0, params.coord_range);
                member[j] = {lo, lo + rng.uniform(0, params.max_length)};
            }
        }
    }
    return fam;
}

TSubtreeFamily random_subtree_family(int n, int t, std::uint64_t seed, const SubtreeParams& params)
{
    if (n < 1 || t < 1 || params.host_size < 1) {
        throw InputError("random_subtree_family needs n, t, host size >= 1");
    }
    Rng rng(seed);
    TSubtreeFamily fam;
    fam.t = t;
    fam.host_size = params.host_size;
    for (int v = 1; v < params.host_size; ++v) {
        fam.host_edges.emplace_back(static_cast<int>(rng.uniform(0, v - 1)), v);
    }
    Graph host = fam.host();
    const int anchors = std::max(params.anchors_per_track, 1);
    std::vector<std::vector<Vertex>> anchor(t, std::vector<Vertex>(anchors));
    for (auto& track : anchor) {
        for (auto& a : track) {
            a = static_cast<Vertex>(rng.uniform(0, params.host_size - 1));
        }
    }
    fam.members.assign(n, std::vector<std::vector<int>>(t));
    for (auto& member : fam.members) {
        for (int j = 0; j < t; ++j) {
            Vertex root = rng.chance(params.anchor_probability)
                              ? anchor[j][rng.uniform(0, anchors - 1)]
                              : static_cast<Vertex>(rng.uniform(0, params.host_size - 1));
            long long target = rng.uniform(1, std::max(params.max_subtree_size, 1));
            VertexSet chosen(params.host_size);
            chosen.set(root);
            VertexSet frontier = host.neighbors(root);
            while (static_cast<long long>(chosen.count()) < target && frontier.any()) {
                VertexList options = to_list(frontier);
                Vertex next = options[rng.uniform(0, static_cast<long long>(options.size()) - 1)];
                chosen.set(next);
                frontier |= host.neighbors(next);
                frontier -= chosen;
            }
            member[j] = to_list(chosen);
        }
    }
    return fam;
}

Sampled<TIntervalFamily> sample_kwise_interval_family(int n, int t, int k, std::uint64_t seed,
                                                      const IntervalParams& params)
{
    Sampled<TIntervalFamily> out;
    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        ++out.attempts;
        TIntervalFamily fam = random_interval_family(n, t, derive_seed(seed, attempt), params);
        if (n < k || is_kwise_intersecting(fam, k).holds) {
            out.family = std::move(fam);
            break;
        }
    }
    return out;
}

Sampled<TSubtreeFamily> sample_kwise_subtree_family(int n, int t, int k, std::uint64_t seed,
                                                    const SubtreeParams& params)
{
    Sampled<TSubtreeFamily> out;
    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        ++out.attempts;
        TSubtreeFamily fam = random_subtree_family(n, t, derive_seed(seed, attempt), params);
        if (n < k || is_kwise_intersecting(fam, k).holds) {
            out.family = std::move(fam);
            break;
        }
    }
    return out;
}

TIntervalFamily shrink_kwise(TIntervalFamily fam, int k, std::uint64_t seed, int attempts)
{
    if (fam.n() < k || !is_kwise_intersecting(fam, k).holds) {
        throw InputError("shrink_kwise needs a k-wise intersecting family");
    }
    Rng rng(seed);
    for (int i = 0; i < attempts; ++i) {
        ClosedInterval& iv = fam.members[rng.uniform(0, fam.n() - 1)][rng.uniform(0, fam.t - 1)];
        if (iv.lo == iv.hi) {
            continue;
        }
        const ClosedInterval old = iv;
        const long long step = rng.uniform(1, iv.hi - iv.lo);
        if (rng.chance(0.5)) {
            iv.lo += step;
        } else {
            iv.hi -= step;
        }
        if (!is_kwise_intersecting(fam, k).holds) {
            iv = old;
        }
    }
    return fam;
}

TSubtreeFamily shrink_kwise(TSubtreeFamily fam, int k, std::uint64_t seed, int attempts)
{
    if (fam.n() < k || !is_kwise_intersecting(fam, k).holds) {
        throw InputError("shrink_kwise needs a k-wise intersecting family");
    }
    const Graph host = fam.host();
    Rng rng(seed);
    for (int i = 0; i < attempts; ++i) {
        std::vector<int>& sub = fam.members[rng.uniform(0, fam.n() - 1)][rng.uniform(0, fam.t - 1)];
        if (sub.size() < 2) {
            continue;
        }
        VertexSet inside = make_vertex_set(host.size(), sub);
        VertexList leaves;
        for (int v : sub) {
            if ((host.neighbors(v) & inside).count() <= 1) {
                leaves.push_back(v);
            }
        }
        const int drop = leaves[rng.uniform(0, static_cast<long long>(leaves.size()) - 1)];
        const std::vector<int> old = sub;
        std::erase(sub, drop);
        if (!is_kwise_intersecting(fam, k).holds) {
            sub = old;
        }
    }
    return fam;
}

MultiColoring random_c4free_22(int n, std::uint64_t seed, bool start_with_k5star)
{
    if (n < 1) {
        throw InputError("random_c4free_22 needs n >= 1");
    }
    Rng rng(seed);
    MultiColoring col(n, 2);
    const ColorSet choices[] = {ColorSet::of({1}), ColorSet::of({2}), ColorSet::of({1, 2})};
    auto c4_free_prefix = [&](int m) {
        VertexList prefix(m);
        std::iota(prefix.begin(), prefix.end(), 0);
        MultiColoring part = col.restrict_to(prefix);
        return chordal::induced_c4_free(color_graph(part, 1)).c4_free &&
               chordal::induced_c4_free(color_graph(part, 2)).c4_free;
    };
    Vertex first = 1;
    if (start_with_k5star && n >= 5) {
        MultiColoring star = construct_k5star();
        for (Vertex u = 0; u < 5; ++u) {
            for (Vertex v = u + 1; v < 5; ++v) {
                col.set_colors(u, v, star.colors(u, v));
            }
        }
        first = 5;
    }
    for (Vertex v = first; v < n; ++v) {
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
            for (Vertex u = 0; u < v; ++u) {
                long long pick = rng.uniform(0, 9);
                col.set_colors(u, v, choices[pick < 4 ? 0 : pick < 8 ? 1 : 2]);
            }
            placed = c4_free_prefix(v + 1);
        }
        if (!placed) {
            // A replica of an earlier vertex never creates an induced C4.
            Vertex twin = static_cast<Vertex>(rng.uniform(0, v - 1));
            for (Vertex u = 0; u < v; ++u) {
                col.set_colors(u, v, u == twin ? ColorSet::all(2) : col.colors(u, twin));
            }
        }
    }
    return col;
}

}  // namespace strongcover::constructions
