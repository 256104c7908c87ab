#include "strongcover/coloring.hpp"

#include <limits>
#include <set>

namespace strongcover {

namespace {

void check_k(int n, int k)
{
    if (k < 2) {
        throw InputError("k must be at least 2");
    }
    if (k > n) {
        throw InputError("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    }
}

// Depth-first walk over k-subsets in lexicographic order. `step` folds one more
// vertex into the running state; `alive` says whether some witness for the
// k-subset property survives. A prefix whose state is dead makes every
// completion violating, and its first completion is the lexicographically
// first violating subset overall.
template <class State, class Step, class Alive>
SubsetCheck first_violating_subset(int n, int k, const State& init, Step step, Alive alive)
{
    VertexList prefix;
    prefix.reserve(k);
    SubsetCheck result;

    auto recurse = [&](auto&& self, Vertex start, const State& state) -> bool {
        const int depth = static_cast<int>(prefix.size());
        for (Vertex v = start; v <= n - (k - depth); ++v) {
            State next = step(state, prefix, v);
            prefix.push_back(v);
            if (!alive(next)) {
                for (Vertex w = v + 1; static_cast<int>(prefix.size()) < k; ++w) {
                    prefix.push_back(w);
                }
                result.holds = false;
                result.witness = prefix;
                return true;
            }
            if (depth + 1 < k && self(self, v + 1, next)) {
                return true;
            }
            prefix.pop_back();
        }
        return false;
    };
    recurse(recurse, 0, init);
    return result;
}

}  // namespace

ColorSet ColorSet::all(int t)
{
    if (t < 0 || t > kMaxColors) {
        throw InputError("color count out of range");
    }
    return ColorSet(t == kMaxColors ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1);
}

ColorSet ColorSet::of(std::initializer_list<Color> colors)
{
    ColorSet s;
    for (Color c : colors) {
        s.insert(c);
    }
    return s;
}

std::vector<Color> ColorSet::colors() const
{
    std::vector<Color> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(std::countr_zero(m) + 1);
    }
    return out;
}

MultiColoring::MultiColoring(int n, int t) : n_(n), t_(t)
{
    if (n < 0) {
        throw InputError("negative vertex count");
    }
    if (t < 1 || t > kMaxColors) {
        throw InputError("color count must be in 1.." + std::to_string(kMaxColors));
    }
    edges_.assign(static_cast<std::size_t>(n) * n, ColorSet{});
}

MultiColoring MultiColoring::all_colors(int n, int t)
{
    MultiColoring col(n, t);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            col.set_colors(u, v, ColorSet::all(t));
        }
    }
    return col;
}

void MultiColoring::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
    }
}

void MultiColoring::check_color(Color c) const
{
    if (c < 1 || c > t_) {
        throw InputError("color " + std::to_string(c) + " out of range 1.." + std::to_string(t_));
    }
}

ColorSet MultiColoring::colors(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        return {};
    }
    return edges_[index(u, v)];
}

void MultiColoring::set_colors(Vertex u, Vertex v, ColorSet c)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw InputError("self-loop on vertex " + std::to_string(u));
    }
    if ((c.mask() & ~ColorSet::all(t_).mask()) != 0) {
        throw InputError("edge color outside 1.." + std::to_string(t_));
    }
    edges_[index(u, v)] = c;
    edges_[index(v, u)] = c;
}

void MultiColoring::add_color(Vertex u, Vertex v, Color c)
{
    check_color(c);
    ColorSet s = colors(u, v);
    s.insert(c);
    set_colors(u, v, s);
}

MultiColoring MultiColoring::restrict_to(std::span<const Vertex> keep) const
{
    VertexList order = to_list(make_vertex_set(n_, keep));
    MultiColoring out(static_cast<int>(order.size()), t_);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            out.set_colors(static_cast<Vertex>(i), static_cast<Vertex>(j), colors(order[i], order[j]));
        }
    }
    return out;
}

MultiColoring MultiColoring::project_colors(std::span<const Color> palette) const
{
    std::set<Color> seen;
    for (Color c : palette) {
        check_color(c);
        if (!seen.insert(c).second) {
            throw InputError("repeated color in palette");
        }
    }
    MultiColoring out(n_, static_cast<int>(palette.size()));
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            ColorSet src = colors(u, v);
            ColorSet dst;
            for (std::size_t i = 0; i < palette.size(); ++i) {
                if (src.contains(palette[i])) {
                    dst.insert(static_cast<Color>(i + 1));
                }
            }
            out.set_colors(u, v, dst);
        }
    }
    return out;
}

Graph color_graph(const MultiColoring& col, Color i)
{
    col.check_color(i);
    Graph g(col.n());
    for (Vertex u = 0; u < col.n(); ++u) {
        for (Vertex v = u + 1; v < col.n(); ++v) {
            if (col.has_color(u, v, i)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

void TIntervalFamily::validate() const
{
    if (t < 1 || t > kMaxColors) {
        throw InputError("track count must be in 1.." + std::to_string(kMaxColors));
    }
    for (std::size_t m = 0; m < members.size(); ++m) {
        if (static_cast<int>(members[m].size()) != t) {
            throw InputError("member " + std::to_string(m) + " does not have exactly t intervals");
        }
        for (const auto& iv : members[m]) {
            if (iv.lo > iv.hi) {
                throw InputError("member " + std::to_string(m) + " has an interval with lo > hi");
            }
        }
    }
}

Graph TSubtreeFamily::host() const
{
    Graph g(host_size);
    for (auto [a, b] : host_edges) {
        g.add_edge(a, b);
    }
    return g;
}

void TSubtreeFamily::validate() const
{
    if (t < 1 || t > kMaxColors) {
        throw InputError("track count must be in 1.." + std::to_string(kMaxColors));
    }
    if (host_size < 1) {
        throw InputError("host tree needs at least one vertex");
    }
    Graph g = host();
    if (static_cast<int>(host_edges.size()) != host_size - 1 || g.edge_count() != host_size - 1 ||
        !g.is_connected()) {
        throw InputError("host is not a tree");
    }
    for (std::size_t m = 0; m < members.size(); ++m) {
        if (static_cast<int>(members[m].size()) != t) {
            throw InputError("member " + std::to_string(m) + " does not have exactly t subtrees");
        }
        for (const auto& sub : members[m]) {
            if (sub.empty()) {
                throw InputError("member " + std::to_string(m) + " has an empty subtree");
            }
            VertexSet s = make_vertex_set(host_size, sub);
            VertexList vs = to_list(s);
            if (!g.induced(vs).is_connected()) {
                throw InputError("member " + std::to_string(m) + " has a disconnected subtree");
            }
        }
    }
}

VertexSet StrongCover::covered_set(int n) const
{
    VertexSet s(n);
    for (const auto& a : assignments) {
        s |= make_vertex_set(n, a.vertices);
    }
    return s;
}

MultiColoring coloring_from_intervals(const TIntervalFamily& fam)
{
    fam.validate();
    MultiColoring col(fam.n(), fam.t);
    for (Vertex u = 0; u < fam.n(); ++u) {
        for (Vertex v = u + 1; v < fam.n(); ++v) {
            ColorSet c;
            for (int j = 0; j < fam.t; ++j) {
                if (intersects(fam.members[u][j], fam.members[v][j])) {
                    c.insert(j + 1);
                }
            }
            col.set_colors(u, v, c);
        }
    }
    return col;
}

namespace {

std::vector<std::vector<VertexSet>> subtree_sets(const TSubtreeFamily& fam)
{
    std::vector<std::vector<VertexSet>> sets(fam.n());
    for (int m = 0; m < fam.n(); ++m) {
        for (int j = 0; j < fam.t; ++j) {
            sets[m].push_back(make_vertex_set(fam.host_size, fam.members[m][j]));
        }
    }
    return sets;
}

}  // namespace

MultiColoring coloring_from_subtrees(const TSubtreeFamily& fam)
{
    fam.validate();
    auto sets = subtree_sets(fam);
    MultiColoring col(fam.n(), fam.t);
    for (Vertex u = 0; u < fam.n(); ++u) {
        for (Vertex v = u + 1; v < fam.n(); ++v) {
            ColorSet c;
            for (int j = 0; j < fam.t; ++j) {
                if (sets[u][j].intersects(sets[v][j])) {
                    c.insert(j + 1);
                }
            }
            col.set_colors(u, v, c);
        }
    }
    return col;
}

SubsetCheck is_tk_coloring(const MultiColoring& col, int k)
{
    check_k(col.n(), k);
    auto step = [&](ColorSet mask, const VertexList& prefix, Vertex v) {
        for (Vertex u : prefix) {
            mask = mask & col.colors(u, v);
        }
        return mask;
    };
    auto alive = [](ColorSet mask) { return !mask.empty(); };
    return first_violating_subset(col.n(), k, ColorSet::all(col.t()), step, alive);
}

SubsetCheck is_kwise_intersecting(const TIntervalFamily& fam, int k)
{
    fam.validate();
    check_k(fam.n(), k);
    using State = std::vector<ClosedInterval>;  // running common part per track
    State init(fam.t, ClosedInterval{std::numeric_limits<long long>::min(), std::numeric_limits<long long>::max()});
    auto step = [&](State common, const VertexList&, Vertex v) {
        for (int j = 0; j < fam.t; ++j) {
            common[j].lo = std::max(common[j].lo, fam.members[v][j].lo);
            common[j].hi = std::min(common[j].hi, fam.members[v][j].hi);
        }
        return common;
    };
    auto alive = [](const State& common) {
        return std::ranges::any_of(common, [](const ClosedInterval& c) { return c.lo <= c.hi; });
    };
    return first_violating_subset(fam.n(), k, init, step, alive);
}

SubsetCheck is_kwise_intersecting(const TSubtreeFamily& fam, int k)
{
    fam.validate();
    check_k(fam.n(), k);
    auto sets = subtree_sets(fam);
    using State = std::vector<VertexSet>;
    VertexSet full(fam.host_size);
    full.set();
    State init(fam.t, full);
    auto step = [&](State common, const VertexList&, Vertex v) {
        for (int j = 0; j < fam.t; ++j) {
            common[j] &= sets[v][j];
        }
        return common;
    };
    auto alive = [](const State& common) {
        return std::ranges::any_of(common, [](const VertexSet& s) { return s.any(); });
    };
    return first_violating_subset(fam.n(), k, init, step, alive);
}

int kfold_min_colors(const MultiColoring& col)
{
    if (col.n() < 2) {
        throw InputError("kfold_min_colors needs at least two vertices");
    }
    int best = col.t();
    for (Vertex u = 0; u < col.n(); ++u) {
        for (Vertex v = u + 1; v < col.n(); ++v) {
            best = std::min(best, col.colors(u, v).size());
        }
    }
    return best;
}

CoverReport verify_cover(const MultiColoring& col, const StrongCover& cov)
{
    CoverReport report;
    ColorSet used;
    for (const auto& a : cov.assignments) {
        col.check_color(a.color);
        VertexSet members = make_vertex_set(col.n(), a.vertices);
        if (used.contains(a.color) && report.valid) {
            report.valid = false;
            report.reason = "color " + std::to_string(a.color) + " used twice";
        }
        used.insert(a.color);
        if (report.valid && !color_graph(col, a.color).is_clique(members)) {
            report.valid = false;
            report.reason = "vertices assigned to color " + std::to_string(a.color) + " are not a clique";
        }
    }
    report.covered = static_cast<int>(cov.covered_set(col.n()).count());
    return report;
}

std::vector<PiercingPoint> piercing_points(const TIntervalFamily& fam, const StrongCover& cov)
{
    CoverReport check = verify_cover(coloring_from_intervals(fam), cov);
    if (!check.valid) {
        throw InputError("invalid cover: " + check.reason);
    }
    std::vector<PiercingPoint> points;
    for (const auto& a : cov.assignments) {
        if (a.vertices.empty()) {
            continue;
        }
        long long p = std::numeric_limits<long long>::min();
        for (Vertex v : a.vertices) {
            p = std::max(p, fam.members[v][a.color - 1].lo);
        }
        points.push_back({a.color, p});
    }
    return points;
}

}  // namespace strongcover
