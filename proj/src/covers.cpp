#include "strongcover/covers.hpp"

#include <algorithm>
#include <numeric>

#include "strongcover/chordal.hpp"

namespace strongcover::covers {

namespace {

void require_size(const MultiColoring& col, int max_n)
{
    if (col.n() > max_n) {
        throw SizeLimitExceeded("instance has n=" + std::to_string(col.n()) + " above the exact-search cap " +
                                std::to_string(max_n));
    }
}

void require_tk(const MultiColoring& col, int k, const std::string& what)
{
    SubsetCheck check = is_tk_coloring(col, k);
    if (!check.holds) {
        throw PreconditionError("not a " + what + " coloring", check.witness);
    }
}

std::vector<VertexSet> as_sets(int n, const std::vector<VertexList>& lists)
{
    std::vector<VertexSet> out;
    out.reserve(lists.size());
    for (const auto& l : lists) {
        out.push_back(make_vertex_set(n, l));
    }
    return out;
}

VertexList lift(const VertexList& local, const VertexList& original)
{
    VertexList out;
    out.reserve(local.size());
    for (Vertex v : local) {
        out.push_back(original[v]);
    }
    std::ranges::sort(out);
    return out;
}

bool only_colors(ColorSet edge, ColorSet allowed, ColorSet expected)
{
    return (edge & allowed) == expected;
}

}  // namespace

void require_chordal_colors(const MultiColoring& col)
{
    for (Color c = 1; c <= col.t(); ++c) {
        chordal::ChordalCertificate cert = chordal::is_chordal(color_graph(col, c));
        if (!cert.chordal()) {
            throw NonChordalColor(c, *cert.hole);
        }
    }
}

GreedyResult greedy_strong_cover(const MultiColoring& col, std::span<const Color> order)
{
    std::vector<Color> colors(order.begin(), order.end());
    if (colors.empty()) {
        colors.resize(col.t());
        std::iota(colors.begin(), colors.end(), 1);
    }
    ColorSet seen;
    for (Color c : colors) {
        col.check_color(c);
        if (seen.contains(c)) {
            throw InputError("color order repeats color " + std::to_string(c));
        }
        seen.insert(c);
    }
    require_chordal_colors(col);

    GreedyResult result;
    VertexSet remaining(col.n());
    remaining.set();
    for (Color c : colors) {
        VertexList rest = to_list(remaining);
        Graph g = color_graph(col, c).induced(rest);
        chordal::ChordalCertificate cert = chordal::is_chordal(g);
        VertexList clique = lift(chordal::max_clique_chordal(g, *cert.peo), rest);
        for (Vertex v : clique) {
            remaining.reset(v);
        }
        if (!clique.empty()) {
            result.cover.assignments.push_back({c, clique});
        }
        result.trace.steps.push_back({c, std::move(clique), static_cast<int>(remaining.count())});
    }
    result.trace.uncovered = to_list(remaining);
    return result;
}

long long multiplicity_sum(const MultiColoring& col, std::span<const Vertex> vertices)
{
    long long total = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            total += col.colors(vertices[i], vertices[j]).size();
        }
    }
    return total;
}

CountingChain counting_chain(const MultiColoring& col, const GreedyTrace& trace, int k)
{
    const long long rest = static_cast<long long>(trace.uncovered.size());
    const long long covered = col.n() - rest;
    CountingChain chain;
    chain.multiplicity = multiplicity_sum(col, trace.uncovered);
    chain.lower = (k - 1) * rest * (rest - 1) / 2;
    chain.upper = covered * std::max(rest - 1, 0LL);
    chain.holds = chain.lower <= chain.multiplicity && chain.multiplicity <= chain.upper;
    return chain;
}

ResidualCheck check_residual_multiplicity(const MultiColoring& col, std::span<const Vertex> vertices, int k)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (col.colors(vertices[i], vertices[j]).size() < k - 1) {
                return {false, std::pair{vertices[i], vertices[j]}};
            }
        }
    }
    return {};
}

std::vector<VertexList> color_maximal_cliques(const MultiColoring& col, Color c)
{
    Graph g = color_graph(col, c);
    chordal::ChordalCertificate cert = chordal::is_chordal(g);
    if (cert.chordal()) {
        return chordal::maximal_cliques_chordal(g, *cert.peo);
    }
    return chordal::maximal_cliques(g);
}

StrongCover exact_max_strong_cover(const MultiColoring& col, int max_n)
{
    require_size(col, max_n);
    const int n = col.n();
    const int t = col.t();
    std::vector<std::vector<VertexSet>> options(t);
    for (Color c = 1; c <= t; ++c) {
        options[c - 1] = as_sets(n, color_maximal_cliques(col, c));
    }

    std::vector<int> choice(t, -1);
    std::vector<int> best_choice(t, -1);
    std::size_t best = 0;

    // Options per color: its maximal cliques in lexicographic order, then none.
    // Only strict improvements replace the incumbent, so the first optimum in
    // this order wins.
    auto search = [&](auto&& self, int ci, const VertexSet& covered) -> void {
        if (best == static_cast<std::size_t>(n)) {
            return;
        }
        std::size_t have = covered.count();
        if (ci == t) {
            if (have > best) {
                best = have;
                best_choice = choice;
            }
            return;
        }
        std::size_t bound = have;
        for (int c = ci; c < t; ++c) {
            std::size_t gain = 0;
            for (const auto& opt : options[c]) {
                gain = std::max(gain, (opt - covered).count());
            }
            bound += gain;
        }
        if (std::min<std::size_t>(bound, n) <= best) {
            return;
        }
        for (std::size_t o = 0; o < options[ci].size(); ++o) {
            if (options[ci][o].is_subset_of(covered)) {
                continue;
            }
            choice[ci] = static_cast<int>(o);
            self(self, ci + 1, covered | options[ci][o]);
        }
        choice[ci] = -1;
        self(self, ci + 1, covered);
    };
    search(search, 0, VertexSet(n));

    StrongCover cover;
    for (int c = 0; c < t; ++c) {
        if (best_choice[c] >= 0) {
            cover.assignments.push_back({c + 1, to_list(options[c][best_choice[c]])});
        }
    }
    return cover;
}

std::optional<int> theta(const MultiColoring& col, int max_n)
{
    require_size(col, max_n);
    const int n = col.n();
    const int t = col.t();
    if (n == 0) {
        return 0;
    }
    std::vector<std::vector<VertexSet>> options(t);
    std::size_t largest = 0;
    for (Color c = 1; c <= t; ++c) {
        options[c - 1] = as_sets(n, color_maximal_cliques(col, c));
        for (const auto& o : options[c - 1]) {
            largest = std::max(largest, o.count());
        }
    }

    auto covers_all = [&](auto&& self, int next_color, int budget, const VertexSet& covered) -> bool {
        if (covered.all()) {
            return true;
        }
        std::size_t missing = n - covered.count();
        if (budget == 0 || missing > static_cast<std::size_t>(budget) * largest) {
            return false;
        }
        for (int c = next_color; c < t; ++c) {
            for (const auto& opt : options[c]) {
                if (!opt.is_subset_of(covered) && self(self, c + 1, budget - 1, covered | opt)) {
                    return true;
                }
            }
        }
        return false;
    };
    for (int s = 1; s <= t; ++s) {
        if (covers_all(covers_all, 0, s, VertexSet(n))) {
            return s;
        }
    }
    return std::nullopt;
}

std::optional<StrongCover> two_clique_cover_exact(const MultiColoring& col, Color first, Color second, int max_n)
{
    require_size(col, max_n);
    col.check_color(first);
    col.check_color(second);
    if (first == second) {
        throw InputError("two_clique_cover_exact needs two distinct colors");
    }
    const int n = col.n();
    if (n == 0) {
        return StrongCover{};
    }
    Graph other = color_graph(col, second);
    VertexSet all(n);
    all.set();
    for (const auto& clique : color_maximal_cliques(col, first)) {
        VertexSet rest = all - make_vertex_set(n, clique);
        if (rest.none()) {
            return StrongCover{{{first, clique}}};
        }
        if (other.is_clique(rest)) {
            return StrongCover{{{first, clique}, {second, to_list(rest)}}};
        }
    }
    return std::nullopt;
}

StrongCover strong_cover_33(const MultiColoring& col)
{
    if (col.t() != 3) {
        throw PreconditionError("strong_cover_33 needs exactly three colors");
    }
    if (col.n() < 3) {
        throw PreconditionError("strong_cover_33 needs at least three vertices");
    }
    require_chordal_colors(col);
    require_tk(col, 3, "(3,3)");
    const int n = col.n();

    auto pair_cover = [&](const MultiColoring& part, Color a, Color b) {
        auto cover = two_clique_cover_exact(part, a, b, std::max(part.n(), kDefaultMaxExact));
        if (!cover) {
            throw TheoremViolation("chordal (2,2)-coloring without a two-clique strong cover", part);
        }
        return *cover;
    };

    Color c1 = 0;
    for (Color j = 1; j <= 3 && c1 == 0; ++j) {
        for (Vertex u = 0; u < n && c1 == 0; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (col.colors(u, v) == ColorSet::of({j})) {
                    c1 = j;
                    break;
                }
            }
        }
    }
    const Color designated = c1 == 0 ? 1 : c1;
    std::vector<Color> others;
    for (Color j = 1; j <= 3; ++j) {
        if (j != designated) {
            others.push_back(j);
        }
    }

    Graph g1 = color_graph(col, designated);
    if (c1 == 0 || !g1.is_connected()) {
        return pair_cover(col, others[0], others[1]);
    }
    if (g1.is_complete()) {
        return StrongCover{{{designated, to_list(g1.all_vertices())}}};
    }
    chordal::ChordalCertificate cert = chordal::is_chordal(g1);
    auto cut = chordal::clique_cutset(g1, *cert.peo);
    VertexList outside = cut->a;
    outside.insert(outside.end(), cut->b.begin(), cut->b.end());
    std::ranges::sort(outside);

    StrongCover local = pair_cover(col.restrict_to(outside), others[0], others[1]);
    StrongCover cover;
    for (const auto& a : local.assignments) {
        cover.assignments.push_back({a.color, lift(a.vertices, outside)});
    }
    cover.assignments.push_back({designated, cut->q});
    std::ranges::sort(cover.assignments, {}, &CliqueAssignment::color);
    return cover;
}

StrongCover strong_cover_tt(const MultiColoring& col)
{
    const int t = col.t();
    if (t < 2) {
        throw PreconditionError("strong_cover_tt needs at least two colors");
    }
    if (col.n() < t) {
        throw PreconditionError("strong_cover_tt needs n >= t");
    }
    require_chordal_colors(col);
    require_tk(col, t, "(t,t)");
    const int n = col.n();

    auto pair_covers_edges = [&](Color a, Color b) {
        ColorSet pair = ColorSet::of({a, b});
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if ((col.colors(u, v) & pair).empty()) {
                    return false;
                }
            }
        }
        return true;
    };

    for (Color a = 1; a <= t; ++a) {
        for (Color b = a + 1; b <= t; ++b) {
            if (!pair_covers_edges(a, b)) {
                continue;
            }
            auto cover = two_clique_cover_exact(col, a, b, std::max(n, kDefaultMaxExact));
            if (!cover) {
                throw TheoremViolation("chordal (2,2)-coloring without a two-clique strong cover",
                                       col.project_colors(std::vector<Color>{a, b}));
            }
            return *cover;
        }
    }
    if (t % 2 == 0) {
        throw TheoremViolation("chordal (t,t)-coloring with even t and no color pair covering all edges", col);
    }
    for (Color a = 1; a <= t; ++a) {
        for (Color b = a + 1; b <= t; ++b) {
            for (Color c = b + 1; c <= t; ++c) {
                std::vector<Color> palette{a, b, c};
                MultiColoring triple = col.project_colors(palette);
                if (!is_tk_coloring(triple, 3).holds) {
                    continue;
                }
                StrongCover local = strong_cover_33(triple);
                for (auto& asg : local.assignments) {
                    asg.color = palette[asg.color - 1];
                }
                return local;
            }
        }
    }
    throw TheoremViolation("chordal (t,t)-coloring with odd t and no (3,3) color triple", col);
}

std::optional<K5Star> find_k5star(const MultiColoring& col, Color red, Color blue)
{
    col.check_color(red);
    col.check_color(blue);
    const int n = col.n();
    const ColorSet both = ColorSet::of({red, blue});
    const ColorSet red_only = ColorSet::of({red});
    const ColorSet blue_only = ColorSet::of({blue});

    VertexList chosen;
    std::vector<int> red_degree(n, 0);
    std::vector<int> blue_degree(n, 0);
    std::optional<VertexList> found;

    auto search = [&](auto&& self, Vertex start) -> bool {
        if (chosen.size() == 5) {
            found = chosen;
            return true;
        }
        for (Vertex v = start; v <= n - (5 - static_cast<int>(chosen.size())); ++v) {
            bool ok = true;
            int r = 0;
            int b = 0;
            for (Vertex u : chosen) {
                ColorSet e = col.colors(u, v) & both;
                if (e == red_only) {
                    ok = ok && red_degree[u] < 2;
                    ++r;
                } else if (e == blue_only) {
                    ok = ok && blue_degree[u] < 2;
                    ++b;
                } else {
                    ok = false;
                }
            }
            if (!ok || r > 2 || b > 2) {
                continue;
            }
            for (Vertex u : chosen) {
                ColorSet e = col.colors(u, v) & both;
                (e == red_only ? red_degree : blue_degree)[u]++;
            }
            red_degree[v] = r;
            blue_degree[v] = b;
            chosen.push_back(v);
            if (self(self, v + 1)) {
                return true;
            }
            chosen.pop_back();
            for (Vertex u : chosen) {
                ColorSet e = col.colors(u, v) & both;
                (e == red_only ? red_degree : blue_degree)[u]--;
            }
        }
        return false;
    };
    // Five vertices with all red and blue degrees equal to 2 form two
    // complementary 5-cycles.
    if (n < 5 || !search(search, 0)) {
        return std::nullopt;
    }

    K5Star cycle{};
    cycle[0] = (*found)[0];
    for (int i = 1; i < 5; ++i) {
        Vertex prev = cycle[i - 1];
        Vertex pick = -1;
        for (Vertex w : *found) {
            bool used = std::find(cycle.begin(), cycle.begin() + i, w) != cycle.begin() + i;
            if (!used && (col.colors(prev, w) & both) == red_only) {
                pick = w;
                break;
            }
        }
        cycle[i] = pick;
    }
    return cycle;
}

namespace {

// Expected {red, blue} restriction between classes i and j of the blow-up.
ColorSet expected_between(int i, int j, ColorSet red, ColorSet blue)
{
    int d = ((j - i) % 5 + 5) % 5;
    if (d == 0) {
        return red | blue;
    }
    return (d == 1 || d == 4) ? red : blue;
}

bool is_replica_of(const MultiColoring& col, const BlowupParts& parts, Vertex w, int cls, ColorSet red, ColorSet blue)
{
    const ColorSet both = red | blue;
    for (int j = 0; j < 5; ++j) {
        ColorSet want = expected_between(cls, j, red, blue);
        for (Vertex x : parts[j]) {
            if (!only_colors(col.colors(w, x), both, want)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

BlowupParts grow_blowup(const MultiColoring& col, const K5Star& seed, Color red, Color blue)
{
    col.check_color(red);
    col.check_color(blue);
    const ColorSet r = ColorSet::of({red});
    const ColorSet b = ColorSet::of({blue});
    for (int i = 0; i < 5; ++i) {
        col.check_vertex(seed[i]);
        for (int j = i + 1; j < 5; ++j) {
            if (seed[i] == seed[j] || !only_colors(col.colors(seed[i], seed[j]), r | b, expected_between(i, j, r, b))) {
                throw InputError("seed is not a K5* listed along its red cycle");
            }
        }
    }
    BlowupParts parts;
    VertexSet inside(col.n());
    for (int i = 0; i < 5; ++i) {
        parts[i] = {seed[i]};
        inside.set(seed[i]);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex w = 0; w < col.n() && !grew; ++w) {
            if (inside.test(w)) {
                continue;
            }
            for (int i = 0; i < 5; ++i) {
                if (is_replica_of(col, parts, w, i, r, b)) {
                    parts[i].push_back(w);
                    inside.set(w);
                    grew = true;
                    break;
                }
            }
        }
    }
    for (auto& p : parts) {
        std::ranges::sort(p);
    }
    return parts;
}

StrongCover strong_cover_c4free_22(const MultiColoring& col)
{
    if (col.t() != 2) {
        throw PreconditionError("strong_cover_c4free_22 needs exactly two colors");
    }
    const int n = col.n();
    if (n >= 2 && kfold_min_colors(col) < 1) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (col.colors(u, v).empty()) {
                    throw PreconditionError("uncolored edge", VertexList{u, v});
                }
            }
        }
    }
    for (Color c = 1; c <= 2; ++c) {
        chordal::C4Check check = chordal::induced_c4_free(color_graph(col, c));
        if (!check.c4_free) {
            throw PreconditionError("color " + std::to_string(c) + " has an induced C4", check.witness);
        }
    }

    auto seed = find_k5star(col, 1, 2);
    if (!seed) {
        auto cover = two_clique_cover_exact(col, 1, 2, std::max(n, kDefaultMaxExact));
        if (!cover) {
            throw TheoremViolation("C4-free (2,2)-coloring without K5* and without a two-clique strong cover", col);
        }
        return *cover;
    }

    BlowupParts parts = grow_blowup(col, *seed, 1, 2);
    VertexSet inside(n);
    for (const auto& p : parts) {
        for (Vertex v : p) {
            inside.set(v);
        }
    }
    VertexList reds;
    VertexList blues;
    for (Vertex w = 0; w < n; ++w) {
        if (inside.test(w)) {
            continue;
        }
        ColorSet common = ColorSet::all(2);
        for (auto x = inside.find_first(); x != VertexSet::npos; x = inside.find_next(x)) {
            common = common & col.colors(w, static_cast<Vertex>(x));
        }
        if (common.contains(1)) {
            reds.push_back(w);
        } else if (common.contains(2)) {
            blues.push_back(w);
        } else {
            throw TheoremViolation("vertex outside a maximal K5* blow-up has no common color towards it", col);
        }
    }
    if (!color_graph(col, 1).is_clique(reds) || !color_graph(col, 2).is_clique(blues)) {
        throw TheoremViolation("vertices joined to the K5* blow-up in one color do not form a clique of it", col);
    }

    int smallest = 0;
    for (int i = 1; i < 5; ++i) {
        if (parts[i].size() < parts[smallest].size()) {
            smallest = i;
        }
    }
    auto part = [&](int offset) -> const VertexList& { return parts[(smallest + offset) % 5]; };
    VertexList red_clique = reds;
    red_clique.insert(red_clique.end(), part(2).begin(), part(2).end());
    red_clique.insert(red_clique.end(), part(3).begin(), part(3).end());
    VertexList blue_clique = blues;
    blue_clique.insert(blue_clique.end(), part(1).begin(), part(1).end());
    blue_clique.insert(blue_clique.end(), part(4).begin(), part(4).end());
    std::ranges::sort(red_clique);
    std::ranges::sort(blue_clique);
    return StrongCover{{{1, red_clique}, {2, blue_clique}}};
}

}  // namespace strongcover::covers
