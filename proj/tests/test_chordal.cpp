#include <gtest/gtest.h>

#include <algorithm>

#include "strongcover/chordal.hpp"
#include "strongcover/coloring.hpp"
#include "strongcover/constructions.hpp"
#include "strongcover/random.hpp"
#include "support.hpp"

using namespace strongcover;
using namespace strongcover::chordal;
using namespace strongcover::oracle;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) {
                g.add_edge(u, v);
            }
    return g;
}

Graph random_interval_graph(int n, std::uint64_t seed)
{
    auto fam = constructions::random_interval_family(n, 1, seed, {30, 8, 0.0, 1, 1});
    return color_graph(coloring_from_intervals(fam), 1);
}

Graph two_triangles()
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

VertexList peo_of(const Graph& g)
{
    auto cert = is_chordal(g);
    EXPECT_TRUE(cert.chordal());
    return *cert.peo;
}

}  // namespace

TEST(McsOrder, TieBreaking)
{
    EXPECT_EQ(mcs_order(Graph(3)), (VertexList{0, 1, 2}));
    EXPECT_EQ(mcs_order(complete_graph(3)), (VertexList{0, 1, 2}));
    EXPECT_EQ(mcs_order(path_graph(3)), (VertexList{0, 1, 2}));
}

TEST(McsOrder, ReverseIsPeoOnChordalGraphs)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_interval_graph(10, seed);
        VertexList order = mcs_order(g);
        std::reverse(order.begin(), order.end());
        EXPECT_TRUE(is_peo(g, order));
    }
}

TEST(IsChordal, Holes)
{
    auto c4 = is_chordal(cycle_graph(4));
    ASSERT_FALSE(c4.chordal());
    EXPECT_EQ(c4.hole->size(), 4U);
    EXPECT_TRUE(is_hole(cycle_graph(4), *c4.hole));

    auto c5 = is_chordal(cycle_graph(5));
    ASSERT_FALSE(c5.chordal());
    EXPECT_EQ(c5.hole->size(), 5U);
}

TEST(IsChordal, CertificateMatchesEliminationOracle)
{
    int chordal_count = 0;
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        Rng rng(seed);
        const int n = static_cast<int>(rng.uniform(1, 9));
        Graph g = random_graph(n, 0.2 + 0.6 * rng.unit(), derive_seed(seed, 1));
        auto cert = is_chordal(g);
        ASSERT_EQ(cert.chordal(), chordal_by_elimination(g)) << "seed " << seed;
        if (cert.chordal()) {
            ++chordal_count;
            EXPECT_TRUE(is_peo(g, *cert.peo));
        } else {
            EXPECT_TRUE(is_hole(g, *cert.hole));
            EXPECT_GE(cert.hole->size(), 4U);
        }
    }
    EXPECT_GT(chordal_count, 50);
    EXPECT_LT(chordal_count, 550);
}

TEST(IsChordal, IntervalGraphsAreChordal)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        EXPECT_TRUE(is_chordal(random_interval_graph(12, seed)).chordal());
    }
}

TEST(IsPeo, RejectsBadOrders)
{
    Graph c4 = cycle_graph(4);
    VertexList order{0, 1, 2, 3};
    EXPECT_FALSE(is_peo(c4, order));
    VertexList short_order{0, 1};
    EXPECT_THROW(is_peo(c4, short_order), InputError);
}

TEST(MaxCliqueChordal, Examples)
{
    Graph k4 = complete_graph(4);
    EXPECT_EQ(max_clique_chordal(k4, peo_of(k4)).size(), 4U);
    Graph p4 = path_graph(4);
    EXPECT_EQ(max_clique_chordal(p4, peo_of(p4)).size(), 2U);

    MultiColoring col = coloring_from_intervals(constructions::construct_onefourth(3));
    Graph g = color_graph(col, 1);
    VertexList q = max_clique_chordal(g, peo_of(g));
    EXPECT_EQ(q.size(), 4U);
    EXPECT_TRUE(g.is_clique(q));

    VertexList bad{0, 1, 2, 3};
    EXPECT_THROW(max_clique_chordal(cycle_graph(4), bad), InputError);
}

TEST(MaxCliqueChordal, MatchesBruteForce)
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_interval_graph(10, seed);
        VertexList q = max_clique_chordal(g, peo_of(g));
        EXPECT_TRUE(g.is_clique(q));
        EXPECT_EQ(static_cast<int>(q.size()), clique_number(g));
    }
}

TEST(MaximalCliquesChordal, Examples)
{
    Graph k3 = complete_graph(3);
    EXPECT_EQ(maximal_cliques_chordal(k3, peo_of(k3)), (std::vector<VertexList>{{0, 1, 2}}));
    Graph p3 = path_graph(3);
    EXPECT_EQ(maximal_cliques_chordal(p3, peo_of(p3)), (std::vector<VertexList>{{0, 1}, {1, 2}}));

    MultiColoring col = coloring_from_intervals(constructions::construct_onefourth(2));
    Graph g = color_graph(col, 1);
    EXPECT_EQ(maximal_cliques_chordal(g, peo_of(g)), (std::vector<VertexList>{{0, 1}, {2}}));
}

TEST(MaximalCliquesChordal, AgreesWithBronKerbosch)
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_interval_graph(11, seed);
        EXPECT_EQ(maximal_cliques_chordal(g, peo_of(g)), maximal_cliques(g));
    }
}

TEST(MaximalCliques, GeneralGraphsMatchBruteForce)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_graph(8, 0.5, seed);
        std::vector<VertexList> expected;
        auto all = all_cliques(g);
        for (std::uint32_t m : all) {
            bool maximal = true;
            for (Vertex v = 0; v < g.size() && maximal; ++v) {
                if (!(m >> v & 1U) && mask_is_clique(g, m | 1U << v)) {
                    maximal = false;
                }
            }
            if (maximal) {
                VertexList q;
                for (Vertex v = 0; v < g.size(); ++v) {
                    if (m >> v & 1U) {
                        q.push_back(v);
                    }
                }
                expected.push_back(q);
            }
        }
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(maximal_cliques(g), expected) << seed;
    }
}

TEST(GreedyColorChordal, Examples)
{
    Graph empty(4);
    EXPECT_EQ(greedy_color_chordal(empty, peo_of(empty)).size(), 1U);
    Graph k3 = complete_graph(3);
    EXPECT_EQ(greedy_color_chordal(k3, peo_of(k3)).size(), 3U);
    Graph p4 = path_graph(4);
    EXPECT_EQ(greedy_color_chordal(p4, peo_of(p4)).size(), 2U);
}

TEST(GreedyColorChordal, UsesExactlyOmegaColors)
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_interval_graph(12, seed);
        VertexList peo = peo_of(g);
        auto classes = greedy_color_chordal(g, peo);
        EXPECT_EQ(classes.size(), max_clique_chordal(g, peo).size());
        int listed = 0;
        for (const auto& cls : classes) {
            listed += static_cast<int>(cls.size());
            for (std::size_t i = 0; i < cls.size(); ++i)
                for (std::size_t j = i + 1; j < cls.size(); ++j)
                    EXPECT_FALSE(g.adjacent(cls[i], cls[j]));
        }
        EXPECT_EQ(listed, g.size());
    }
}

TEST(CliqueCutset, Examples)
{
    Graph k5 = complete_graph(5);
    EXPECT_FALSE(clique_cutset(k5, peo_of(k5)));

    Graph p3 = path_graph(3);
    auto cut = clique_cutset(p3, peo_of(p3));
    ASSERT_TRUE(cut);
    EXPECT_EQ(cut->q, (VertexList{1}));
    EXPECT_EQ(cut->a.size() + cut->b.size(), 2U);

    Graph tt = two_triangles();
    cut = clique_cutset(tt, peo_of(tt));
    ASSERT_TRUE(cut);
    EXPECT_EQ(cut->q, (VertexList{1, 2}));
}

TEST(CliqueCutset, RejectsBadInput)
{
    Graph split(3);
    split.add_edge(0, 1);
    EXPECT_THROW(clique_cutset(split, peo_of(split)), InputError);
    VertexList order{0, 1, 2, 3};
    EXPECT_THROW(clique_cutset(cycle_graph(4), order), InputError);
}

TEST(CliqueCutset, SeparatesRandomChordalGraphs)
{
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Graph g = random_interval_graph(10, seed);
        if (!g.is_connected()) {
            continue;
        }
        auto cut = clique_cutset(g, peo_of(g));
        if (!cut) {
            EXPECT_TRUE(g.is_complete());
            continue;
        }
        ++checked;
        EXPECT_FALSE(cut->a.empty());
        EXPECT_FALSE(cut->b.empty());
        EXPECT_TRUE(g.is_clique(cut->q));
        EXPECT_EQ(cut->a.size() + cut->q.size() + cut->b.size(), static_cast<std::size_t>(g.size()));
        for (Vertex a : cut->a)
            for (Vertex b : cut->b)
                EXPECT_FALSE(g.adjacent(a, b));
    }
    EXPECT_GT(checked, 20);
}

TEST(InducedC4Free, Examples)
{
    auto c4 = induced_c4_free(cycle_graph(4));
    ASSERT_FALSE(c4.c4_free);
    VertexList w = *c4.witness;
    std::sort(w.begin(), w.end());
    EXPECT_EQ(w, (VertexList{0, 1, 2, 3}));
    EXPECT_TRUE(induced_c4_free(cycle_graph(5)).c4_free);

    MultiColoring k8 = constructions::construct_k8_c4free_3col();
    for (Color c = 1; c <= 3; ++c) {
        EXPECT_TRUE(induced_c4_free(color_graph(k8, c)).c4_free);
    }
}

TEST(InducedC4Free, MatchesFourSubsetScan)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Graph g = random_graph(8, 0.45, seed);
        auto r = induced_c4_free(g);
        ASSERT_EQ(r.c4_free, !has_induced_c4(g)) << seed;
        if (!r.c4_free) {
            const VertexList& q = *r.witness;
            for (int i = 0; i < 4; ++i) {
                EXPECT_TRUE(g.adjacent(q[i], q[(i + 1) % 4]));
            }
            EXPECT_FALSE(g.adjacent(q[0], q[2]));
            EXPECT_FALSE(g.adjacent(q[1], q[3]));
        }
    }
}

TEST(ChordalEdgeBound, Examples)
{
    auto k4 = chordal_edge_bound_check(complete_graph(4));
    EXPECT_EQ(k4.edges, 6);
    EXPECT_EQ(k4.partition_bound, 6);
    EXPECT_TRUE(k4.holds);
    auto none = chordal_edge_bound_check(Graph(5));
    EXPECT_EQ(none.edges, 0);
    EXPECT_TRUE(none.holds);
    EXPECT_THROW(chordal_edge_bound_check(cycle_graph(4)), InputError);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        EXPECT_TRUE(chordal_edge_bound_check(random_interval_graph(12, seed)).holds);
    }
}

TEST(BipartiteForest, BetweenColorClassesOfChordalGraphs)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_interval_graph(12, seed);
        auto classes = greedy_color_chordal(g, peo_of(g));
        for (std::size_t s = 0; s < classes.size(); ++s)
            for (std::size_t z = s + 1; z < classes.size(); ++z)
                EXPECT_TRUE(bipartite_part_is_forest(g, classes[s], classes[z])) << seed;
    }
    VertexList x{0, 2}, y{1, 3};
    EXPECT_FALSE(bipartite_part_is_forest(cycle_graph(4), x, y));
}
