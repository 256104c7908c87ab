#include <gtest/gtest.h>

#include "strongcover/coloring.hpp"
#include "strongcover/constructions.hpp"
#include "strongcover/random.hpp"
#include "support.hpp"

using namespace strongcover;
using namespace strongcover::constructions;
using strongcover::oracle::naive_is_tk;

TEST(Graph, BasicQueries)
{
    Graph g = strongcover::oracle::path_graph(4);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_EQ(g.degree(1), 2);
    EXPECT_TRUE(g.is_connected());
    EXPECT_FALSE(g.is_complete());
    VertexList edge{1, 2};
    EXPECT_TRUE(g.is_clique(edge));
    EXPECT_THROW(g.add_edge(0, 0), InputError);
    EXPECT_THROW(g.add_edge(0, 9), InputError);
}

TEST(Graph, InducedRelabelsInOrder)
{
    Graph g = strongcover::oracle::cycle_graph(5);
    VertexList keep{4, 0, 1};
    Graph h = g.induced(keep);
    ASSERT_EQ(h.size(), 3);
    EXPECT_TRUE(h.adjacent(0, 1));
    EXPECT_TRUE(h.adjacent(0, 2));
    EXPECT_FALSE(h.adjacent(1, 2));
}

TEST(Graph, ShortestPathRespectsAllowedSet)
{
    Graph g = strongcover::oracle::cycle_graph(6);
    VertexSet allowed = g.all_vertices();
    EXPECT_EQ(g.shortest_path(0, 2, allowed), (VertexList{0, 1, 2}));
    allowed.reset(1);
    EXPECT_EQ(g.shortest_path(0, 2, allowed), (VertexList{0, 5, 4, 3, 2}));
    allowed.reset(4);
    EXPECT_TRUE(g.shortest_path(0, 2, allowed).empty());
}

TEST(ColorSet, Operations)
{
    ColorSet s = ColorSet::of({1, 3});
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.size(), 2);
    EXPECT_EQ((s | ColorSet::of({2})).size(), 3);
    EXPECT_EQ((s & ColorSet::of({3, 4})), ColorSet::of({3}));
    EXPECT_EQ(ColorSet::all(4).colors(), (std::vector<Color>{1, 2, 3, 4}));
}

TEST(MultiColoring, RangeChecks)
{
    MultiColoring col(3, 2);
    EXPECT_THROW(col.add_color(0, 1, 3), InputError);
    EXPECT_THROW(col.add_color(0, 1, 0), InputError);
    EXPECT_THROW(col.add_color(0, 3, 1), InputError);
    EXPECT_THROW(col.add_color(1, 1, 1), InputError);
    EXPECT_THROW(color_graph(col, 3), InputError);
    col.add_color(2, 0, 2);
    EXPECT_TRUE(col.has_color(0, 2, 2));
}

TEST(MultiColoring, ProjectAndRestrict)
{
    MultiColoring col = MultiColoring::all_colors(4, 3);
    col.set_colors(0, 1, ColorSet::of({2}));
    std::vector<Color> palette{2, 3};
    MultiColoring p = col.project_colors(palette);
    EXPECT_EQ(p.t(), 2);
    EXPECT_EQ(p.colors(0, 1), ColorSet::of({1}));
    VertexList keep{1, 0};
    MultiColoring r = col.restrict_to(keep);
    EXPECT_EQ(r.n(), 2);
    EXPECT_EQ(r.colors(0, 1), ColorSet::of({2}));
}

TEST(ColoringFromIntervals, SharedEndpointCounts)
{
    TIntervalFamily fam{1, {{{0, 1}}, {{1, 2}}}};
    EXPECT_EQ(coloring_from_intervals(fam).colors(0, 1), ColorSet::of({1}));
}

TEST(ColoringFromIntervals, DisjointVersusNested)
{
    TIntervalFamily fam{2, {{{0, 1}, {0, 5}}, {{2, 3}, {1, 2}}}};
    EXPECT_EQ(coloring_from_intervals(fam).colors(0, 1), ColorSet::of({2}));
}

TEST(ColoringFromIntervals, OneFourthHasPathColors)
{
    MultiColoring col = coloring_from_intervals(construct_onefourth(3));
    EXPECT_EQ(col.n(), 7);
    for (Color c = 2; c <= 3; ++c) {
        Graph g = color_graph(col, c);
        EXPECT_EQ(g.edge_count(), 6);
        for (Vertex v = 0; v < g.size(); ++v) {
            EXPECT_LE(g.degree(v), 2);
        }
    }
}

TEST(ColoringFromIntervals, RejectsMalformedFamilies)
{
    TIntervalFamily wrong_tracks{2, {{{0, 1}}}};
    EXPECT_THROW(coloring_from_intervals(wrong_tracks), InputError);
    TIntervalFamily reversed{1, {{{3, 1}}}};
    EXPECT_THROW(coloring_from_intervals(reversed), InputError);
}

TEST(ColoringFromSubtrees, SingleVertexHost)
{
    TSubtreeFamily fam{1, {}, 2, {{{0}, {0}}, {{0}, {0}}, {{0}, {0}}}};
    MultiColoring col = coloring_from_subtrees(fam);
    EXPECT_EQ(col, MultiColoring::all_colors(3, 2));
}

TEST(ColoringFromSubtrees, PathHost)
{
    TSubtreeFamily sharing{3, {{0, 1}, {1, 2}}, 1, {{{0, 1}}, {{1, 2}}}};
    EXPECT_TRUE(coloring_from_subtrees(sharing).has_color(0, 1, 1));
    TSubtreeFamily apart{3, {{0, 1}, {1, 2}}, 1, {{{0}}, {{2}}}};
    EXPECT_FALSE(coloring_from_subtrees(apart).has_color(0, 1, 1));
}

TEST(ColoringFromSubtrees, DisconnectedSubtreeRejected)
{
    TSubtreeFamily fam{3, {{0, 1}, {1, 2}}, 1, {{{0, 2}}, {{1}}}};
    EXPECT_THROW(coloring_from_subtrees(fam), InputError);
    TSubtreeFamily cyclic{3, {{0, 1}, {1, 2}, {2, 0}}, 1, {{{0}}}};
    EXPECT_THROW(coloring_from_subtrees(cyclic), InputError);
}

TEST(IsTkColoring, K5Star)
{
    MultiColoring star = construct_k5star();
    EXPECT_TRUE(is_tk_coloring(star, 2).holds);
    SubsetCheck three = is_tk_coloring(star, 3);
    EXPECT_FALSE(three.holds);
    ASSERT_TRUE(three.witness);
    EXPECT_EQ(three.witness->size(), 3U);
    EXPECT_TRUE(is_tk_coloring(coloring_from_intervals(construct_onefourth(3)), 2).holds);
}

TEST(IsTkColoring, KOutOfRange)
{
    MultiColoring star = construct_k5star();
    EXPECT_THROW(is_tk_coloring(star, 6), InputError);
    EXPECT_THROW(is_tk_coloring(star, 1), InputError);
}

TEST(IsTkColoring, AgreesWithSubsetScan)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const int n = static_cast<int>(rng.uniform(3, 8));
        MultiColoring col(n, 3);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                col.set_colors(u, v, ColorSet::from_mask(rng.uniform(0, 7)));
        for (int k = 2; k <= n; ++k) {
            SubsetCheck r = is_tk_coloring(col, k);
            EXPECT_EQ(r.holds, naive_is_tk(col, k)) << "seed " << seed << " k " << k;
            if (!r.holds) {
                EXPECT_EQ(r.witness->size(), static_cast<std::size_t>(k));
            }
        }
    }
}

TEST(IsKwiseIntersecting, IntervalExamples)
{
    TIntervalFamily same{2, std::vector<std::vector<ClosedInterval>>(5, {{0, 3}, {1, 1}})};
    for (int k = 2; k <= 5; ++k) {
        EXPECT_TRUE(is_kwise_intersecting(same, k).holds);
    }
    TIntervalFamily three{1, {{{0, 2}}, {{1, 3}}, {{4, 5}}}};
    SubsetCheck r = is_kwise_intersecting(three, 2);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(*r.witness, (VertexList{0, 2}));
    TIntervalFamily four = construct_onefourth(4);
    EXPECT_TRUE(is_kwise_intersecting(four, 2).holds);
    EXPECT_FALSE(is_kwise_intersecting(four, 3).holds);
}

TEST(IsKwiseIntersecting, HellyOnSubtrees)
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        TSubtreeFamily fam = random_subtree_family(6, 2, seed, {6, 4, 0.5, 1, 10});
        MultiColoring col = coloring_from_subtrees(fam);
        for (int k = 2; k <= 6; ++k) {
            EXPECT_EQ(is_kwise_intersecting(fam, k).holds, is_tk_coloring(col, k).holds) << seed;
        }
    }
}

TEST(KfoldMinColors, Examples)
{
    EXPECT_EQ(kfold_min_colors(construct_k5star()), 1);
    EXPECT_EQ(kfold_min_colors(MultiColoring::all_colors(5, 4)), 4);
    EXPECT_EQ(kfold_min_colors(construct_k8_c4free_3col()), 1);
    EXPECT_EQ(kfold_min_colors(MultiColoring(3, 2)), 0);
    EXPECT_THROW(kfold_min_colors(MultiColoring(1, 2)), InputError);
}

TEST(ColorGraph, Examples)
{
    MultiColoring star = construct_k5star();
    Graph red = color_graph(star, 1);
    EXPECT_EQ(red.edge_count(), 5);
    for (Vertex v = 0; v < 5; ++v) {
        EXPECT_EQ(red.degree(v), 2);
    }
    EXPECT_TRUE(color_graph(MultiColoring::all_colors(5, 3), 2).is_complete());
    Graph blue = color_graph(construct_k4_two_paths(), 2);
    EXPECT_EQ(blue.edge_count(), 3);
    EXPECT_TRUE(blue.is_connected());
}

TEST(VerifyCover, Examples)
{
    MultiColoring star = construct_k5star();
    CoverReport empty = verify_cover(star, {});
    EXPECT_TRUE(empty.valid);
    EXPECT_EQ(empty.covered, 0);

    StrongCover nonedge{{{1, {0, 2}}}};
    EXPECT_FALSE(verify_cover(star, nonedge).valid);

    StrongCover two{{{1, {0, 1}}, {2, {2, 4}}}};
    CoverReport r = verify_cover(star, two);
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.covered, 4);

    StrongCover repeated{{{1, {0, 1}}, {1, {2, 3}}}};
    EXPECT_FALSE(verify_cover(star, repeated).valid);

    StrongCover bad_color{{{3, {0}}}};
    EXPECT_THROW(verify_cover(star, bad_color), InputError);
    StrongCover bad_vertex{{{1, {7}}}};
    EXPECT_THROW(verify_cover(star, bad_vertex), InputError);
}

TEST(PiercingPoints, Examples)
{
    TIntervalFamily single{2, {{{5, 9}, {1, 2}}}};
    auto p = piercing_points(single, StrongCover{{{1, {0}}}});
    ASSERT_EQ(p.size(), 1U);
    EXPECT_EQ(p[0], (PiercingPoint{1, 5}));

    TIntervalFamily nested{1, {{{0, 10}}, {{3, 4}}}};
    p = piercing_points(nested, StrongCover{{{1, {0, 1}}}});
    ASSERT_EQ(p.size(), 1U);
    EXPECT_EQ(p[0].point, 3);

    TIntervalFamily two = construct_onefourth(2);
    MultiColoring col = coloring_from_intervals(two);
    Graph path = color_graph(col, 2);
    Vertex b = 2;
    Vertex a = path.adjacent(0, b) ? 0 : 1;
    StrongCover cover{{{1, {0, 1}}, {2, {std::min(a, b), std::max(a, b)}}}};
    ASSERT_TRUE(verify_cover(col, cover).valid);
    p = piercing_points(two, cover);
    ASSERT_EQ(p.size(), 2U);
    for (const auto& a2 : cover.assignments) {
        const auto& pt = a2.color == p[0].track ? p[0] : p[1];
        for (Vertex v : a2.vertices) {
            const ClosedInterval& iv = two.members[v][a2.color - 1];
            EXPECT_LE(iv.lo, pt.point);
            EXPECT_LE(pt.point, iv.hi);
        }
    }

    EXPECT_THROW(piercing_points(nested, StrongCover{{{1, {0, 1}}, {1, {1}}}}), InputError);
}
