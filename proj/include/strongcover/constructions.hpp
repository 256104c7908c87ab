#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strongcover/coloring.hpp"

namespace strongcover::constructions {

/// Base coloring plus a positive clique size per vertex.
struct BlowupSpec {
    MultiColoring base;
    std::vector<int> sizes;
};

/// A vertex sequence. In the bipartite constructions a_i is vertex i and b_i
/// is vertex m+i, where m = |A|.
using Walk = VertexList;

/// m/2 edge-disjoint Hamilton cycles of K_{m,m}; cycle r pairs the shifted
/// perfect matchings with offsets 2r and 2r+1.
std::vector<Walk> hamilton_decomposition_bipartite(int m);

/// t-1 edge-disjoint Hamilton paths of [A,B] with |A| = 2t-2, |B| = 2t-3:
/// the cycles for m = 2t-2 with the last b-vertex deleted.
std::vector<Walk> hamilton_paths_for_construction(int t);

/// Pairwise intersecting t-intervals on 4t-5 members. Track 1 holds the two
/// cliques A and B; track j >= 2 realizes the (j-1)-th Hamilton path with
/// intervals [2p, 2p+2].
TIntervalFamily construct_onefourth(int t);

/// 2-colored K5, each color class a 5-cycle: color 1 = (0 1 2 3 4),
/// color 2 = (0 2 4 1 3).
MultiColoring construct_k5star();

/// (2,2)-coloring of K4: color 1 = path 0-1-2-3, color 2 = path 2-0-3-1.
MultiColoring construct_k4_two_paths();

/// Parts S_1..S_t of near-equal size; edges inside S_i and from S_i to later
/// parts get color i.
TIntervalFamily construct_partition_coloring(int n, int t);

/// C4-free 3-coloring of K8 with no monochromatic triangle.
MultiColoring construct_k8_c4free_3col();

/// Replaces v by a clique of `size` vertices carrying every color. The new
/// vertices occupy positions v..v+size-1; later vertices shift up.
MultiColoring clique_substitute(const MultiColoring& col, Vertex v, int size);

/// Substitutes every vertex at once; vertex i becomes a block of sizes[i]
/// consecutive vertices.
MultiColoring blow_up(const BlowupSpec& spec);

struct IntervalParams {
    long long coord_range = 24;   // left endpoints drawn from [0, coord_range]
    long long max_length = 12;    // lengths drawn from [0, max_length]
    double anchor_probability = 0.0;  // chance a member is pinned to one of the track's anchor points
    int anchors_per_track = 1;
    int max_retries = 200;
};

struct SubtreeParams {
    int host_size = 12;
    int max_subtree_size = 6;
    double anchor_probability = 0.0;  // chance a subtree grows from one of the track's anchor vertices
    int anchors_per_track = 1;
    int max_retries = 200;
};

/// Deterministic for a given (n, t, seed, params).
TIntervalFamily random_interval_family(int n, int t, std::uint64_t seed, const IntervalParams& params = {});
TSubtreeFamily random_subtree_family(int n, int t, std::uint64_t seed, const SubtreeParams& params = {});

template <class Family>
struct Sampled {
    std::optional<Family> family;  // empty when the retry budget ran out
    int attempts = 0;
};

/// Rejection sampling for a k-wise intersecting family. Attempt i uses seed
/// derived from (seed, i).
Sampled<TIntervalFamily> sample_kwise_interval_family(int n, int t, int k, std::uint64_t seed,
                                                      const IntervalParams& params = {});
Sampled<TSubtreeFamily> sample_kwise_subtree_family(int n, int t, int k, std::uint64_t seed,
                                                    const SubtreeParams& params = {});

/// Randomly shrinks members of a k-wise intersecting family while keeping it
/// k-wise intersecting: interval endpoints move inward, subtrees lose leaves.
/// `attempts` proposals are made; each is kept only if the family stays valid.
TIntervalFamily shrink_kwise(TIntervalFamily fam, int k, std::uint64_t seed, int attempts);
TSubtreeFamily shrink_kwise(TSubtreeFamily fam, int k, std::uint64_t seed, int attempts);

/// Random 2-coloring of K_n with every edge colored and both classes induced
/// C4-free, built one vertex at a time. With `start_with_k5star` (and n >= 5)
/// the first five vertices span construct_k5star().
MultiColoring random_c4free_22(int n, std::uint64_t seed, bool start_with_k5star = false);

}  // namespace strongcover::constructions
