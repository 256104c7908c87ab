#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strongcover/coloring.hpp"

namespace strongcover::corpus {

/// One seeded test instance together with its geometric source, if any.
struct Instance {
    std::string source;  // intervals[-shrunk] | subtrees[-shrunk] | onefourth-restricted | substituted | k5star-blowup | c4free-random | c4free-k5star
    std::uint64_t seed = 0;
    int k = 0;
    MultiColoring coloring;
    std::optional<TIntervalFamily> intervals;
    std::optional<TSubtreeFamily> subtrees;
};

struct ChordalSpec {
    int count = 100;
    int t = 3;
    int k = 3;
    int n_min = 4;
    int n_max = 15;
    std::uint64_t seed = 1;
};

/// Chordal (t,k)-colorings drawn from random interval and subtree families
/// (rejection-sampled for k-wise intersection, two in three then shrunk with
/// shrink_kwise), clique substitutions into them and, for k = 2, induced
/// subfamilies of construct_onefourth(t). Every returned coloring passes
/// is_tk_coloring(., k). May return fewer than `count` instances if sampling
/// keeps failing.
std::vector<Instance> chordal_tk(const ChordalSpec& spec);

/// All blow-ups of K5* with class sizes drawn from `sizes`.
std::vector<Instance> k5star_blowups(const std::vector<int>& sizes = {1, 2, 3});

/// Random C4-free (2,2)-colorings; every other one starts from a K5*.
std::vector<Instance> c4free_22(int count, int n_min, int n_max, std::uint64_t seed);

}  // namespace strongcover::corpus
