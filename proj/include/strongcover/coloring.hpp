#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strongcover/graph.hpp"

namespace strongcover {

/// Colors are 1-based, matching how colorings are written by hand.
using Color = int;

inline constexpr int kMaxColors = 64;

/// Set of colors carried by one edge. Bit i-1 stands for color i.
class ColorSet {
public:
    constexpr ColorSet() = default;
    static constexpr ColorSet from_mask(std::uint64_t mask) { return ColorSet(mask); }
    static ColorSet all(int t);
    static ColorSet of(std::initializer_list<Color> colors);

    constexpr bool contains(Color c) const { return (mask_ >> (c - 1)) & 1U; }
    constexpr void insert(Color c) { mask_ |= std::uint64_t{1} << (c - 1); }
    constexpr void erase(Color c) { mask_ &= ~(std::uint64_t{1} << (c - 1)); }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::uint64_t mask() const { return mask_; }

    std::vector<Color> colors() const;

    constexpr ColorSet operator&(ColorSet o) const { return ColorSet(mask_ & o.mask_); }
    constexpr ColorSet operator|(ColorSet o) const { return ColorSet(mask_ | o.mask_); }
    friend constexpr bool operator==(ColorSet, ColorSet) = default;

private:
    constexpr explicit ColorSet(std::uint64_t mask) : mask_(mask) {}
    std::uint64_t mask_ = 0;
};

/// Edge-multicoloring of the complete graph K_n with colors 1..t. Edges may
/// carry no color at all; whether the result is a (t,k)-coloring is checked
/// separately.
class MultiColoring {
public:
    MultiColoring() = default;
    MultiColoring(int n, int t);

    /// Every edge carries every color.
    static MultiColoring all_colors(int n, int t);

    int n() const { return n_; }
    int t() const { return t_; }

    ColorSet colors(Vertex u, Vertex v) const;
    void set_colors(Vertex u, Vertex v, ColorSet c);
    void add_color(Vertex u, Vertex v, Color c);
    bool has_color(Vertex u, Vertex v, Color c) const { return colors(u, v).contains(c); }

    void check_color(Color c) const;
    void check_vertex(Vertex v) const;

    /// Restriction to `keep`, relabelled 0..m-1 preserving original order.
    MultiColoring restrict_to(std::span<const Vertex> keep) const;

    /// Keeps only `palette` (in the given order) and renumbers it 1..|palette|.
    MultiColoring project_colors(std::span<const Color> palette) const;

    friend bool operator==(const MultiColoring&, const MultiColoring&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    int t_ = 0;
    std::vector<ColorSet> edges_;
};

/// The graph G_i of edges carrying color i.
Graph color_graph(const MultiColoring& col, Color i);

struct ClosedInterval {
    long long lo = 0;
    long long hi = 0;
    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

inline bool intersects(const ClosedInterval& a, const ClosedInterval& b)
{
    return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

/// n members, each with one closed integer interval per track.
struct TIntervalFamily {
    int t = 0;
    std::vector<std::vector<ClosedInterval>> members;

    int n() const { return static_cast<int>(members.size()); }
    void validate() const;
    friend bool operator==(const TIntervalFamily&, const TIntervalFamily&) = default;
};

/// Host tree plus one connected vertex subset per member and track.
struct TSubtreeFamily {
    int host_size = 0;
    std::vector<std::pair<int, int>> host_edges;
    int t = 0;
    std::vector<std::vector<std::vector<int>>> members;

    int n() const { return static_cast<int>(members.size()); }
    Graph host() const;
    void validate() const;
    friend bool operator==(const TSubtreeFamily&, const TSubtreeFamily&) = default;
};

struct CliqueAssignment {
    Color color = 0;
    VertexList vertices;
    friend bool operator==(const CliqueAssignment&, const CliqueAssignment&) = default;
};

/// Monochromatic cliques with pairwise distinct colors.
struct StrongCover {
    std::vector<CliqueAssignment> assignments;

    int clique_count() const { return static_cast<int>(assignments.size()); }
    VertexSet covered_set(int n) const;
    friend bool operator==(const StrongCover&, const StrongCover&) = default;
};

MultiColoring coloring_from_intervals(const TIntervalFamily& fam);
MultiColoring coloring_from_subtrees(const TSubtreeFamily& fam);

struct SubsetCheck {
    bool holds = true;
    std::optional<VertexList> witness;
};

/// Every k vertices span a clique in a common color. On failure the witness is
/// the lexicographically first violating k-subset.
SubsetCheck is_tk_coloring(const MultiColoring& col, int k);

/// Every k members share a point on some track. Computed from the intervals
/// directly, never through the derived coloring.
SubsetCheck is_kwise_intersecting(const TIntervalFamily& fam, int k);
SubsetCheck is_kwise_intersecting(const TSubtreeFamily& fam, int k);

/// Minimum number of colors on an edge.
int kfold_min_colors(const MultiColoring& col);

struct CoverReport {
    bool valid = true;
    int covered = 0;
    std::string reason;
};

CoverReport verify_cover(const MultiColoring& col, const StrongCover& cov);

struct PiercingPoint {
    Color track = 0;
    long long point = 0;
    friend bool operator==(const PiercingPoint&, const PiercingPoint&) = default;
};

/// One point per assigned color: the largest left endpoint among the clique's
/// intervals on that track.
std::vector<PiercingPoint> piercing_points(const TIntervalFamily& fam, const StrongCover& cov);

}  // namespace strongcover
