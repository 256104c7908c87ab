#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "strongcover/graph.hpp"

namespace strongcover::chordal {

/// Either a perfect elimination ordering or a chordless cycle of length >= 4.
struct ChordalCertificate {
    std::optional<VertexList> peo;
    std::optional<VertexList> hole;

    bool chordal() const { return peo.has_value(); }
};

/// A, Q, B partition the vertices; Q is a clique and no edge joins A to B.
struct CliqueCutset {
    VertexList a;
    VertexList q;
    VertexList b;
};

/// Maximum cardinality search visiting order, ties to the smallest index.
/// For a chordal graph the reverse of this order is a PEO.
VertexList mcs_order(const Graph& g);

/// Returns the first vertex whose later neighbours are not a clique, together
/// with two non-adjacent later neighbours, or nothing when `order` is a PEO.
struct PeoViolation {
    Vertex v;
    Vertex a;
    Vertex b;
};
std::optional<PeoViolation> find_peo_violation(const Graph& g, std::span<const Vertex> order);

bool is_peo(const Graph& g, std::span<const Vertex> order);

/// True iff `cycle` is an induced chordless cycle of length >= 4 in g.
bool is_hole(const Graph& g, std::span<const Vertex> cycle);

ChordalCertificate is_chordal(const Graph& g);

/// A maximum clique, lexicographically least among the {v} + later-neighbour
/// sets of maximum size. Throws InputError for an invalid PEO.
VertexList max_clique_chordal(const Graph& g, std::span<const Vertex> peo);

/// All inclusion-maximal cliques, sorted lexicographically.
std::vector<VertexList> maximal_cliques_chordal(const Graph& g, std::span<const Vertex> peo);

/// Greedy proper colouring along the reverse PEO; uses exactly omega classes.
std::vector<VertexList> greedy_color_chordal(const Graph& g, std::span<const Vertex> peo);

/// Clique cut-set of a connected chordal graph, or nothing when g is complete.
/// Throws InputError for disconnected or non-chordal input.
std::optional<CliqueCutset> clique_cutset(const Graph& g, std::span<const Vertex> peo);

struct C4Check {
    bool c4_free = true;
    std::optional<VertexList> witness;  // cycle order a-b-c-d
};

C4Check induced_c4_free(const Graph& g);

struct EdgeBoundReport {
    long long edges = 0;
    int omega = 0;
    long long partition_bound = 0;  // (omega-1)n - omega(omega-1)/2
    long long coarse_bound = 0;     // omega(n-1)
    bool holds = false;
};

/// Edge count against the bounds implied by the colour-class forest argument.
/// Throws InputError for non-chordal input.
EdgeBoundReport chordal_edge_bound_check(const Graph& g);

/// True iff the edges of g between disjoint vertex sets x and y form a forest.
bool bipartite_part_is_forest(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);

/// Inclusion-maximal cliques of an arbitrary graph (pivoting Bron-Kerbosch),
/// sorted lexicographically.
std::vector<VertexList> maximal_cliques(const Graph& g);

}  // namespace strongcover::chordal
