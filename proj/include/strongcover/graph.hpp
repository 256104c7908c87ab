#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace strongcover {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using VertexSet = boost::dynamic_bitset<>;

/// Thrown for malformed input: out-of-range indices, bad sizes, invalid shapes.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

VertexSet make_vertex_set(std::size_t n, std::span<const Vertex> members);
VertexList to_list(const VertexSet& s);

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bitsets.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return static_cast<int>(adj_.size()); }

    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].count()); }
    long long edge_count() const;

    bool is_clique(const VertexSet& s) const;
    bool is_clique(std::span<const Vertex> vs) const;
    bool is_complete() const;
    bool is_connected() const;

    /// Subgraph induced on `keep`, relabelled 0..m-1 in increasing original order.
    Graph induced(std::span<const Vertex> keep) const;

    /// Shortest path from `from` to `to` using only vertices in `allowed`
    /// (endpoints must be allowed). Empty when unreachable.
    VertexList shortest_path(Vertex from, Vertex to, const VertexSet& allowed) const;

    VertexSet all_vertices() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adj_;
};

}  // namespace strongcover
