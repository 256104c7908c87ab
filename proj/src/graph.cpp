#include "strongcover/graph.hpp"

#include <deque>

namespace strongcover {

VertexSet make_vertex_set(std::size_t n, std::span<const Vertex> members)
{
    VertexSet s(n);
    for (Vertex v : members) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw InputError("vertex " + std::to_string(v) + " out of range");
        }
        s.set(v);
    }
    return s;
}

VertexList to_list(const VertexSet& s)
{
    VertexList out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
        out.push_back(static_cast<Vertex>(i));
    }
    return out;
}

Graph::Graph(int n)
{
    if (n < 0) {
        throw InputError("negative vertex count");
    }
    adj_.assign(n, VertexSet(n));
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= size()) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw InputError("self-loop on vertex " + std::to_string(u));
    }
    adj_[u].set(v);
    adj_[v].set(u);
}

long long Graph::edge_count() const
{
    long long twice = 0;
    for (const auto& row : adj_) {
        twice += static_cast<long long>(row.count());
    }
    return twice / 2;
}

bool Graph::is_clique(const VertexSet& s) const
{
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        VertexSet others = s;
        others.reset(v);
        if (!others.is_subset_of(adj_[v])) {
            return false;
        }
    }
    return true;
}

bool Graph::is_clique(std::span<const Vertex> vs) const
{
    return is_clique(make_vertex_set(adj_.size(), vs));
}

bool Graph::is_complete() const
{
    return is_clique(all_vertices());
}

bool Graph::is_connected() const
{
    if (size() <= 1) {
        return true;
    }
    VertexSet seen(adj_.size());
    std::deque<Vertex> queue{0};
    seen.set(0);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        VertexSet fresh = adj_[v] - seen;
        for (auto w = fresh.find_first(); w != VertexSet::npos; w = fresh.find_next(w)) {
            seen.set(w);
            queue.push_back(static_cast<Vertex>(w));
        }
    }
    return seen.all();
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    VertexSet chosen = make_vertex_set(adj_.size(), keep);
    VertexList order = to_list(chosen);
    std::vector<int> index(adj_.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        index[order[i]] = static_cast<int>(i);
    }
    Graph g(static_cast<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexSet nb = adj_[order[i]] & chosen;
        for (auto w = nb.find_next(order[i]); w != VertexSet::npos; w = nb.find_next(w)) {
            g.add_edge(static_cast<Vertex>(i), index[w]);
        }
    }
    return g;
}

VertexList Graph::shortest_path(Vertex from, Vertex to, const VertexSet& allowed) const
{
    check_vertex(from);
    check_vertex(to);
    if (!allowed.test(from) || !allowed.test(to)) {
        return {};
    }
    std::vector<Vertex> parent(adj_.size(), -1);
    VertexSet seen(adj_.size());
    seen.set(from);
    std::deque<Vertex> queue{from};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (v == to) {
            VertexList path;
            for (Vertex x = to; x != -1; x = parent[x]) {
                path.push_back(x);
            }
            return {path.rbegin(), path.rend()};
        }
        VertexSet fresh = (adj_[v] & allowed) - seen;
        for (auto w = fresh.find_first(); w != VertexSet::npos; w = fresh.find_next(w)) {
            seen.set(w);
            parent[w] = v;
            queue.push_back(static_cast<Vertex>(w));
        }
    }
    return {};
}

VertexSet Graph::all_vertices() const
{
    VertexSet s(adj_.size());
    s.set();
    return s;
}

}  // namespace strongcover
