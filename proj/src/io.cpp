#include "strongcover/io.hpp"

namespace strongcover::io {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what)
{
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field ") + what + " has the wrong type");
    }
}

}  // namespace

json to_json(const MultiColoring& col)
{
    json edges = json::array();
    for (Vertex u = 0; u < col.n(); ++u) {
        for (Vertex v = u + 1; v < col.n(); ++v) {
            ColorSet c = col.colors(u, v);
            if (!c.empty()) {
                edges.push_back(json::array({u, v, c.colors()}));
            }
        }
    }
    return {{"n", col.n()}, {"t", col.t()}, {"edges", std::move(edges)}};
}

json to_json(const TIntervalFamily& fam)
{
    json members = json::array();
    for (const auto& m : fam.members) {
        json row = json::array();
        for (const auto& iv : m) {
            row.push_back(json::array({iv.lo, iv.hi}));
        }
        members.push_back(std::move(row));
    }
    return {{"t", fam.t}, {"members", std::move(members)}};
}

json to_json(const TSubtreeFamily& fam)
{
    json edges = json::array();
    for (auto [a, b] : fam.host_edges) {
        edges.push_back(json::array({a, b}));
    }
    json out = {{"host_edges", std::move(edges)}, {"t", fam.t}, {"members", fam.members}};
    if (fam.host_edges.empty()) {
        out["host_size"] = fam.host_size;
    }
    return out;
}

json to_json(const StrongCover& cover)
{
    json rows = json::array();
    for (const auto& a : cover.assignments) {
        rows.push_back(json::array({a.color, a.vertices}));
    }
    return {{"assignments", std::move(rows)}};
}

json to_json(const covers::GreedyTrace& trace)
{
    json steps = json::array();
    for (const auto& s : trace.steps) {
        steps.push_back({{"color", s.color}, {"clique", s.clique}});
    }
    return {{"steps", std::move(steps)}, {"uncovered", trace.uncovered}};
}

json to_json(const std::vector<PiercingPoint>& points)
{
    json out = json::array();
    for (const auto& p : points) {
        out.push_back(json::array({p.track, p.point}));
    }
    return out;
}

MultiColoring coloring_from_json(const json& j)
{
    int n = get_as<int>(field(j, "n"), "n");
    int t = get_as<int>(field(j, "t"), "t");
    MultiColoring col(n, t);
    const json& edges = field(j, "edges");
    if (!edges.is_array()) {
        throw ParseError("field edges must be an array");
    }
    std::vector<bool> listed(static_cast<std::size_t>(n) * n, false);
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 3) {
            throw ParseError("each edge must be [u, v, [colors...]]");
        }
        Vertex u = get_as<int>(e[0], "edge endpoint");
        Vertex v = get_as<int>(e[1], "edge endpoint");
        if (u >= v) {
            throw ParseError("edge endpoints must satisfy u < v");
        }
        col.check_vertex(v);
        col.check_vertex(u);
        if (listed[static_cast<std::size_t>(u) * n + v]) {
            throw ParseError("edge listed twice");
        }
        listed[static_cast<std::size_t>(u) * n + v] = true;
        for (Color c : get_as<std::vector<int>>(e[2], "edge colors")) {
            col.add_color(u, v, c);
        }
    }
    return col;
}

TIntervalFamily interval_family_from_json(const json& j)
{
    TIntervalFamily fam;
    fam.t = get_as<int>(field(j, "t"), "t");
    const json& members = field(j, "members");
    if (!members.is_array()) {
        throw ParseError("field members must be an array");
    }
    for (const auto& m : members) {
        std::vector<ClosedInterval> row;
        for (const auto& iv : get_as<std::vector<std::vector<long long>>>(m, "member")) {
            if (iv.size() != 2) {
                throw ParseError("intervals must be [lo, hi]");
            }
            row.push_back({iv[0], iv[1]});
        }
        fam.members.push_back(std::move(row));
    }
    fam.validate();
    return fam;
}

TSubtreeFamily subtree_family_from_json(const json& j)
{
    TSubtreeFamily fam;
    fam.t = get_as<int>(field(j, "t"), "t");
    int largest = 0;
    for (const auto& e : get_as<std::vector<std::vector<int>>>(field(j, "host_edges"), "host_edges")) {
        if (e.size() != 2) {
            throw ParseError("host edges must be [a, b]");
        }
        fam.host_edges.emplace_back(e[0], e[1]);
        largest = std::max({largest, e[0], e[1]});
    }
    fam.members = get_as<std::vector<std::vector<std::vector<int>>>>(field(j, "members"), "members");
    if (j.contains("host_size")) {
        fam.host_size = get_as<int>(j.at("host_size"), "host_size");
    } else {
        fam.host_size = fam.host_edges.empty() ? 1 : largest + 1;
    }
    fam.validate();
    return fam;
}

StrongCover cover_from_json(const json& j)
{
    StrongCover cover;
    const json& rows = field(j, "assignments");
    if (!rows.is_array()) {
        throw ParseError("field assignments must be an array");
    }
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != 2) {
            throw ParseError("each assignment must be [color, [vertices...]]");
        }
        cover.assignments.push_back(
            {get_as<int>(row[0], "assignment color"), get_as<std::vector<int>>(row[1], "assignment vertices")});
    }
    return cover;
}

Instance instance_from_json(const json& j)
{
    if (j.is_object() && j.contains("edges")) {
        return coloring_from_json(j);
    }
    if (j.is_object() && j.contains("host_edges")) {
        return subtree_family_from_json(j);
    }
    if (j.is_object() && j.contains("members")) {
        return interval_family_from_json(j);
    }
    throw ParseError("document is not a coloring, interval family or subtree family");
}

json to_json(const Instance& instance)
{
    return std::visit([](const auto& x) { return to_json(x); }, instance);
}

MultiColoring instance_coloring(const Instance& instance)
{
    struct Visitor {
        MultiColoring operator()(const MultiColoring& c) const { return c; }
        MultiColoring operator()(const TIntervalFamily& f) const { return coloring_from_intervals(f); }
        MultiColoring operator()(const TSubtreeFamily& f) const { return coloring_from_subtrees(f); }
    };
    return std::visit(Visitor{}, instance);
}

std::string instance_kind(const Instance& instance)
{
    static const char* names[] = {"coloring", "intervals", "subtrees"};
    return names[instance.index()];
}

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace strongcover::io
