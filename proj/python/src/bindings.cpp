#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strongcover/chordal.hpp"
#include "strongcover/constructions.hpp"
#include "strongcover/covers.hpp"
#include "strongcover/harness.hpp"
#include "strongcover/io.hpp"

namespace py = pybind11;
namespace sc = strongcover;
using namespace pybind11::literals;

namespace {

py::object optional_list(const std::optional<sc::VertexList>& v)
{
    return v ? py::cast(*v) : py::none();
}

std::vector<sc::Color> order_or_identity(const std::optional<std::vector<sc::Color>>& order)
{
    return order.value_or(std::vector<sc::Color>{});
}

py::dict trace_dict(const sc::covers::GreedyTrace& trace)
{
    py::list steps;
    for (const auto& s : trace.steps) {
        steps.append(py::dict("color"_a = s.color, "clique"_a = s.clique, "remaining"_a = s.remaining));
    }
    return py::dict("steps"_a = steps, "uncovered"_a = trace.uncovered);
}

py::object report_object(const nlohmann::json& report)
{
    return py::module_::import("json").attr("loads")(report.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Strong covers of (t,k)-colorings of complete graphs";
    m.attr("__version__") = STRONGCOVER_VERSION;

    py::register_exception<sc::covers::PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<sc::covers::TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);

    py::class_<sc::Graph>(m, "Graph")
        .def(py::init<int>(), "n"_a)
        .def("add_edge", &sc::Graph::add_edge)
        .def("adjacent", &sc::Graph::adjacent)
        .def("degree", &sc::Graph::degree)
        .def_property_readonly("n", &sc::Graph::size)
        .def("edge_count", &sc::Graph::edge_count)
        .def("edges",
             [](const sc::Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (int u = 0; u < g.size(); ++u)
                     for (int v = u + 1; v < g.size(); ++v)
                         if (g.adjacent(u, v)) {
                             out.emplace_back(u, v);
                         }
                 return out;
             })
        .def(py::self == py::self);

    py::class_<sc::MultiColoring>(m, "MultiColoring")
        .def(py::init<int, int>(), "n"_a, "t"_a)
        .def_static("all_colors", &sc::MultiColoring::all_colors, "n"_a, "t"_a)
        .def_static("from_json", [](const std::string& s) { return sc::io::coloring_from_json(sc::io::parse(s)); })
        .def("to_json", [](const sc::MultiColoring& c) { return sc::io::to_json(c).dump(); })
        .def_property_readonly("n", &sc::MultiColoring::n)
        .def_property_readonly("t", &sc::MultiColoring::t)
        .def("colors", [](const sc::MultiColoring& c, int u, int v) { return c.colors(u, v).colors(); })
        .def("set_colors",
             [](sc::MultiColoring& c, int u, int v, const std::vector<int>& colors) {
                 c.set_colors(u, v, {});
                 for (int x : colors) {
                     c.add_color(u, v, x);
                 }
             })
        .def("add_color", &sc::MultiColoring::add_color)
        .def("has_color", &sc::MultiColoring::has_color)
        .def("restrict_to", [](const sc::MultiColoring& c, const sc::VertexList& keep) { return c.restrict_to(keep); })
        .def(py::self == py::self)
        .def("__repr__", [](const sc::MultiColoring& c) {
            return "<MultiColoring n=" + std::to_string(c.n()) + " t=" + std::to_string(c.t()) + ">";
        });

    py::class_<sc::TIntervalFamily>(m, "IntervalFamily")
        .def(py::init([](int t, const std::vector<std::vector<std::pair<long long, long long>>>& members) {
                 sc::TIntervalFamily fam;
                 fam.t = t;
                 for (const auto& row : members) {
                     std::vector<sc::ClosedInterval> ivs;
                     for (auto [lo, hi] : row) {
                         ivs.push_back({lo, hi});
                     }
                     fam.members.push_back(std::move(ivs));
                 }
                 fam.validate();
                 return fam;
             }),
             "t"_a, "members"_a)
        .def_readonly("t", &sc::TIntervalFamily::t)
        .def_property_readonly("n", &sc::TIntervalFamily::n)
        .def_property_readonly("members",
                               [](const sc::TIntervalFamily& f) {
                                   std::vector<std::vector<std::pair<long long, long long>>> out;
                                   for (const auto& row : f.members) {
                                       auto& r = out.emplace_back();
                                       for (const auto& iv : row) {
                                           r.emplace_back(iv.lo, iv.hi);
                                       }
                                   }
                                   return out;
                               })
        .def("to_json", [](const sc::TIntervalFamily& f) { return sc::io::to_json(f).dump(); })
        .def(py::self == py::self);

    py::class_<sc::TSubtreeFamily>(m, "SubtreeFamily")
        .def(py::init([](int host_size, const std::vector<std::pair<int, int>>& host_edges, int t,
                         const std::vector<std::vector<std::vector<int>>>& members) {
                 sc::TSubtreeFamily fam{host_size, host_edges, t, members};
                 fam.validate();
                 return fam;
             }),
             "host_size"_a, "host_edges"_a, "t"_a, "members"_a)
        .def_readonly("host_size", &sc::TSubtreeFamily::host_size)
        .def_readonly("host_edges", &sc::TSubtreeFamily::host_edges)
        .def_readonly("t", &sc::TSubtreeFamily::t)
        .def_readonly("members", &sc::TSubtreeFamily::members)
        .def_property_readonly("n", &sc::TSubtreeFamily::n)
        .def("to_json", [](const sc::TSubtreeFamily& f) { return sc::io::to_json(f).dump(); })
        .def(py::self == py::self);

    py::class_<sc::StrongCover>(m, "StrongCover")
        .def(py::init([](const std::vector<std::pair<int, sc::VertexList>>& rows) {
                 sc::StrongCover c;
                 for (const auto& [color, vs] : rows) {
                     c.assignments.push_back({color, vs});
                 }
                 return c;
             }),
             "assignments"_a = std::vector<std::pair<int, sc::VertexList>>{})
        .def_property_readonly("assignments",
                               [](const sc::StrongCover& c) {
                                   std::vector<std::pair<int, sc::VertexList>> out;
                                   for (const auto& a : c.assignments) {
                                       out.emplace_back(a.color, a.vertices);
                                   }
                                   return out;
                               })
        .def_property_readonly("clique_count", &sc::StrongCover::clique_count)
        .def(py::self == py::self)
        .def("__repr__", [](const sc::StrongCover& c) { return "<StrongCover " + sc::io::to_json(c).dump() + ">"; });

    m.def(
        "load_json", [](const std::string& text) { return sc::io::instance_from_json(sc::io::parse(text)); },
        "text"_a, "Parse a coloring, interval family or subtree family document");

    // core
    m.def("color_graph", &sc::color_graph, "coloring"_a, "color"_a);
    m.def("coloring_from_intervals", &sc::coloring_from_intervals);
    m.def("coloring_from_subtrees", &sc::coloring_from_subtrees);
    m.def(
        "is_tk_coloring",
        [](const sc::MultiColoring& c, int k) {
            auto r = sc::is_tk_coloring(c, k);
            return py::make_tuple(r.holds, optional_list(r.witness));
        },
        "coloring"_a, "k"_a, "(holds, witness) where witness is a violating k-subset or None");
    m.def(
        "is_kwise_intersecting",
        [](const sc::TIntervalFamily& f, int k) {
            auto r = sc::is_kwise_intersecting(f, k);
            return py::make_tuple(r.holds, optional_list(r.witness));
        },
        "family"_a, "k"_a);
    m.def(
        "is_kwise_intersecting",
        [](const sc::TSubtreeFamily& f, int k) {
            auto r = sc::is_kwise_intersecting(f, k);
            return py::make_tuple(r.holds, optional_list(r.witness));
        },
        "family"_a, "k"_a);
    m.def("kfold_min_colors", &sc::kfold_min_colors);
    m.def("verify_cover", [](const sc::MultiColoring& c, const sc::StrongCover& cov) {
        auto r = sc::verify_cover(c, cov);
        return py::dict("valid"_a = r.valid, "covered"_a = r.covered, "reason"_a = r.reason);
    });
    m.def("piercing_points", [](const sc::TIntervalFamily& f, const sc::StrongCover& cov) {
        std::vector<std::pair<int, long long>> out;
        for (const auto& p : sc::piercing_points(f, cov)) {
            out.emplace_back(p.track, p.point);
        }
        return out;
    });

    // chordal
    m.def("is_chordal", [](const sc::Graph& g) {
        auto cert = sc::chordal::is_chordal(g);
        return py::dict("chordal"_a = cert.chordal(), "peo"_a = optional_list(cert.peo),
                        "hole"_a = optional_list(cert.hole));
    });
    m.def("mcs_order", &sc::chordal::mcs_order);
    m.def("maximal_cliques", &sc::chordal::maximal_cliques);
    m.def("induced_c4_free", [](const sc::Graph& g) {
        auto r = sc::chordal::induced_c4_free(g);
        return py::make_tuple(r.c4_free, optional_list(r.witness));
    });
    m.def("clique_cutset", [](const sc::Graph& g) -> py::object {
        auto cert = sc::chordal::is_chordal(g);
        if (!cert.chordal()) {
            throw sc::InputError("clique cut-set requires a chordal graph");
        }
        auto cut = sc::chordal::clique_cutset(g, *cert.peo);
        if (!cut) {
            return py::none();
        }
        return py::make_tuple(cut->a, cut->q, cut->b);
    });

    // covers
    m.def(
        "greedy_strong_cover",
        [](const sc::MultiColoring& c, const std::optional<std::vector<sc::Color>>& order) {
            auto order_vec = order_or_identity(order);
            auto r = sc::covers::greedy_strong_cover(c, order_vec);
            return py::make_tuple(r.cover, trace_dict(r.trace));
        },
        "coloring"_a, "order"_a = py::none());
    m.def(
        "counting_chain",
        [](const sc::MultiColoring& c, const std::optional<std::vector<sc::Color>>& order, int k) {
            auto order_vec = order_or_identity(order);
            auto r = sc::covers::greedy_strong_cover(c, order_vec);
            auto chain = sc::covers::counting_chain(c, r.trace, k);
            return py::dict("lower"_a = chain.lower, "multiplicity"_a = chain.multiplicity, "upper"_a = chain.upper,
                            "holds"_a = chain.holds);
        },
        "coloring"_a, "order"_a = py::none(), "k"_a = 2);
    m.def("exact_max_strong_cover", &sc::covers::exact_max_strong_cover, "coloring"_a,
          "max_n"_a = sc::covers::kDefaultMaxExact);
    m.def("theta", &sc::covers::theta, "coloring"_a, "max_n"_a = sc::covers::kDefaultMaxExact);
    m.def("two_clique_cover_exact", &sc::covers::two_clique_cover_exact, "coloring"_a, "first"_a, "second"_a,
          "max_n"_a = sc::covers::kDefaultMaxExact);
    m.def("strong_cover_33", &sc::covers::strong_cover_33);
    m.def("strong_cover_tt", &sc::covers::strong_cover_tt);
    m.def("strong_cover_c4free_22", &sc::covers::strong_cover_c4free_22);
    m.def("find_k5star", &sc::covers::find_k5star, "coloring"_a, "red"_a = 1, "blue"_a = 2);
    m.def("grow_blowup", &sc::covers::grow_blowup, "coloring"_a, "seed"_a, "red"_a = 1, "blue"_a = 2);

    // constructions
    namespace cs = sc::constructions;
    m.def("hamilton_decomposition_bipartite", &cs::hamilton_decomposition_bipartite);
    m.def("hamilton_paths_for_construction", &cs::hamilton_paths_for_construction);
    m.def("construct_onefourth", &cs::construct_onefourth);
    m.def("construct_k5star", &cs::construct_k5star);
    m.def("construct_k4_two_paths", &cs::construct_k4_two_paths);
    m.def("construct_partition_coloring", &cs::construct_partition_coloring, "n"_a, "t"_a);
    m.def("construct_k8_c4free_3col", &cs::construct_k8_c4free_3col);
    m.def("clique_substitute", &cs::clique_substitute, "coloring"_a, "vertex"_a, "size"_a);
    m.def("blow_up", [](const sc::MultiColoring& base, const std::vector<int>& sizes) {
        return cs::blow_up({base, sizes});
    });
    m.def("random_interval_family", [](int n, int t, std::uint64_t seed) {
        return cs::random_interval_family(n, t, seed);
    });
    m.def("random_subtree_family", [](int n, int t, std::uint64_t seed) {
        return cs::random_subtree_family(n, t, seed);
    });
    m.def("random_c4free_22", &cs::random_c4free_22, "n"_a, "seed"_a, "start_with_k5star"_a = false);

    // verification suites, returned as plain Python objects
    namespace h = sc::harness;
    m.def(
        "verify_lower",
        [](int n, int t, int k, int samples, std::uint64_t seed) {
            return report_object(h::verify_lower({n, t, k, samples, seed, true}).report);
        },
        "n"_a = 12, "t"_a = 3, "k"_a = 3, "samples"_a = 100, "seed"_a = 1);
    m.def(
        "verify_t33",
        [](int n, int samples, std::uint64_t seed) {
            return report_object(h::verify_t33({samples, n, seed, 10}).report);
        },
        "n"_a = 12, "samples"_a = 100, "seed"_a = 1);
    m.def(
        "verify_tt",
        [](int t, int n, int samples, std::uint64_t seed) {
            return report_object(h::verify_tt(t, {samples, n, seed, 10}).report);
        },
        "t"_a, "n"_a = 12, "samples"_a = 100, "seed"_a = 1);
    m.def(
        "verify_c4free22",
        [](int n, int samples, std::uint64_t seed) {
            return report_object(h::verify_c4free22({samples, n, seed, 10}).report);
        },
        "n"_a = 15, "samples"_a = 100, "seed"_a = 1);
    m.def("verify_constructions", [] { return report_object(h::verify_constructions().report); });
}
