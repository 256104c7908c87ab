#include "strongcover/harness.hpp"

#include <algorithm>
#include <numeric>

#include "strongcover/chordal.hpp"
#include "strongcover/constructions.hpp"
#include "strongcover/corpus.hpp"
#include "strongcover/covers.hpp"
#include "strongcover/io.hpp"

namespace strongcover::harness {

namespace {

class Record {
public:
    Record(std::string source, std::uint64_t seed, const MultiColoring& col, int k)
        : json_{{"source", std::move(source)}, {"seed", seed}, {"n", col.n()}, {"t", col.t()}, {"k", k}}
    {
    }
    explicit Record(std::string name) : json_{{"name", std::move(name)}} {}

    void check(const std::string& name, const std::string& inequality, const json& expected, const json& observed,
               bool pass)
    {
        checks_.push_back({{"name", name},
                           {"inequality", inequality},
                           {"expected", expected},
                           {"observed", observed},
                           {"pass", pass}});
        ok_ = ok_ && pass;
    }

    void fail(const std::string& error, const json& instance = nullptr)
    {
        json_["error"] = error;
        if (!instance.is_null()) {
            json_["instance"] = instance;
        }
        ok_ = false;
    }

    json& extra() { return json_; }

    void finish(SuiteResult& suite)
    {
        json_["checks"] = std::move(checks_);
        json_["pass"] = ok_;
        (ok_ ? suite.passed : suite.failed)++;
        suite.report["instances"].push_back(std::move(json_));
    }

private:
    json json_;
    json checks_ = json::array();
    bool ok_ = true;
};

SuiteResult start(const std::string& name, json params)
{
    SuiteResult r;
    r.report = {{"suite", name}, {"params", std::move(params)}, {"instances", json::array()}};
    return r;
}

SuiteResult& finish(SuiteResult& r)
{
    json& items = r.report["instances"];
    std::stable_sort(items.begin(), items.end(), [](const json& a, const json& b) {
        return a.value("seed", std::uint64_t{0}) < b.value("seed", std::uint64_t{0});
    });
    r.report["passed"] = r.passed;
    r.report["failed"] = r.failed;
    r.report["pass"] = r.ok();
    return r;
}

// Runs `body`, converting algorithm failures into recorded failures.
template <class Body>
void guarded(Record& rec, Body body)
{
    try {
        body();
    } catch (const covers::TheoremViolation& e) {
        rec.fail(std::string("theorem violation: ") + e.what(), io::to_json(e.instance()));
    } catch (const covers::PreconditionError& e) {
        rec.fail(std::string("precondition: ") + e.what());
    } catch (const InputError& e) {
        rec.fail(std::string("input: ") + e.what());
    }
}

std::vector<std::vector<Color>> color_orders(int t, bool all)
{
    std::vector<Color> order(t);
    std::iota(order.begin(), order.end(), 1);
    std::vector<std::vector<Color>> out{order};
    if (all && t <= 5) {
        while (std::ranges::next_permutation(order).found) {
            out.push_back(order);
        }
    }
    return out;
}

long long ceil_div(long long a, long long b)
{
    return (a + b - 1) / b;
}

}  // namespace

SuiteResult verify_lower(const LowerParams& p)
{
    SuiteResult suite = start("lower", {{"n_max", p.n_max},
                                        {"t", p.t},
                                        {"k", p.k},
                                        {"samples", p.samples},
                                        {"seed", p.seed},
                                        {"all_orders", p.all_orders}});
    auto instances = corpus::chordal_tk({p.samples, p.t, p.k, std::max(p.k, 2), p.n_max, p.seed});
    for (const auto& inst : instances) {
        Record rec(inst.source, inst.seed, inst.coloring, p.k);
        const long long n = inst.coloring.n();
        guarded(rec, [&] {
            for (const auto& order : color_orders(p.t, p.all_orders)) {
                auto result = covers::greedy_strong_cover(inst.coloring, order);
                long long covered = n - static_cast<long long>(result.trace.uncovered.size());
                std::string tag = " order=" + json(order).dump();
                rec.check("greedy-bound" + tag, "(k+1)*covered >= (k-1)*n", (p.k - 1) * n, (p.k + 1) * covered,
                          (p.k + 1) * covered >= (p.k - 1) * n);
                auto chain = covers::counting_chain(inst.coloring, result.trace, p.k);
                rec.check("counting-chain" + tag, "(k-1)|T|(|T|-1)/2 <= M <= covered(|T|-1)",
                          json::array({chain.lower, chain.upper}), chain.multiplicity, chain.holds);
            }
        });
        rec.finish(suite);
    }
    if (static_cast<int>(instances.size()) < p.samples) {
        suite.report["shortfall"] = p.samples - static_cast<int>(instances.size());
    }
    return finish(suite);
}

SuiteResult verify_t33(const SampleParams& p)
{
    SuiteResult suite =
        start("t33", {{"samples", p.samples}, {"n_max", p.n_max}, {"seed", p.seed}, {"max_exact", p.max_exact}});
    for (const auto& inst : corpus::chordal_tk({p.samples, 3, 3, 3, p.n_max, p.seed})) {
        Record rec(inst.source, inst.seed, inst.coloring, 3);
        guarded(rec, [&] {
            StrongCover cover = covers::strong_cover_33(inst.coloring);
            CoverReport report = verify_cover(inst.coloring, cover);
            rec.check("valid", "cover is a strong cover", true, report.valid, report.valid);
            rec.check("all-covered", "covered == n", inst.coloring.n(), report.covered,
                      report.covered == inst.coloring.n());
            rec.check("cliques", "cliques <= 3", 3, cover.clique_count(), cover.clique_count() <= 3);
            if (inst.coloring.n() <= p.max_exact) {
                auto th = covers::theta(inst.coloring);
                rec.check("theta", "theta <= cliques", cover.clique_count(), th ? json(*th) : json(nullptr),
                          th && *th <= cover.clique_count());
            }
        });
        rec.finish(suite);
    }
    return finish(suite);
}

SuiteResult verify_tt(int t, const SampleParams& p)
{
    SuiteResult suite = start("tt", {{"t", t}, {"samples", p.samples}, {"n_max", p.n_max}, {"seed", p.seed}});
    const int limit = t % 2 == 0 ? 2 : 3;
    for (const auto& inst : corpus::chordal_tk({p.samples, t, t, t, p.n_max, p.seed})) {
        Record rec(inst.source, inst.seed, inst.coloring, t);
        guarded(rec, [&] {
            StrongCover cover = covers::strong_cover_tt(inst.coloring);
            CoverReport report = verify_cover(inst.coloring, cover);
            rec.check("valid", "cover is a strong cover", true, report.valid, report.valid);
            rec.check("all-covered", "covered == n", inst.coloring.n(), report.covered,
                      report.covered == inst.coloring.n());
            rec.check("cliques", "cliques <= " + std::to_string(limit), limit, cover.clique_count(),
                      cover.clique_count() <= limit);
        });
        rec.finish(suite);
    }
    return finish(suite);
}

SuiteResult verify_c4free22(const SampleParams& p)
{
    SuiteResult suite = start("c4free22", {{"samples", p.samples}, {"n_max", p.n_max}, {"seed", p.seed}});
    auto instances = corpus::k5star_blowups({1, 2, 3});
    for (auto& inst : corpus::c4free_22(p.samples, 2, p.n_max, p.seed)) {
        instances.push_back(std::move(inst));
    }
    for (const auto& inst : instances) {
        Record rec(inst.source, inst.seed, inst.coloring, 2);
        guarded(rec, [&] {
            StrongCover cover = covers::strong_cover_c4free_22(inst.coloring);
            CoverReport report = verify_cover(inst.coloring, cover);
            const long long need = ceil_div(4LL * inst.coloring.n(), 5);
            rec.check("valid", "cover is a strong cover", true, report.valid, report.valid);
            rec.check("coverage", "covered >= ceil(4n/5)", need, report.covered, report.covered >= need);
        });
        rec.finish(suite);
    }
    return finish(suite);
}

SuiteResult verify_constructions()
{
    using namespace constructions;
    SuiteResult suite = start("constructions", json::object());

    for (int t = 2; t <= 5; ++t) {
        Record rec("onefourth t=" + std::to_string(t));
        guarded(rec, [&] {
            MultiColoring col = coloring_from_intervals(construct_onefourth(t));
            rec.check("size", "n == 4t-5", 4 * t - 5, col.n(), col.n() == 4 * t - 5);
            bool pairwise = is_tk_coloring(col, 2).holds;
            rec.check("pairwise", "(t,2)-coloring", true, pairwise, pairwise);
            int covered = verify_cover(col, covers::exact_max_strong_cover(col)).covered;
            rec.check("tight", "max strong cover == 3(t-1)", 3 * (t - 1), covered, covered == 3 * (t - 1));
        });
        rec.finish(suite);
    }

    for (int t = 2; t <= 8; ++t) {
        Record rec("hamilton paths t=" + std::to_string(t));
        guarded(rec, [&] {
            const int a = 2 * t - 2;
            const int b = 2 * t - 3;
            std::vector<int> uses(static_cast<std::size_t>(a) * b, 0);
            bool spanning = true;
            for (const auto& path : hamilton_paths_for_construction(t)) {
                VertexList sorted = path;
                std::ranges::sort(sorted);
                VertexList expect(a + b);
                std::iota(expect.begin(), expect.end(), 0);
                spanning = spanning && sorted == expect;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    Vertex x = std::min(path[i], path[i + 1]);
                    Vertex y = std::max(path[i], path[i + 1]);
                    if (x < a && y >= a) {
                        uses[static_cast<std::size_t>(x) * b + (y - a)]++;
                    } else {
                        spanning = false;
                    }
                }
            }
            bool exact = std::ranges::all_of(uses, [](int u) { return u == 1; });
            rec.check("spanning", "every path is a Hamilton path of [A,B]", true, spanning, spanning);
            rec.check("decomposition", "each [A,B] edge used exactly once", a * b,
                      std::accumulate(uses.begin(), uses.end(), 0), exact);
        });
        rec.finish(suite);
    }

    {
        Record rec("k8 c4-free 3-coloring");
        guarded(rec, [&] {
            MultiColoring col = construct_k8_c4free_3col();
            int single = 0;
            for (Vertex u = 0; u < 8; ++u) {
                for (Vertex v = u + 1; v < 8; ++v) {
                    single += col.colors(u, v).size() == 1 ? 1 : 0;
                }
            }
            rec.check("partition", "all 28 edges carry exactly one color", 28, single, single == 28);
            for (Color c = 1; c <= 3; ++c) {
                Graph g = color_graph(col, c);
                bool free = chordal::induced_c4_free(g).c4_free;
                int omega = 0;
                for (const auto& q : covers::color_maximal_cliques(col, c)) {
                    omega = std::max(omega, static_cast<int>(q.size()));
                }
                rec.check("c4-free color " + std::to_string(c), "no induced C4", true, free, free);
                rec.check("omega color " + std::to_string(c), "omega == 2", 2, omega, omega == 2);
            }
        });
        rec.finish(suite);
    }

    {
        Record rec("k4 two paths");
        guarded(rec, [&] {
            MultiColoring col = construct_k4_two_paths();
            auto th = covers::theta(col);
            rec.check("theta", "theta == 2", 2, th ? json(*th) : json(nullptr), th == 2);
            for (Color c = 1; c <= 2; ++c) {
                Graph g = color_graph(col, c);
                auto cert = chordal::is_chordal(g);
                int omega = cert.chordal() ? static_cast<int>(chordal::max_clique_chordal(g, *cert.peo).size()) : -1;
                rec.check("omega color " + std::to_string(c), "omega == 2", 2, omega, omega == 2);
            }
        });
        rec.finish(suite);
    }

    {
        Record rec("k5star");
        guarded(rec, [&] {
            MultiColoring col = construct_k5star();
            int covered = verify_cover(col, covers::exact_max_strong_cover(col)).covered;
            rec.check("max cover", "max strong cover == 4", 4, covered, covered == 4);
            auto th = covers::theta(col);
            rec.check("theta", "no strong cover", nullptr, th ? json(*th) : json(nullptr), !th.has_value());
        });
        rec.finish(suite);
    }

    for (auto [n, t] : {std::pair{6, 3}, {9, 3}, {8, 4}, {10, 3}}) {
        Record rec("partition n=" + std::to_string(n) + " t=" + std::to_string(t));
        guarded(rec, [&] {
            MultiColoring col = coloring_from_intervals(construct_partition_coloring(n, t));
            int omega = 0;
            for (Color c = 1; c <= t; ++c) {
                for (const auto& q : covers::color_maximal_cliques(col, c)) {
                    omega = std::max(omega, static_cast<int>(q.size()));
                }
            }
            long long limit = ceil_div(n, t) + 1;
            rec.check("omega", "largest monochromatic clique <= ceil(n/t)+1", limit, omega, omega <= limit);
        });
        rec.finish(suite);
    }
    return finish(suite);
}

}  // namespace strongcover::harness
