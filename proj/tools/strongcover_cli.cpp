// strongcover: generate instances, check properties, compute strong covers and
// run the verification suites. Every command writes one JSON document to
// standard output.
//
// Exit codes: 0 all checks pass, 1 a property or bound failed, 2 usage or
// parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "strongcover/chordal.hpp"
#include "strongcover/constructions.hpp"
#include "strongcover/covers.hpp"
#include "strongcover/harness.hpp"
#include "strongcover/io.hpp"

namespace sc = strongcover;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Loaded {
    sc::io::Instance instance;
    sc::MultiColoring coloring;
    json meta;
};

Loaded load(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    json doc = sc::io::parse(text);
    Loaded out{sc::io::instance_from_json(doc), {}, doc.value("meta", json::object())};
    out.coloring = sc::io::instance_coloring(out.instance);
    return out;
}

json instance_header(const Loaded& in, std::optional<int> k)
{
    json h = {{"kind", sc::io::instance_kind(in.instance)},
              {"n", in.coloring.n()},
              {"t", in.coloring.t()},
              {"source", in.meta.value("construction", std::string("input"))},
              {"seed", in.meta.contains("params") ? in.meta["params"].value("seed", json(nullptr)) : json(nullptr)}};
    h["k"] = k ? json(*k) : json(nullptr);
    return h;
}

json check_entry(const std::string& name, const std::string& inequality, json expected, json observed, bool pass)
{
    return {{"name", name},
            {"inequality", inequality},
            {"expected", std::move(expected)},
            {"observed", std::move(observed)},
            {"pass", pass}};
}

bool all_pass(const json& checks)
{
    for (const auto& c : checks) {
        if (!c.at("pass").get<bool>()) {
            return false;
        }
    }
    return true;
}

int emit(const json& report, bool pass)
{
    std::cout << report.dump(2) << '\n';
    return pass ? kExitPass : kExitFail;
}

long long ceil_div(long long a, long long b)
{
    return (a + b - 1) / b;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
    std::string name;
    int t = 3;
    int n = 10;
    int k = 0;
    std::uint64_t seed = 1;
    std::string base = "k5star";
    std::vector<int> sizes;
};

json gen_document(const GenOptions& o)
{
    using namespace sc::constructions;
    json params = json::object();
    json doc;
    if (o.name == "k5star") {
        doc = sc::io::to_json(construct_k5star());
    } else if (o.name == "k4paths") {
        doc = sc::io::to_json(construct_k4_two_paths());
    } else if (o.name == "k8c4free") {
        doc = sc::io::to_json(construct_k8_c4free_3col());
    } else if (o.name == "onefourth") {
        params = {{"t", o.t}};
        doc = sc::io::to_json(construct_onefourth(o.t));
    } else if (o.name == "partition") {
        params = {{"n", o.n}, {"t", o.t}};
        doc = sc::io::to_json(construct_partition_coloring(o.n, o.t));
    } else if (o.name == "intervals" || o.name == "subtrees") {
        params = {{"n", o.n}, {"t", o.t}, {"seed", o.seed}, {"k", o.k}};
        const bool intervals = o.name == "intervals";
        if (o.k >= 2) {
            IntervalParams ip{24, 12, 0.9, 1, 200};
            SubtreeParams sp{12, 6, 0.9, 1, 200};
            if (intervals) {
                auto s = sample_kwise_interval_family(o.n, o.t, o.k, o.seed, ip);
                if (!s.family) {
                    throw std::runtime_error("retry budget exhausted after " + std::to_string(s.attempts) + " attempts");
                }
                doc = sc::io::to_json(*s.family);
            } else {
                auto s = sample_kwise_subtree_family(o.n, o.t, o.k, o.seed, sp);
                if (!s.family) {
                    throw std::runtime_error("retry budget exhausted after " + std::to_string(s.attempts) + " attempts");
                }
                doc = sc::io::to_json(*s.family);
            }
        } else {
            doc = intervals ? sc::io::to_json(random_interval_family(o.n, o.t, o.seed))
                            : sc::io::to_json(random_subtree_family(o.n, o.t, o.seed));
        }
    } else if (o.name == "blowup") {
        sc::MultiColoring base;
        if (o.base == "k5star") {
            base = construct_k5star();
        } else if (o.base == "k4paths") {
            base = construct_k4_two_paths();
        } else if (o.base == "k8c4free") {
            base = construct_k8_c4free_3col();
        } else {
            throw UsageError("unknown blow-up base " + o.base);
        }
        std::vector<int> sizes = o.sizes.empty() ? std::vector<int>(base.n(), 2) : o.sizes;
        params = {{"base", o.base}, {"sizes", sizes}};
        doc = sc::io::to_json(blow_up({base, sizes}));
    } else if (o.name == "c4free22") {
        params = {{"n", o.n}, {"seed", o.seed}};
        doc = sc::io::to_json(random_c4free_22(o.n, o.seed, false));
    } else {
        throw UsageError("unknown construction " + o.name);
    }
    doc["meta"] = {{"generator", "strongcover"},
                   {"version", STRONGCOVER_VERSION},
                   {"construction", o.name},
                   {"params", params}};
    return doc;
}

// ---------------------------------------------------------------- check

struct CheckOptions {
    std::string input;
    bool chordal = false;
    bool c4free = false;
    std::optional<int> tk;
    std::optional<int> kfold;
};

int run_check(const CheckOptions& o)
{
    if (!o.chordal && !o.c4free && !o.tk && !o.kfold) {
        throw UsageError("check needs at least one of --chordal, --c4free, --tk, --kfold");
    }
    Loaded in = load(o.input);
    json checks = json::array();
    json timing = json::object();

    if (o.chordal) {
        Stopwatch sw;
        for (sc::Color c = 1; c <= in.coloring.t(); ++c) {
            auto cert = sc::chordal::is_chordal(sc::color_graph(in.coloring, c));
            json entry = check_entry("chordal color " + std::to_string(c), "color graph has a PEO", true,
                                     cert.chordal(), cert.chordal());
            entry["witness"] = cert.chordal() ? json(*cert.peo) : json(*cert.hole);
            checks.push_back(std::move(entry));
        }
        timing["chordal"] = sw.ms();
    }
    if (o.c4free) {
        Stopwatch sw;
        for (sc::Color c = 1; c <= in.coloring.t(); ++c) {
            auto r = sc::chordal::induced_c4_free(sc::color_graph(in.coloring, c));
            json entry =
                check_entry("c4free color " + std::to_string(c), "no induced C4", true, r.c4_free, r.c4_free);
            if (r.witness) {
                entry["witness"] = *r.witness;
            }
            checks.push_back(std::move(entry));
        }
        timing["c4free"] = sw.ms();
    }
    if (o.tk) {
        Stopwatch sw;
        auto r = sc::is_tk_coloring(in.coloring, *o.tk);
        json entry = check_entry("tk", "every k-subset spans a monochromatic clique", true, r.holds, r.holds);
        if (r.witness) {
            entry["witness"] = *r.witness;
        }
        checks.push_back(std::move(entry));
        if (const auto* fam = std::get_if<sc::TIntervalFamily>(&in.instance)) {
            bool family = sc::is_kwise_intersecting(*fam, *o.tk).holds;
            checks.push_back(check_entry("helly", "k-wise intersecting agrees with the coloring", r.holds, family,
                                         family == r.holds));
        } else if (const auto* sub = std::get_if<sc::TSubtreeFamily>(&in.instance)) {
            bool family = sc::is_kwise_intersecting(*sub, *o.tk).holds;
            checks.push_back(check_entry("helly", "k-wise intersecting agrees with the coloring", r.holds, family,
                                         family == r.holds));
        }
        timing["tk"] = sw.ms();
    }
    if (o.kfold) {
        Stopwatch sw;
        int m = sc::kfold_min_colors(in.coloring);
        checks.push_back(check_entry("kfold", "every edge carries >= k colors", *o.kfold, m, m >= *o.kfold));
        timing["kfold"] = sw.ms();
    }

    const bool pass = all_pass(checks);
    json report = {{"command", "check"},
                   {"instance", instance_header(in, o.tk)},
                   {"checks", std::move(checks)},
                   {"timing_ms", std::move(timing)},
                   {"pass", pass}};
    return emit(report, pass);
}

// ---------------------------------------------------------------- cover

struct CoverOptions {
    std::string algorithm;
    std::string input;
    std::optional<int> k;
    std::vector<int> order;
    bool all_orders = false;
    int max_exact = sc::covers::kDefaultMaxExact;
};

void require(bool ok, const std::string& what, std::optional<sc::VertexList> witness = std::nullopt)
{
    if (!ok) {
        throw sc::covers::PreconditionError(what, std::move(witness));
    }
}

void require_tk(const sc::MultiColoring& col, int k)
{
    auto r = sc::is_tk_coloring(col, k);
    require(r.holds, "not a (t," + std::to_string(k) + ")-coloring", r.witness);
}

json cover_section(const sc::MultiColoring& col, const sc::StrongCover& cover, json& checks)
{
    sc::CoverReport r = sc::verify_cover(col, cover);
    checks.push_back(check_entry("valid", "cover is a strong cover", true, r.valid, r.valid));
    return {{"cover", sc::io::to_json(cover)}, {"cliques", cover.clique_count()}, {"covered", r.covered}};
}

int run_cover(const CoverOptions& o)
{
    Loaded in = load(o.input);
    const sc::MultiColoring& col = in.coloring;
    const int n = col.n();
    json checks = json::array();
    json result = json::object();
    json timing = json::object();
    std::optional<int> k = o.k;
    std::optional<sc::StrongCover> main_cover;

    try {
        Stopwatch sw;
        if (o.algorithm == "greedy") {
            if (!k) {
                k = 2;
            }
            require_tk(col, *k);
            sc::covers::require_chordal_colors(col);
            std::vector<std::vector<sc::Color>> orders;
            if (!o.order.empty()) {
                orders.push_back(o.order);
            } else {
                std::vector<sc::Color> identity(col.t());
                std::iota(identity.begin(), identity.end(), 1);
                orders.push_back(identity);
                while (o.all_orders && std::ranges::next_permutation(identity).found) {
                    orders.push_back(identity);
                }
            }
            json runs = json::array();
            for (const auto& order : orders) {
                auto g = sc::covers::greedy_strong_cover(col, order);
                json run = cover_section(col, g.cover, checks);
                const long long covered = run["covered"].get<long long>();
                const std::string tag = " order=" + json(order).dump();
                checks.push_back(check_entry("greedy-bound" + tag, "(k+1)*covered >= (k-1)*n",
                                             ceil_div((*k - 1LL) * n, *k + 1), covered,
                                             (*k + 1) * covered >= (*k - 1LL) * n));
                auto chain = sc::covers::counting_chain(col, g.trace, *k);
                checks.push_back(check_entry("counting-chain" + tag, "(k-1)|T|(|T|-1)/2 <= M <= covered(|T|-1)",
                                             json::array({chain.lower, chain.upper}), chain.multiplicity,
                                             chain.holds));
                run["order"] = order;
                run["trace"] = sc::io::to_json(g.trace);
                if (!main_cover) {
                    main_cover = g.cover;
                }
                runs.push_back(std::move(run));
            }
            result["runs"] = std::move(runs);
        } else if (o.algorithm == "exact") {
            auto cover = sc::covers::exact_max_strong_cover(col, o.max_exact);
            result = cover_section(col, cover, checks);
            auto th = sc::covers::theta(col, o.max_exact);
            result["theta"] = th ? json(*th) : json(nullptr);
            main_cover = cover;
        } else if (o.algorithm == "t33") {
            require(col.t() == 3, "t33 needs exactly three colors");
            require_tk(col, 3);
            sc::covers::require_chordal_colors(col);
            k = 3;
            auto cover = sc::covers::strong_cover_33(col);
            result = cover_section(col, cover, checks);
            checks.push_back(check_entry("all-covered", "covered == n", n, result["covered"], result["covered"] == n));
            checks.push_back(
                check_entry("cliques", "cliques <= 3", 3, cover.clique_count(), cover.clique_count() <= 3));
            main_cover = cover;
        } else if (o.algorithm == "tt") {
            require_tk(col, col.t());
            sc::covers::require_chordal_colors(col);
            k = col.t();
            const int limit = col.t() % 2 == 0 ? 2 : 3;
            auto cover = sc::covers::strong_cover_tt(col);
            result = cover_section(col, cover, checks);
            checks.push_back(check_entry("all-covered", "covered == n", n, result["covered"], result["covered"] == n));
            checks.push_back(check_entry("cliques", "cliques <= " + std::to_string(limit), limit,
                                         cover.clique_count(), cover.clique_count() <= limit));
            main_cover = cover;
        } else if (o.algorithm == "c4free22") {
            k = 2;
            auto cover = sc::covers::strong_cover_c4free_22(col);
            result = cover_section(col, cover, checks);
            const long long need = ceil_div(4LL * n, 5);
            checks.push_back(check_entry("coverage", "covered >= ceil(4n/5)", need, result["covered"],
                                         result["covered"].get<long long>() >= need));
            main_cover = cover;
        } else {
            throw UsageError("unknown algorithm " + o.algorithm);
        }
        timing[o.algorithm] = sw.ms();
    } catch (const sc::covers::PreconditionError& e) {
        json report = {{"command", "cover"},
                       {"algorithm", o.algorithm},
                       {"instance", instance_header(in, k)},
                       {"precondition", {{"pass", false}, {"reason", e.what()}}},
                       {"pass", false}};
        if (e.witness()) {
            report["precondition"]["witness"] = *e.witness();
        }
        return emit(report, false);
    } catch (const sc::covers::TheoremViolation& e) {
        json report = {{"command", "cover"},
                       {"algorithm", o.algorithm},
                       {"instance", instance_header(in, k)},
                       {"error", std::string("theorem violation: ") + e.what()},
                       {"counterexample", sc::io::to_json(e.instance())},
                       {"pass", false}};
        return emit(report, false);
    }

    if (main_cover) {
        if (const auto* fam = std::get_if<sc::TIntervalFamily>(&in.instance)) {
            if (sc::verify_cover(col, *main_cover).valid) {
                result["piercing_points"] = sc::io::to_json(sc::piercing_points(*fam, *main_cover));
            }
        }
    }
    const bool pass = all_pass(checks);
    json report = {{"command", "cover"},
                   {"algorithm", o.algorithm},
                   {"instance", instance_header(in, k)},
                   {"precondition", {{"pass", true}}},
                   {"result", std::move(result)},
                   {"checks", std::move(checks)},
                   {"timing_ms", std::move(timing)},
                   {"pass", pass}};
    return emit(report, pass);
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string suite;
    int n = 12;
    int t = 3;
    int k = 3;
    int samples = 100;
    std::uint64_t seed = 1;
    int max_exact = 10;
    bool identity_order = false;
};

int run_verify(const VerifyOptions& o)
{
    namespace h = sc::harness;
    Stopwatch sw;
    h::SuiteResult r;
    const h::SampleParams sample{o.samples, o.n, o.seed, o.max_exact};
    if (o.suite == "lower") {
        r = h::verify_lower({o.n, o.t, o.k, o.samples, o.seed, !o.identity_order});
    } else if (o.suite == "t33") {
        r = h::verify_t33(sample);
    } else if (o.suite == "tt") {
        r = h::verify_tt(o.t, sample);
    } else if (o.suite == "c4free22") {
        r = h::verify_c4free22(sample);
    } else if (o.suite == "constructions") {
        r = h::verify_constructions();
    } else {
        throw UsageError("unknown suite " + o.suite);
    }
    r.report["command"] = "verify";
    r.report["timing_ms"] = {{"total", sw.ms()}};
    return emit(r.report, r.ok());
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Strong covers of (t,k)-colorings: generators, checks, cover algorithms and verification suites"};
    app.require_subcommand(1);
    app.set_version_flag("--version", STRONGCOVER_VERSION);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit a construction or a seeded random instance as JSON");
    gen_cmd->add_option("name", gen.name, "k5star | k4paths | k8c4free | onefourth | partition | intervals | "
                                          "subtrees | blowup | c4free22")
        ->required();
    gen_cmd->add_option("--t", gen.t, "Number of colors or tracks");
    gen_cmd->add_option("--n", gen.n, "Number of vertices or members");
    gen_cmd->add_option("--k", gen.k, "Resample random families until k-wise intersecting");
    gen_cmd->add_option("--seed", gen.seed, "Seed for random generators");
    gen_cmd->add_option("--base", gen.base, "Base coloring for blowup: k5star | k4paths | k8c4free");
    gen_cmd->add_option("--sizes", gen.sizes, "Class sizes for blowup")->delimiter(',');

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Run property checks on an instance");
    check_cmd->add_option("input", check.input, "Instance file, or - for standard input")->required();
    check_cmd->add_flag("--chordal", check.chordal, "Every color graph is chordal");
    check_cmd->add_flag("--c4free", check.c4free, "Every color graph is induced-C4-free");
    check_cmd->add_option("--tk", check.tk, "The coloring is a (t,K)-coloring");
    check_cmd->add_option("--kfold", check.kfold, "Every edge carries at least K colors");

    CoverOptions cover;
    auto* cover_cmd = app.add_subcommand("cover", "Compute a strong cover and check the matching bound");
    cover_cmd->add_option("algorithm", cover.algorithm, "greedy | exact | t33 | tt | c4free22")->required();
    cover_cmd->add_option("input", cover.input, "Instance file, or - for standard input")->required();
    cover_cmd->add_option("--k", cover.k, "k for the greedy bound (default 2)");
    cover_cmd->add_option("--order", cover.order, "Greedy color order, e.g. 2,1,3")->delimiter(',');
    cover_cmd->add_flag("--all-orders", cover.all_orders, "Run the greedy for every color order");
    cover_cmd->add_option("--max-exact", cover.max_exact, "Largest n accepted by the exact search");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a seeded verification suite");
    verify_cmd->add_option("suite", verify.suite, "lower | t33 | tt | c4free22 | constructions")->required();
    verify_cmd->add_option("--n", verify.n, "Largest instance size");
    verify_cmd->add_option("--t", verify.t, "Number of colors");
    verify_cmd->add_option("--k", verify.k, "k for the lower suite");
    verify_cmd->add_option("--samples", verify.samples, "Number of random instances");
    verify_cmd->add_option("--seed", verify.seed, "Corpus seed");
    verify_cmd->add_option("--max-exact", verify.max_exact, "Cross-check against the exact oracle up to this n");
    verify_cmd->add_flag("--identity-order", verify.identity_order, "Only run the greedy in the order 1..t");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*gen_cmd) {
            std::cout << gen_document(gen).dump(2) << '\n';
            return kExitPass;
        }
        if (*check_cmd) {
            return run_check(check);
        }
        if (*cover_cmd) {
            return run_cover(cover);
        }
        return run_verify(verify);
    } catch (const UsageError& e) {
        std::cerr << "strongcover: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sc::InputError& e) {
        std::cerr << "strongcover: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "strongcover: " << e.what() << '\n';
        return kExitFail;
    }
}
