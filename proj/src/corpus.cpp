#include "strongcover/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "strongcover/constructions.hpp"
#include "strongcover/random.hpp"

namespace strongcover::corpus {

namespace {

using constructions::IntervalParams;
using constructions::SubtreeParams;

IntervalParams interval_preset(std::uint64_t pick)
{
    static const std::array<IntervalParams, 5> presets = {{
        {24, 12, 0.90, 1, 60},
        {30, 10, 0.85, 2, 60},
        {16, 16, 0.60, 1, 60},
        {30, 8, 1.00, 2, 60},
        {40, 14, 0.95, 3, 60},
    }};
    return presets[pick % presets.size()];
}

SubtreeParams subtree_preset(std::uint64_t pick)
{
    static const std::array<SubtreeParams, 5> presets = {{
        {8, 4, 0.90, 1, 60},
        {12, 6, 0.85, 2, 60},
        {6, 3, 0.70, 1, 60},
        {16, 8, 1.00, 2, 60},
        {10, 5, 0.95, 3, 60},
    }};
    return presets[pick % presets.size()];
}

// The onefourth construction minus at most two members, with members and
// tracks shuffled. Every such family is still pairwise intersecting.
Instance onefourth_restriction(const ChordalSpec& spec, std::uint64_t seed, Rng& rng)
{
    TIntervalFamily full = constructions::construct_onefourth(spec.t);
    const int largest = std::min(full.n(), spec.n_max);
    const int size = largest - static_cast<int>(rng.uniform(0, std::min(2, largest - spec.n_min)));
    std::vector<int> members(full.n());
    std::iota(members.begin(), members.end(), 0);
    std::vector<int> tracks(spec.t);
    std::iota(tracks.begin(), tracks.end(), 0);
    for (auto* v : {&members, &tracks}) {
        for (std::size_t i = v->size(); i > 1; --i) {
            std::swap((*v)[i - 1], (*v)[rng.uniform(0, static_cast<long long>(i) - 1)]);
        }
    }
    TIntervalFamily fam;
    fam.t = spec.t;
    for (int m = 0; m < size; ++m) {
        std::vector<ClosedInterval> row;
        for (int j : tracks) {
            row.push_back(full.members[members[m]][j]);
        }
        fam.members.push_back(std::move(row));
    }
    Instance inst{"onefourth-restricted", seed, spec.k, coloring_from_intervals(fam), fam, std::nullopt};
    return inst;
}

}  // namespace

std::vector<Instance> chordal_tk(const ChordalSpec& spec)
{
    if (spec.n_min < spec.k || spec.n_max < spec.n_min) {
        throw InputError("corpus needs k <= n_min <= n_max");
    }
    std::vector<Instance> out;
    const int budget = spec.count * 40;
    for (int i = 0; i < budget && static_cast<int>(out.size()) < spec.count; ++i) {
        const std::uint64_t seed = derive_seed(spec.seed, static_cast<std::uint64_t>(i));
        Rng rng(seed);
        const int n = static_cast<int>(rng.uniform(spec.n_min, spec.n_max));
        const std::uint64_t preset = static_cast<std::uint64_t>(rng.uniform(0, 1000));

        if (i % 5 == 4 && !out.empty()) {
            const Instance& base = out[rng.uniform(0, static_cast<long long>(out.size()) - 1)];
            if (base.coloring.n() < spec.n_max) {
                Vertex v = static_cast<Vertex>(rng.uniform(0, base.coloring.n() - 1));
                int size = static_cast<int>(rng.uniform(2, std::min(3, spec.n_max - base.coloring.n() + 1)));
                Instance inst{"substituted", seed, spec.k, constructions::clique_substitute(base.coloring, v, size),
                              std::nullopt, std::nullopt};
                out.push_back(std::move(inst));
                continue;
            }
        }

        if (spec.k == 2 && i % 4 == 1 && 4 * spec.t - 5 >= spec.n_min) {
            out.push_back(onefourth_restriction(spec, seed, rng));
            continue;
        }

        Instance inst;
        inst.seed = seed;
        inst.k = spec.k;
        if (i % 2 == 0) {
            auto sampled = constructions::sample_kwise_interval_family(n, spec.t, spec.k, seed, interval_preset(preset));
            if (!sampled.family) {
                continue;
            }
            inst.source = "intervals";
            if (i % 3 != 0) {
                sampled.family = constructions::shrink_kwise(std::move(*sampled.family), spec.k,
                                                             derive_seed(seed, 1), 6 * n * spec.t);
                inst.source = "intervals-shrunk";
            }
            inst.coloring = coloring_from_intervals(*sampled.family);
            inst.intervals = std::move(sampled.family);
        } else {
            auto sampled = constructions::sample_kwise_subtree_family(n, spec.t, spec.k, seed, subtree_preset(preset));
            if (!sampled.family) {
                continue;
            }
            inst.source = "subtrees";
            if (i % 3 != 0) {
                sampled.family = constructions::shrink_kwise(std::move(*sampled.family), spec.k,
                                                             derive_seed(seed, 1), 6 * n * spec.t);
                inst.source = "subtrees-shrunk";
            }
            inst.coloring = coloring_from_subtrees(*sampled.family);
            inst.subtrees = std::move(sampled.family);
        }
        if (is_tk_coloring(inst.coloring, spec.k).holds) {
            out.push_back(std::move(inst));
        }
    }
    return out;
}

std::vector<Instance> k5star_blowups(const std::vector<int>& sizes)
{
    std::vector<Instance> out;
    const MultiColoring star = constructions::construct_k5star();
    const std::size_t m = sizes.size();
    std::size_t total = 1;
    for (int i = 0; i < 5; ++i) {
        total *= m;
    }
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> vec(5);
        std::size_t c = code;
        for (int i = 0; i < 5; ++i) {
            vec[i] = sizes[c % m];
            c /= m;
        }
        out.push_back({"k5star-blowup", code, 2, constructions::blow_up({star, vec}), std::nullopt, std::nullopt});
    }
    return out;
}

std::vector<Instance> c4free_22(int count, int n_min, int n_max, std::uint64_t seed)
{
    std::vector<Instance> out;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(s);
        const bool with_star = i % 2 == 1;
        const int n = static_cast<int>(rng.uniform(with_star ? std::max(n_min, 5) : n_min, n_max));
        out.push_back({with_star ? "c4free-k5star" : "c4free-random", s, 2,
                       constructions::random_c4free_22(n, s, with_star), std::nullopt, std::nullopt});
    }
    return out;
}

}  // namespace strongcover::corpus
