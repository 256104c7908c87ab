#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace strongcover::harness {

using nlohmann::json;

/// Aggregated outcome of one verification suite. `report` lists every instance
/// with the inequalities that were tested.
struct SuiteResult {
    json report;
    int passed = 0;
    int failed = 0;

    bool ok() const { return failed == 0; }
};

struct LowerParams {
    int n_max = 12;
    int t = 3;
    int k = 3;
    int samples = 100;
    std::uint64_t seed = 1;
    bool all_orders = true;  // every color permutation when t <= 5, identity otherwise
};

/// Greedy cover against (k-1)n/(k+1) and the multiplicity counting chain.
SuiteResult verify_lower(const LowerParams& params);

struct SampleParams {
    int samples = 100;
    int n_max = 12;
    std::uint64_t seed = 1;
    int max_exact = 10;  // cross-check against the exact oracle up to this n
};

/// Chordal (3,3)-colorings: at most three cliques covering everything.
SuiteResult verify_t33(const SampleParams& params);

/// Chordal (t,t)-colorings: two cliques for even t, three for odd t.
SuiteResult verify_tt(int t, const SampleParams& params);

/// C4-free (2,2)-colorings, including all K5* blow-ups over sizes {1,2,3}:
/// coverage at least ceil(4n/5).
SuiteResult verify_c4free22(const SampleParams& params);

/// Structural checks of every explicit construction.
SuiteResult verify_constructions();

}  // namespace strongcover::harness
