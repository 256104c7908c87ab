#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongcover/coloring.hpp"

namespace strongcover::covers {

inline constexpr int kDefaultMaxExact = 40;

/// The input does not satisfy an algorithm's precondition.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, std::optional<VertexList> witness = std::nullopt)
        : std::runtime_error(what), witness_(std::move(witness))
    {
    }
    const std::optional<VertexList>& witness() const { return witness_; }

private:
    std::optional<VertexList> witness_;
};

/// A color graph that should be chordal contains a hole.
class NonChordalColor : public PreconditionError {
public:
    NonChordalColor(Color color, VertexList hole)
        : PreconditionError("color " + std::to_string(color) + " is not chordal", hole), color_(color)
    {
    }
    Color color() const { return color_; }

private:
    Color color_;
};

/// An exact oracle was asked for an instance above its size cap.
class SizeLimitExceeded : public InputError {
public:
    using InputError::InputError;
};

/// A step that a theorem guarantees to succeed failed. Carries the instance so
/// the failure can be replayed.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(const std::string& what, MultiColoring instance)
        : std::runtime_error(what), instance_(std::move(instance))
    {
    }
    const MultiColoring& instance() const { return instance_; }

private:
    MultiColoring instance_;
};

struct GreedyStep {
    Color color = 0;
    VertexList clique;
    int remaining = 0;  // vertices left after removing the clique
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
    VertexList uncovered;
};

struct GreedyResult {
    StrongCover cover;
    GreedyTrace trace;
};

/// Throws NonChordalColor for the first color graph with a hole.
void require_chordal_colors(const MultiColoring& col);

/// Takes colors in `order` (1..t when empty) and removes a maximum clique of
/// each color from the remaining vertices.
GreedyResult greedy_strong_cover(const MultiColoring& col, std::span<const Color> order = {});

/// Sum over colors of the number of edges of that color inside `vertices`.
long long multiplicity_sum(const MultiColoring& col, std::span<const Vertex> vertices);

/// (k-1)|T|(|T|-1)/2 <= M <= covered(|T|-1), all in exact integers.
struct CountingChain {
    long long lower = 0;
    long long multiplicity = 0;
    long long upper = 0;
    bool holds = false;
};

CountingChain counting_chain(const MultiColoring& col, const GreedyTrace& trace, int k);

struct ResidualCheck {
    bool holds = true;
    std::optional<std::pair<Vertex, Vertex>> witness;
};

/// Every edge inside `vertices` carries at least k-1 colors.
ResidualCheck check_residual_multiplicity(const MultiColoring& col, std::span<const Vertex> vertices, int k);

/// Inclusion-maximal cliques of color `c`: PEO-based when the color graph is
/// chordal, Bron-Kerbosch otherwise.
std::vector<VertexList> color_maximal_cliques(const MultiColoring& col, Color c);

/// A strong cover of maximum coverage, by exhaustive branch and bound.
StrongCover exact_max_strong_cover(const MultiColoring& col, int max_n = kDefaultMaxExact);

/// Fewest cliques in a strong cover of all vertices; nothing if none exists.
std::optional<int> theta(const MultiColoring& col, int max_n = kDefaultMaxExact);

/// Cliques of colors `first` and `second` (at most one each) covering every
/// vertex, or nothing.
std::optional<StrongCover> two_clique_cover_exact(const MultiColoring& col, Color first, Color second,
                                                  int max_n = kDefaultMaxExact);

/// All-vertex cover by at most three cliques for a chordal (3,3)-coloring.
StrongCover strong_cover_33(const MultiColoring& col);

/// All-vertex cover for a chordal (t,t)-coloring: two cliques for even t,
/// at most three for odd t.
StrongCover strong_cover_tt(const MultiColoring& col);

using K5Star = std::array<Vertex, 5>;

/// Five vertices spanning a K5* in colors (red, blue), listed along the red
/// 5-cycle starting from the smallest vertex.
std::optional<K5Star> find_k5star(const MultiColoring& col, Color red, Color blue);

/// Classes X_0..X_4 of a maximal clique substitution into the seed K5*:
/// [X_i, X_i+1] red only, [X_i, X_i+2] blue only, both colors inside each X_i.
using BlowupParts = std::array<VertexList, 5>;
BlowupParts grow_blowup(const MultiColoring& col, const K5Star& seed, Color red = 1, Color blue = 2);

/// Red and blue clique covering at least ceil(4n/5) vertices of a C4-free
/// (2,2)-coloring.
StrongCover strong_cover_c4free_22(const MultiColoring& col);

}  // namespace strongcover::covers
