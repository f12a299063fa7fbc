#pragma once

#include "boxicity/graph.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

namespace boxicity {

/// Closed integer interval [left, right].
struct Interval {
    int left = 0;
    int right = 0;

    auto operator<=>(const Interval &) const = default;

    [[nodiscard]] auto intersects(const Interval &other) const -> bool
    {
        return std::max(left, other.left) <= std::min(right, other.right);
    }
};

/// One interval per vertex, indexed by vertex id.
struct IntervalModel {
    std::vector<Interval> intervals;

    auto operator==(const IntervalModel &) const -> bool = default;
};

class NotIntervalError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Perfect elimination ordering found by maximum cardinality search, or
/// nullopt when the graph is not chordal.
[[nodiscard]] auto perfect_elimination_ordering(const Graph &g) -> std::optional<std::vector<Vertex>>;

[[nodiscard]] auto is_chordal(const Graph &g) -> bool;

/// Some asteroidal triple, if one exists.
[[nodiscard]] auto find_asteroidal_triple(const Graph &g) -> std::optional<std::array<Vertex, 3>>;

[[nodiscard]] auto has_asteroidal_triple(const Graph &g) -> bool;

/// Chordal and free of asteroidal triples.
[[nodiscard]] auto is_interval(const Graph &g) -> bool;

[[nodiscard]] auto is_co_interval(const Graph &g) -> bool;

/// Every connected component is co-interval.
[[nodiscard]] auto is_union_co_interval(const Graph &g) -> bool;

/// Maximal cliques of a chordal graph, each sorted, in lexicographic order.
/// Throws NotIntervalError if the graph is not chordal.
[[nodiscard]] auto chordal_maximal_cliques(const Graph &g) -> std::vector<VertexSet>;

/// Builds an integer interval model from a consecutive ordering of the
/// maximal cliques. Components are laid out left to right; isolated vertices
/// get fresh singleton positions after every clique. The result is checked
/// against `g` before it is returned.
[[nodiscard]] auto interval_model(const Graph &g) -> IntervalModel;

[[nodiscard]] auto intersection_graph_of_intervals(const IntervalModel &m) -> Graph;

} // namespace boxicity
