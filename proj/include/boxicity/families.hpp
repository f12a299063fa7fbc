#pragma once

#include "boxicity/boxes.hpp"
#include "boxicity/cover.hpp"
#include "boxicity/graph.hpp"

#include <vector>

namespace boxicity {

/// k disjoint edges {2i, 2i+1}.
[[nodiscard]] auto matching(int k) -> Graph;
[[nodiscard]] auto complete(int n) -> Graph;
/// 0-1-...-(n-1)-0, n >= 3.
[[nodiscard]] auto cycle(int n) -> Graph;
[[nodiscard]] auto path(int n) -> Graph;
/// Complement of matching(3).
[[nodiscard]] auto octahedron() -> Graph;
/// Line graph of K_n; vertices are the edges of K_n in lexicographic order.
[[nodiscard]] auto line_of_complete(int n) -> Graph;

/// Cover of L(K_n) whose i-th bag is the clique of all K_n-edges at vertex
/// i. Every L(K_n) edge lies in exactly one bag and every vertex in two.
[[nodiscard]] auto star_clique_cover(int n) -> CoCover;

/// Point-line incidence graph of the projective plane over Z_q, q prime.
/// Points come first (ids 0..q^2+q), then lines; both are normalised
/// vectors (first nonzero coordinate 1) in lexicographic order.
[[nodiscard]] auto projective_incidence(int q) -> Graph;

/// Proper colouring in which any two colour classes induce a forest.
struct AcyclicColoring {
    int colors = 0;
    std::vector<int> color;
};

[[nodiscard]] auto is_acyclic_coloring(const Graph &g, const AcyclicColoring &c) -> bool;

constexpr int acyclic_chromatic_vertex_limit = 10;

/// Exact acyclic chromatic number with a witness colouring.
[[nodiscard]] auto acyclic_chromatic_number(const Graph &g) -> AcyclicColoring;

/// Product over all colour pairs {i, j} of a 2-dimensional representation
/// of the forest induced by colours i and j, with vertices of other colours
/// full in both coordinates. A colouring with fewer than two colours is
/// treated as a two-colouring with an empty second class.
[[nodiscard]] auto acyclic_coloring_to_boxes(const Graph &g, const AcyclicColoring &c) -> BoxRepresentation;

} // namespace boxicity
