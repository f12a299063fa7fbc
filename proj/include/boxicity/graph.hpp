#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxicity {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge &) const = default;
};

class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on the dense vertex range [0, n).
///
/// Keeps both a sorted neighbour list per vertex and an n*n adjacency
/// matrix; the matrix makes adjacency tests O(1), which the recognition
/// routines rely on heavily.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    /// Inserting an existing edge is a no-op. Self-loops and out-of-range
    /// endpoints throw GraphError.
    auto add_edge(Vertex a, Vertex b) -> void;

    [[nodiscard]] auto order() const -> int { return n_; }
    [[nodiscard]] auto size() const -> std::size_t { return edge_count_; }
    [[nodiscard]] auto adjacent(Vertex a, Vertex b) const -> bool
    {
        return matrix_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] != 0;
    }
    [[nodiscard]] auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] auto degree(Vertex v) const -> int { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// Edges in lexicographic order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    [[nodiscard]] auto is_complete() const -> bool;
    [[nodiscard]] auto valid_vertex(Vertex v) const -> bool { return v >= 0 && v < n_; }

    auto operator==(const Graph &other) const -> bool;

  private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
};

using VertexSet = std::vector<Vertex>;

[[nodiscard]] auto complement(const Graph &g) -> Graph;

/// Induced subgraph on `s`, relabelled 0..|s|-1 in increasing vertex order.
[[nodiscard]] auto induced_subgraph(const Graph &g, const VertexSet &s) -> Graph;

[[nodiscard]] auto disjoint_union(std::span<const Graph> gs) -> Graph;

/// Merges the larger of u, v into the smaller one; vertices above the
/// removed id shift down by one.
[[nodiscard]] auto identify_nonadjacent(const Graph &g, Vertex u, Vertex v) -> Graph;

[[nodiscard]] auto line_graph(const Graph &g) -> Graph;

/// Length of a shortest cycle, or nullopt for forests.
[[nodiscard]] auto girth(const Graph &g) -> std::optional<int>;

[[nodiscard]] auto has_induced_two_matching(const Graph &g) -> bool;

/// Connected components, each sorted, ordered by smallest member.
[[nodiscard]] auto connected_components(const Graph &g) -> std::vector<VertexSet>;

[[nodiscard]] auto is_forest(const Graph &g) -> bool;

/// Graph on the same vertex set containing exactly the given edges.
[[nodiscard]] auto spanning_edge_graph(int n, std::span<const Edge> edges) -> Graph;

/// The subgraph formed by the endpoints of `edges`, relabelled in increasing
/// vertex order. `support` receives the original ids.
[[nodiscard]] auto spanned_subgraph(std::span<const Edge> edges, VertexSet *support = nullptr) -> Graph;

class Graph6Error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// graph6, single size byte variant only (n <= 62).
[[nodiscard]] auto parse_graph6(std::string_view text) -> Graph;
[[nodiscard]] auto serialize_graph6(const Graph &g) -> std::string;

} // namespace boxicity
