#pragma once

#include "boxicity/cover.hpp"
#include "boxicity/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxicity {

/// A 1-global cover: `split_graph` folds onto the host through `fold_map`
/// (one host vertex per split vertex).
struct FoldedCover {
    Graph split_graph;
    std::vector<Vertex> fold_map;
};

class FoldedCoverError : public std::runtime_error {
  public:
    enum class Kind { malformed_map, dependent_fiber, non_homomorphism, uncovered_edge, class_violation };

    FoldedCoverError(Kind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] auto kind() const -> Kind { return kind_; }

  private:
    Kind kind_;
};

/// Checks that the fold map is a homomorphism onto the host with independent
/// fibers, that every host edge has a preimage, and that the split graph is
/// in the class. Returns the largest fiber size. Isolated host vertices may
/// have empty fibers.
auto verify_folded_cover(const Graph &host, const FoldedCover &f, CoverClass c) -> int;

/// Disjoint union of the bags' spanned subgraphs, each copy mapped back to
/// its original vertex. The cover is verified first.
[[nodiscard]] auto local_cover_to_folded(const CoCover &c) -> FoldedCover;

struct FoldedSearchResult {
    int locality = 0;
    FoldedCover cover;
};

constexpr int folded_search_vertex_limit = 12;

/// Exhaustive search over vertex splits: each non-isolated host vertex is
/// split into 1..max_s copies (isolated ones keep a single copy), at most
/// max_total_vertices in all, and each host edge is replaced by a nonempty
/// set of edges between the two fibers.
/// Returns the smallest locality admitting a split graph in the class, or
/// nullopt if there is none within the bounds. Throws std::invalid_argument
/// when max_total_vertices exceeds folded_search_vertex_limit.
[[nodiscard]] auto folded_search_bounded(const Graph &host, int max_s, int max_total_vertices, CoverClass c)
    -> std::optional<FoldedSearchResult>;

/// Identifies the vertices of each fiber one pair at a time and returns the
/// result on the host's vertex ids.
[[nodiscard]] auto fold_along_fibers(const FoldedCover &f, int host_order) -> Graph;

} // namespace boxicity
