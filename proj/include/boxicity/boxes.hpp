#pragma once

#include "boxicity/cover.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/interval.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace boxicity {

/// One coordinate of a box: either the whole real line or a bounded
/// integer interval.
class Extent {
  public:
    static auto full() -> Extent { return Extent(); }
    static auto bounded(int left, int right) -> Extent;
    static auto bounded(const Interval &i) -> Extent { return bounded(i.left, i.right); }

    [[nodiscard]] auto is_full() const -> bool { return ! bounds_.has_value(); }
    [[nodiscard]] auto interval() const -> const Interval & { return bounds_.value(); }
    [[nodiscard]] auto intersects(const Extent &other) const -> bool
    {
        return is_full() || other.is_full() || bounds_->intersects(*other.bounds_);
    }

    auto operator==(const Extent &) const -> bool = default;

  private:
    Extent() = default;
    std::optional<Interval> bounds_;
};

class BoxError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Axis-parallel box per vertex; every box has `dimension` extents.
struct BoxRepresentation {
    int dimension = 0;
    std::vector<std::vector<Extent>> boxes;

    [[nodiscard]] auto order() const -> int { return static_cast<int>(boxes.size()); }
    /// Number of bounded extents of vertex v.
    [[nodiscard]] auto vertex_locality(Vertex v) const -> int;
    [[nodiscard]] auto locality() const -> int;
    /// Throws BoxError if some box has the wrong number of extents.
    auto validate() const -> void;
};

[[nodiscard]] auto full_representation(int vertices, int dimension) -> BoxRepresentation;

[[nodiscard]] auto intersection_graph_of_boxes(const BoxRepresentation &b) -> Graph;

/// 1-local representation of the complement of the host of a single-bag
/// Cbar cover: one coordinate per edge-bearing component of the bag.
[[nodiscard]] auto union_cover_to_boxes(const CoCover &c) -> BoxRepresentation;

/// One coordinate per bag: the interval model of the complement of the
/// bag's spanned subgraph on its support, the full line elsewhere.
/// `host_original` must be the complement of the cover's host.
[[nodiscard]] auto local_cover_to_boxes(const CoCover &c, const Graph &host_original) -> BoxRepresentation;

/// Projection onto each coordinate: the pairs of bounded, disjoint extents
/// form one bag. Coordinates without such pairs contribute no bag.
[[nodiscard]] auto boxes_to_cover(const BoxRepresentation &b) -> CoCover;

/// Concatenates the extents of each vertex.
[[nodiscard]] auto product_of_representations(std::span<const BoxRepresentation> bs) -> BoxRepresentation;

} // namespace boxicity
