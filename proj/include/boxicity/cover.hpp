#pragma once

#include "boxicity/graph.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxicity {

/// Covering class for the bags of a cover: co-interval graphs, or disjoint
/// unions of co-interval graphs.
enum class CoverClass { co_interval, union_co_interval };

[[nodiscard]] auto class_name(CoverClass c) -> std::string_view; // "C" or "Cbar"
[[nodiscard]] auto parse_class_name(std::string_view name) -> CoverClass;

/// Membership of a graph in the covering class. Isolated vertices never
/// matter.
[[nodiscard]] auto in_class(const Graph &g, CoverClass c) -> bool;

using Bag = std::vector<Edge>;

/// Edge cover of `host` (the complement of the graph whose parameter is
/// being certified). A bag's vertex support is the set of its edge
/// endpoints.
struct CoCover {
    Graph host;
    std::vector<Bag> bags;
    CoverClass cover_class = CoverClass::co_interval;
};

struct CoverStats {
    int globality = 0; // number of bags
    int locality = 0;  // max number of bag supports containing one vertex

    auto operator==(const CoverStats &) const -> bool = default;
};

class CoverError : public std::runtime_error {
  public:
    enum class Kind { foreign_edge, uncovered_edge, empty_bag, class_violation };

    CoverError(Kind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] auto kind() const -> Kind { return kind_; }

  private:
    Kind kind_;
};

[[nodiscard]] auto bag_support(const Bag &bag) -> VertexSet;

/// Checks every cover invariant and returns (t, s). Throws CoverError
/// describing the first violation found, in this order: edges outside the
/// host, empty bags, class violations, uncovered host edges.
auto verify_cover(const CoCover &c) -> CoverStats;

/// Number of bags whose support contains each vertex.
[[nodiscard]] auto vertex_loads(const CoCover &c) -> std::vector<int>;

/// Intersection over all bags of the complement of the bag padded to the
/// full vertex set. For a valid cover of complement(h) this is h again.
[[nodiscard]] auto intersection_of_bag_complements(const CoCover &c) -> Graph;

/// Splits every bag into its connected components, keeping bag order.
[[nodiscard]] auto split_into_components(const CoCover &c) -> CoCover;

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

struct SolveOptions {
    /// No limit when empty.
    std::optional<std::chrono::milliseconds> time_budget;
};

/// Result of an exact search. When `exact` is false the time budget ran
/// out: `value` is the best upper bound (realised by `witness`) and
/// `lower_bound` the last level proven infeasible plus one.
struct CoverSolution {
    int value = 0;
    int lower_bound = 0;
    bool exact = true;
    CoCover witness;
    CoverStats stats;
};

/// Cover of `host` using at most `bags` bags, or nullopt if none exists.
[[nodiscard]] auto find_global_cover(const Graph &host, int bags, CoverClass c, const SolveOptions &options = {})
    -> std::optional<CoCover>;

/// Cover of `host` with locality at most `locality` and any number of bags.
[[nodiscard]] auto find_local_cover(const Graph &host, int locality, CoverClass c, const SolveOptions &options = {})
    -> std::optional<CoCover>;

[[nodiscard]] auto boxicity(const Graph &h, const SolveOptions &options = {}) -> CoverSolution;
[[nodiscard]] auto union_boxicity(const Graph &h, const SolveOptions &options = {}) -> CoverSolution;
[[nodiscard]] auto local_boxicity(const Graph &h, const SolveOptions &options = {}) -> CoverSolution;
[[nodiscard]] auto local_boxicity_union_class(const Graph &h, const SolveOptions &options = {}) -> CoverSolution;

/// 1 when the complement of h is co-interval, nullopt (infinity) otherwise.
[[nodiscard]] auto box_f(const Graph &h) -> std::optional<int>;

} // namespace boxicity
