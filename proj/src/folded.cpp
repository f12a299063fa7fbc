#include "boxicity/folded.hpp"
#include "boxicity/interval.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace boxicity {

namespace {
    auto idx(int v) -> std::size_t { return static_cast<std::size_t>(v); }
}

auto verify_folded_cover(const Graph &host, const FoldedCover &f, CoverClass c) -> int
{
    using Kind = FoldedCoverError::Kind;
    const auto &split = f.split_graph;

    if (f.fold_map.size() != idx(split.order()))
        throw FoldedCoverError(Kind::malformed_map, "fold map has " + std::to_string(f.fold_map.size())
                                                        + " entries for " + std::to_string(split.order()) + " vertices");
    for (Vertex x : f.fold_map)
        if (! host.valid_vertex(x))
            throw FoldedCoverError(Kind::malformed_map, "fold map target " + std::to_string(x) + " out of range");

    for (const auto &e : split.edges()) {
        Vertex a = f.fold_map[idx(e.u)], b = f.fold_map[idx(e.v)];
        if (a == b)
            throw FoldedCoverError(Kind::dependent_fiber, "fiber of host vertex " + std::to_string(a)
                                                              + " is not independent");
        if (! host.adjacent(a, b))
            throw FoldedCoverError(Kind::non_homomorphism, "split edge {" + std::to_string(e.u) + ","
                                                               + std::to_string(e.v) + "} maps to a host non-edge");
    }

    std::set<Edge> image;
    for (const auto &e : split.edges())
        image.emplace(f.fold_map[idx(e.u)], f.fold_map[idx(e.v)]);
    for (const auto &e : host.edges())
        if (! image.contains(e))
            throw FoldedCoverError(Kind::uncovered_edge, "host edge {" + std::to_string(e.u) + "," + std::to_string(e.v)
                                                             + "} has no preimage");

    if (! in_class(split, c))
        throw FoldedCoverError(Kind::class_violation,
            "split graph is not in class " + std::string(class_name(c)));

    std::vector<int> fiber(idx(host.order()), 0);
    for (Vertex x : f.fold_map)
        ++fiber[idx(x)];
    return fiber.empty() ? 0 : *std::max_element(fiber.begin(), fiber.end());
}

auto local_cover_to_folded(const CoCover &c) -> FoldedCover
{
    verify_cover(c);

    std::vector<Graph> parts;
    FoldedCover folded;
    for (const auto &bag : c.bags) {
        VertexSet support;
        parts.push_back(spanned_subgraph(bag, &support));
        folded.fold_map.insert(folded.fold_map.end(), support.begin(), support.end());
    }
    folded.split_graph = disjoint_union(parts);
    return folded;
}

namespace {
    // Depth-first enumeration of split graphs for one vector of fiber sizes.
    // Host edges are handled in order of their larger endpoint; once every
    // edge up to host vertex j is fixed, the split graph induced on the
    // fibers of 0..j is final and has to be in the class already.
    class SplitSearch {
      public:
        SplitSearch(const Graph &host, const std::vector<int> &sizes, CoverClass c) :
            host_(host), class_(c), sizes_(sizes), first_(sizes.size() + 1, 0)
        {
            for (std::size_t v = 0; v < sizes.size(); ++v)
                first_[v + 1] = first_[v] + sizes[v];
            total_ = first_.back();
            adjacency_.assign(idx(total_), 0);

            for (Vertex j = 0; j < host.order(); ++j)
                for (Vertex i : host.neighbours(j))
                    if (i < j)
                        edges_.emplace_back(i, j);
        }

        auto run() -> std::optional<FoldedCover>
        {
            if (! place(0))
                return std::nullopt;
            FoldedCover result{Graph(total_), {}};
            for (Vertex x = 0; x < total_; ++x)
                for (Vertex y = x + 1; y < total_; ++y)
                    if ((adjacency_[idx(x)] >> y) & 1U)
                        result.split_graph.add_edge(x, y);
            for (std::size_t v = 0; v < sizes_.size(); ++v)
                for (int k = 0; k < sizes_[v]; ++k)
                    result.fold_map.push_back(static_cast<Vertex>(v));
            return result;
        }

      private:
        const Graph &host_;
        CoverClass class_;
        std::vector<int> sizes_;
        std::vector<int> first_;
        int total_ = 0;
        std::vector<Edge> edges_;
        std::vector<std::uint32_t> adjacency_;
        std::map<std::vector<std::uint32_t>, bool> memo_;

        auto prefix_ok(Vertex last_host_vertex) -> bool
        {
            int count = first_[idx(last_host_vertex) + 1];
            std::vector<std::uint32_t> key(adjacency_.begin(), adjacency_.begin() + count);
            std::uint32_t keep = count >= 32 ? ~0U : ((1U << count) - 1);
            for (auto &row : key)
                row &= keep;
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;

            Graph g(count);
            for (Vertex x = 0; x < count; ++x)
                for (Vertex y = x + 1; y < count; ++y)
                    if ((key[idx(x)] >> y) & 1U)
                        g.add_edge(x, y);
            bool ok = in_class(g, class_);
            memo_.emplace(std::move(key), ok);
            return ok;
        }

        auto place(std::size_t k) -> bool
        {
            if (k == edges_.size())
                return prefix_ok(host_.order() - 1);

            const auto &e = edges_[k];
            int su = sizes_[idx(e.u)], sv = sizes_[idx(e.v)];
            int pairs = su * sv;
            bool boundary = k + 1 == edges_.size() || edges_[k + 1].v != e.v;

            for (std::uint32_t pattern = 1; pattern < (1U << pairs); ++pattern) {
                set_pattern(e, pattern, su, sv, true);
                bool ok = (! boundary || prefix_ok(e.v)) && place(k + 1);
                if (ok)
                    return true;
                set_pattern(e, pattern, su, sv, false);
            }
            return false;
        }

        auto set_pattern(const Edge &e, std::uint32_t pattern, int su, int sv, bool on) -> void
        {
            for (int p = 0; p < su * sv; ++p) {
                if (! ((pattern >> p) & 1U))
                    continue;
                int x = first_[idx(e.u)] + p / sv;
                int y = first_[idx(e.v)] + p % sv;
                if (on) {
                    adjacency_[idx(x)] |= 1U << y;
                    adjacency_[idx(y)] |= 1U << x;
                }
                else {
                    adjacency_[idx(x)] &= ~(1U << y);
                    adjacency_[idx(y)] &= ~(1U << x);
                }
            }
        }
    };
}

auto folded_search_bounded(const Graph &host, int max_s, int max_total_vertices, CoverClass c)
    -> std::optional<FoldedSearchResult>
{
    if (max_total_vertices > folded_search_vertex_limit)
        throw std::invalid_argument("folded search is limited to " + std::to_string(folded_search_vertex_limit)
                                    + " split vertices");
    if (max_s < 1)
        throw std::invalid_argument("max_s must be positive");

    const int n = host.order();
    std::vector<Vertex> active;
    for (Vertex v = 0; v < n; ++v)
        if (host.degree(v) > 0)
            active.push_back(v);
    // Isolated host vertices stay unsplit, so the fold map is onto.
    if (n > max_total_vertices)
        return std::nullopt;
    if (n == 0)
        return FoldedSearchResult{0, FoldedCover{Graph(0), {}}};

    for (int s = 1; s <= max_s; ++s) {
        // Odometer over fiber sizes in [1, s]; vectors whose maximum is below
        // s were already tried at a smaller locality.
        std::vector<int> sizes(idx(n), 1);
        while (true) {
            int total = 0, largest = 0;
            for (int x : sizes) {
                total += x;
                largest = std::max(largest, x);
            }
            if (largest == s && total <= max_total_vertices) {
                if (auto found = SplitSearch(host, sizes, c).run())
                    return FoldedSearchResult{s, std::move(*found)};
            }

            std::size_t pos = 0;
            while (pos < active.size() && sizes[idx(active[pos])] == s) {
                sizes[idx(active[pos])] = 1;
                ++pos;
            }
            if (pos == active.size())
                break;
            ++sizes[idx(active[pos])];
        }
    }
    return std::nullopt;
}

auto fold_along_fibers(const FoldedCover &f, int host_order) -> Graph
{
    Graph current = f.split_graph;
    std::vector<Vertex> label = f.fold_map;

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t a = 0; a < label.size() && ! merged; ++a)
            for (std::size_t b = a + 1; b < label.size() && ! merged; ++b)
                if (label[a] == label[b]) {
                    current = identify_nonadjacent(current, static_cast<Vertex>(a), static_cast<Vertex>(b));
                    label.erase(label.begin() + static_cast<std::ptrdiff_t>(b));
                    merged = true;
                }
    }

    Graph result(host_order);
    for (const auto &e : current.edges())
        result.add_edge(label[idx(e.u)], label[idx(e.v)]);
    return result;
}

} // namespace boxicity
