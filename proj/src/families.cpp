#include "boxicity/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace boxicity {

namespace {
    auto idx(int v) -> std::size_t { return static_cast<std::size_t>(v); }

    auto require(bool condition, const std::string &message) -> void
    {
        if (! condition)
            throw std::invalid_argument(message);
    }

    auto is_prime(int q) -> bool
    {
        if (q < 2)
            return false;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0)
                return false;
        return true;
    }
}

auto matching(int k) -> Graph
{
    require(k >= 1, "matching needs k >= 1");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i)
        g.add_edge(2 * i, 2 * i + 1);
    return g;
}

auto complete(int n) -> Graph
{
    require(n >= 1, "complete graph needs n >= 1");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

auto cycle(int n) -> Graph
{
    require(n >= 3, "cycle needs n >= 3");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

auto path(int n) -> Graph
{
    require(n >= 1, "path needs n >= 1");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto octahedron() -> Graph
{
    return complement(matching(3));
}

auto line_of_complete(int n) -> Graph
{
    return line_graph(complete(n));
}

auto star_clique_cover(int n) -> CoCover
{
    require(n >= 2, "star clique cover needs n >= 2");
    auto kn_edges = complete(n).edges();
    CoCover cover{line_graph(complete(n)), {}, CoverClass::co_interval};
    for (Vertex centre = 0; centre < n; ++centre) {
        VertexSet star;
        for (std::size_t i = 0; i < kn_edges.size(); ++i)
            if (kn_edges[i].u == centre || kn_edges[i].v == centre)
                star.push_back(static_cast<Vertex>(i));
        Bag bag;
        for (std::size_t a = 0; a < star.size(); ++a)
            for (std::size_t b = a + 1; b < star.size(); ++b)
                bag.emplace_back(star[a], star[b]);
        if (! bag.empty())
            cover.bags.push_back(std::move(bag));
    }
    return cover;
}

auto projective_incidence(int q) -> Graph
{
    require(is_prime(q), "projective_incidence needs a prime q, got " + std::to_string(q));

    std::vector<std::array<int, 3>> points;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::array<int, 3> p{a, b, c};
                auto lead = std::find_if(p.begin(), p.end(), [](int x) { return x != 0; });
                if (lead != p.end() && *lead == 1)
                    points.push_back(p);
            }

    const int count = static_cast<int>(points.size());
    Graph g(2 * count);
    for (int p = 0; p < count; ++p)
        for (int l = 0; l < count; ++l) {
            const auto &x = points[idx(p)], &y = points[idx(l)];
            if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0)
                g.add_edge(p, count + l);
        }
    return g;
}

auto is_acyclic_coloring(const Graph &g, const AcyclicColoring &c) -> bool
{
    if (c.color.size() != idx(g.order()))
        return false;
    for (int x : c.color)
        if (x < 0 || x >= c.colors)
            return false;
    for (const auto &e : g.edges())
        if (c.color[idx(e.u)] == c.color[idx(e.v)])
            return false;

    for (int i = 0; i < c.colors; ++i)
        for (int j = i + 1; j < c.colors; ++j) {
            VertexSet members;
            for (Vertex v = 0; v < g.order(); ++v)
                if (c.color[idx(v)] == i || c.color[idx(v)] == j)
                    members.push_back(v);
            if (! is_forest(induced_subgraph(g, members)))
                return false;
        }
    return true;
}

namespace {
    class AcyclicColorer {
      public:
        AcyclicColorer(const Graph &g, int colors) : g_(g), colors_(colors), color_(idx(g.order()), -1) {}

        auto run() -> std::optional<std::vector<int>>
        {
            if (assign(0, 0))
                return color_;
            return std::nullopt;
        }

      private:
        const Graph &g_;
        int colors_;
        std::vector<int> color_;

        auto assign(Vertex v, int used) -> bool
        {
            if (v == g_.order())
                return true;
            // Colours beyond the first unused one are symmetric.
            for (int c = 0; c < std::min(colors_, used + 1); ++c) {
                color_[idx(v)] = c;
                if (admissible(v) && assign(v + 1, std::max(used, c + 1)))
                    return true;
            }
            color_[idx(v)] = -1;
            return false;
        }

        // No monochromatic edge at v, and v closes no two-coloured cycle:
        // for every other colour, v's neighbours of that colour must lie in
        // distinct components of the two-coloured subgraph without v.
        auto admissible(Vertex v) const -> bool
        {
            int c = color_[idx(v)];
            for (Vertex w : g_.neighbours(v))
                if (color_[idx(w)] == c)
                    return false;

            for (int other = 0; other < colors_; ++other) {
                if (other == c)
                    continue;
                VertexSet ends;
                for (Vertex w : g_.neighbours(v))
                    if (color_[idx(w)] == other)
                        ends.push_back(w);
                if (ends.size() < 2)
                    continue;

                std::vector<int> label(idx(g_.order()), -1);
                int next = 0;
                for (Vertex start : ends) {
                    if (label[idx(start)] >= 0)
                        return false;
                    std::vector<Vertex> stack{start};
                    label[idx(start)] = next;
                    while (! stack.empty()) {
                        Vertex x = stack.back();
                        stack.pop_back();
                        for (Vertex y : g_.neighbours(x)) {
                            if (y == v || label[idx(y)] >= 0)
                                continue;
                            if (color_[idx(y)] != c && color_[idx(y)] != other)
                                continue;
                            label[idx(y)] = next;
                            stack.push_back(y);
                        }
                    }
                    ++next;
                }
            }
            return true;
        }
    };
}

auto acyclic_chromatic_number(const Graph &g) -> AcyclicColoring
{
    if (g.order() > acyclic_chromatic_vertex_limit)
        throw std::invalid_argument("acyclic chromatic number is limited to "
                                    + std::to_string(acyclic_chromatic_vertex_limit) + " vertices");
    if (g.order() == 0)
        return AcyclicColoring{0, {}};

    for (int k = 1;; ++k)
        if (auto found = AcyclicColorer(g, k).run())
            return AcyclicColoring{k, std::move(*found)};
}

auto acyclic_coloring_to_boxes(const Graph &g, const AcyclicColoring &c) -> BoxRepresentation
{
    if (! is_acyclic_coloring(g, c))
        throw std::invalid_argument("not an acyclic colouring of the graph");

    const int k = std::max(c.colors, 2);
    std::vector<BoxRepresentation> factors;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            VertexSet members;
            for (Vertex v = 0; v < g.order(); ++v)
                if (c.color[idx(v)] == i || c.color[idx(v)] == j)
                    members.push_back(v);
            auto forest = induced_subgraph(g, members);

            auto factor = full_representation(g.order(), 2);
            auto cover = find_global_cover(complement(forest), 2, CoverClass::co_interval);
            if (! cover)
                throw std::logic_error("forest without a 2-dimensional box representation");
            auto local = local_cover_to_boxes(*cover, forest);
            for (std::size_t m = 0; m < members.size(); ++m)
                for (int coord = 0; coord < local.dimension; ++coord)
                    factor.boxes[idx(members[m])][idx(coord)] = local.boxes[m][idx(coord)];
            factors.push_back(std::move(factor));
        }
    return product_of_representations(factors);
}

} // namespace boxicity
