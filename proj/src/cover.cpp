#include "boxicity/cover.hpp"
#include "boxicity/interval.hpp"

#include <algorithm>
#include <set>

namespace boxicity {

auto class_name(CoverClass c) -> std::string_view
{
    return c == CoverClass::co_interval ? "C" : "Cbar";
}

auto parse_class_name(std::string_view name) -> CoverClass
{
    if (name == "C")
        return CoverClass::co_interval;
    if (name == "Cbar")
        return CoverClass::union_co_interval;
    throw std::invalid_argument("unknown cover class '" + std::string(name) + "', expected C or Cbar");
}

auto in_class(const Graph &g, CoverClass c) -> bool
{
    return c == CoverClass::co_interval ? is_co_interval(g) : is_union_co_interval(g);
}

auto bag_support(const Bag &bag) -> VertexSet
{
    VertexSet vs;
    for (const auto &e : bag) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

namespace {
    auto describe(const Edge &e) -> std::string
    {
        return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
    }
}

auto verify_cover(const CoCover &c) -> CoverStats
{
    const auto &host = c.host;

    for (std::size_t i = 0; i < c.bags.size(); ++i)
        for (const auto &e : c.bags[i])
            if (! host.valid_vertex(e.u) || ! host.valid_vertex(e.v) || e.u == e.v || ! host.adjacent(e.u, e.v))
                throw CoverError(CoverError::Kind::foreign_edge,
                    "bag " + std::to_string(i) + " contains " + describe(e) + ", which is not an edge of the host");

    for (std::size_t i = 0; i < c.bags.size(); ++i)
        if (c.bags[i].empty())
            throw CoverError(CoverError::Kind::empty_bag, "bag " + std::to_string(i) + " is empty");

    for (std::size_t i = 0; i < c.bags.size(); ++i)
        if (! in_class(spanned_subgraph(c.bags[i]), c.cover_class))
            throw CoverError(CoverError::Kind::class_violation,
                "bag " + std::to_string(i) + " is not in class " + std::string(class_name(c.cover_class)));

    std::set<Edge> covered;
    for (const auto &bag : c.bags)
        covered.insert(bag.begin(), bag.end());
    for (const auto &e : host.edges())
        if (! covered.contains(e))
            throw CoverError(CoverError::Kind::uncovered_edge, "uncovered edge " + describe(e));

    auto loads = vertex_loads(c);
    CoverStats stats;
    stats.globality = static_cast<int>(c.bags.size());
    stats.locality = loads.empty() ? 0 : *std::max_element(loads.begin(), loads.end());
    return stats;
}

auto vertex_loads(const CoCover &c) -> std::vector<int>
{
    std::vector<int> loads(static_cast<std::size_t>(c.host.order()), 0);
    for (const auto &bag : c.bags)
        for (Vertex v : bag_support(bag))
            if (c.host.valid_vertex(v))
                ++loads[static_cast<std::size_t>(v)];
    return loads;
}

auto intersection_of_bag_complements(const CoCover &c) -> Graph
{
    const int n = c.host.order();
    std::vector<Graph> supergraphs;
    for (const auto &bag : c.bags)
        supergraphs.push_back(complement(spanning_edge_graph(n, bag)));

    Graph result(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::all_of(supergraphs.begin(), supergraphs.end(), [&](const Graph &g) { return g.adjacent(u, v); }))
                result.add_edge(u, v);
    return result;
}

auto split_into_components(const CoCover &c) -> CoCover
{
    CoCover result{c.host, {}, c.cover_class};
    for (const auto &bag : c.bags) {
        VertexSet support;
        auto spanned = spanned_subgraph(bag, &support);
        for (const auto &comp : connected_components(spanned)) {
            if (comp.size() < 2)
                continue;
            Bag part;
            for (const auto &e : bag) {
                auto local = static_cast<Vertex>(std::lower_bound(support.begin(), support.end(), e.u) - support.begin());
                if (std::binary_search(comp.begin(), comp.end(), local))
                    part.push_back(e);
            }
            result.bags.push_back(std::move(part));
        }
    }
    return result;
}

auto box_f(const Graph &h) -> std::optional<int>
{
    if (is_co_interval(complement(h)))
        return 1;
    return std::nullopt;
}

} // namespace boxicity
