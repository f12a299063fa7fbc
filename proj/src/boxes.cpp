#include "boxicity/boxes.hpp"

#include <algorithm>

namespace boxicity {

namespace {
    auto idx(int v) -> std::size_t { return static_cast<std::size_t>(v); }

    // Writes the interval model of complement(spanned subgraph of `bag`) into
    // coordinate `coordinate` of the support vertices.
    auto place_bag(BoxRepresentation &rep, const Bag &bag, int coordinate) -> void
    {
        VertexSet support;
        auto spanned = spanned_subgraph(bag, &support);
        auto model = interval_model(complement(spanned));
        for (std::size_t i = 0; i < support.size(); ++i)
            rep.boxes[idx(support[i])][idx(coordinate)] = Extent::bounded(model.intervals[i]);
    }
}

auto Extent::bounded(int left, int right) -> Extent
{
    if (left > right)
        throw BoxError("extent with left > right");
    Extent e;
    e.bounds_ = Interval{left, right};
    return e;
}

auto BoxRepresentation::vertex_locality(Vertex v) const -> int
{
    const auto &box = boxes[idx(v)];
    return static_cast<int>(std::count_if(box.begin(), box.end(), [](const Extent &e) { return ! e.is_full(); }));
}

auto BoxRepresentation::locality() const -> int
{
    int result = 0;
    for (Vertex v = 0; v < order(); ++v)
        result = std::max(result, vertex_locality(v));
    return result;
}

auto BoxRepresentation::validate() const -> void
{
    if (dimension < 0)
        throw BoxError("negative dimension");
    for (std::size_t v = 0; v < boxes.size(); ++v)
        if (boxes[v].size() != idx(dimension))
            throw BoxError("box of vertex " + std::to_string(v) + " has " + std::to_string(boxes[v].size())
                           + " extents, expected " + std::to_string(dimension));
}

auto full_representation(int vertices, int dimension) -> BoxRepresentation
{
    return BoxRepresentation{dimension, std::vector<std::vector<Extent>>(idx(vertices),
                                            std::vector<Extent>(idx(dimension), Extent::full()))};
}

auto intersection_graph_of_boxes(const BoxRepresentation &b) -> Graph
{
    b.validate();
    Graph g(b.order());
    for (Vertex u = 0; u < b.order(); ++u)
        for (Vertex v = u + 1; v < b.order(); ++v) {
            bool meet = true;
            for (int i = 0; i < b.dimension && meet; ++i)
                meet = b.boxes[idx(u)][idx(i)].intersects(b.boxes[idx(v)][idx(i)]);
            if (meet)
                g.add_edge(u, v);
        }
    return g;
}

auto union_cover_to_boxes(const CoCover &c) -> BoxRepresentation
{
    if (c.cover_class != CoverClass::union_co_interval)
        throw std::invalid_argument("union_cover_to_boxes needs a Cbar cover");
    if (c.bags.size() > 1)
        throw std::invalid_argument("union_cover_to_boxes needs a cover with at most one bag");
    verify_cover(c);

    auto components = split_into_components(c);
    auto rep = full_representation(c.host.order(), static_cast<int>(components.bags.size()));
    for (std::size_t i = 0; i < components.bags.size(); ++i)
        place_bag(rep, components.bags[i], static_cast<int>(i));
    return rep;
}

auto local_cover_to_boxes(const CoCover &c, const Graph &host_original) -> BoxRepresentation
{
    if (c.cover_class != CoverClass::co_interval)
        throw std::invalid_argument("local_cover_to_boxes needs a C cover");
    verify_cover(c);
    if (complement(host_original) != c.host)
        throw std::invalid_argument("cover host is not the complement of the given graph");

    auto rep = full_representation(host_original.order(), static_cast<int>(c.bags.size()));
    for (std::size_t i = 0; i < c.bags.size(); ++i)
        place_bag(rep, c.bags[i], static_cast<int>(i));
    return rep;
}

auto boxes_to_cover(const BoxRepresentation &b) -> CoCover
{
    CoCover cover{complement(intersection_graph_of_boxes(b)), {}, CoverClass::co_interval};
    for (int i = 0; i < b.dimension; ++i) {
        Bag bag;
        for (Vertex u = 0; u < b.order(); ++u)
            for (Vertex v = u + 1; v < b.order(); ++v) {
                const auto &eu = b.boxes[idx(u)][idx(i)], &ev = b.boxes[idx(v)][idx(i)];
                if (! eu.is_full() && ! ev.is_full() && ! eu.intersects(ev))
                    bag.emplace_back(u, v);
            }
        if (! bag.empty())
            cover.bags.push_back(std::move(bag));
    }
    return cover;
}

auto product_of_representations(std::span<const BoxRepresentation> bs) -> BoxRepresentation
{
    if (bs.empty())
        return BoxRepresentation{};

    BoxRepresentation result;
    result.boxes.resize(idx(bs.front().order()));
    for (const auto &b : bs) {
        b.validate();
        if (b.order() != bs.front().order())
            throw BoxError("factors have different vertex counts");
        result.dimension += b.dimension;
        for (Vertex v = 0; v < b.order(); ++v)
            result.boxes[idx(v)].insert(result.boxes[idx(v)].end(), b.boxes[idx(v)].begin(), b.boxes[idx(v)].end());
    }
    return result;
}

} // namespace boxicity
