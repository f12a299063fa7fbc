#include "boxicity/json_io.hpp"

#include <string>

namespace boxicity {

namespace {
    auto idx(int v) -> std::size_t { return static_cast<std::size_t>(v); }

    template <typename F>
    auto guarded(const char *what, F &&f)
    {
        try {
            return f();
        }
        catch (const nlohmann::json::exception &e) {
            throw FormatError(std::string("malformed ") + what + " JSON: " + e.what());
        }
        catch (const std::invalid_argument &e) {
            throw FormatError(std::string("invalid ") + what + ": " + e.what());
        }
    }

    auto edge_pair(const Json &j) -> Edge
    {
        if (! j.is_array() || j.size() != 2)
            throw FormatError("edge must be a pair [u, v]");
        return Edge(j.at(0).get<int>(), j.at(1).get<int>());
    }

    // Vertex-keyed objects: keys must be exactly "0".."n-1".
    template <typename F>
    auto for_vertex_keys(const Json &object, F &&each) -> int
    {
        if (! object.is_object())
            throw FormatError("expected an object keyed by vertex id");
        int n = static_cast<int>(object.size());
        for (int v = 0; v < n; ++v) {
            auto key = std::to_string(v);
            if (! object.contains(key))
                throw FormatError("missing entry for vertex " + key);
            each(v, object.at(key));
        }
        return n;
    }
}

auto edge_list_json(const Graph &g) -> Json
{
    Json edges = Json::array();
    for (const auto &e : g.edges())
        edges.push_back({e.u, e.v});
    return Json{{"n", g.order()}, {"edges", edges}};
}

auto graph_from_edge_list_json(const Json &j) -> Graph
{
    return guarded("edge list", [&] {
        Graph g(j.at("n").get<int>());
        for (const auto &e : j.at("edges")) {
            auto edge = edge_pair(e);
            g.add_edge(edge.u, edge.v);
        }
        return g;
    });
}

auto interval_model_json(const IntervalModel &m) -> Json
{
    Json intervals = Json::object();
    for (std::size_t v = 0; v < m.intervals.size(); ++v)
        intervals[std::to_string(v)] = {m.intervals[v].left, m.intervals[v].right};
    return Json{{"intervals", intervals}};
}

auto interval_model_from_json(const Json &j) -> IntervalModel
{
    return guarded("interval model", [&] {
        IntervalModel m;
        const auto &object = j.at("intervals");
        m.intervals.resize(object.size());
        for_vertex_keys(object, [&](int v, const Json &entry) {
            if (! entry.is_array() || entry.size() != 2)
                throw FormatError("interval for vertex " + std::to_string(v) + " must be [l, r]");
            Interval i{entry.at(0).get<int>(), entry.at(1).get<int>()};
            if (i.left > i.right)
                throw FormatError("interval for vertex " + std::to_string(v) + " must be [l, r] with l <= r");
            m.intervals[idx(v)] = i;
        });
        return m;
    });
}

auto box_representation_json(const BoxRepresentation &b) -> Json
{
    Json boxes = Json::object();
    for (Vertex v = 0; v < b.order(); ++v) {
        Json extents = Json::array();
        for (const auto &e : b.boxes[idx(v)]) {
            if (e.is_full())
                extents.push_back("full");
            else
                extents.push_back({e.interval().left, e.interval().right});
        }
        boxes[std::to_string(v)] = extents;
    }
    return Json{{"d", b.dimension}, {"boxes", boxes}};
}

auto box_representation_from_json(const Json &j) -> BoxRepresentation
{
    return guarded("box representation", [&] {
        BoxRepresentation b;
        b.dimension = j.at("d").get<int>();
        const auto &object = j.at("boxes");
        b.boxes.resize(object.size());
        for_vertex_keys(object, [&](int v, const Json &entry) {
            for (const auto &extent : entry) {
                if (extent.is_string()) {
                    if (extent.get<std::string>() != "full")
                        throw FormatError("extent must be \"full\" or [l, r]");
                    b.boxes[idx(v)].push_back(Extent::full());
                }
                else {
                    if (! extent.is_array() || extent.size() != 2)
                        throw FormatError("extent must be \"full\" or [l, r]");
                    b.boxes[idx(v)].push_back(Extent::bounded(extent.at(0).get<int>(), extent.at(1).get<int>()));
                }
            }
        });
        b.validate();
        return b;
    });
}

auto folded_cover_json(const FoldedCover &f) -> Json
{
    return Json{{"split_graph6", serialize_graph6(f.split_graph)}, {"fold_map", f.fold_map}};
}

auto folded_cover_from_json(const Json &j) -> FoldedCover
{
    return guarded("folded cover", [&] {
        return FoldedCover{parse_graph6(j.at("split_graph6").get<std::string>()),
            j.at("fold_map").get<std::vector<Vertex>>()};
    });
}

auto acyclic_coloring_json(const AcyclicColoring &c) -> Json
{
    return Json{{"k", c.colors}, {"colors", c.color}};
}

auto acyclic_coloring_from_json(const Json &j) -> AcyclicColoring
{
    return guarded("acyclic colouring", [&] {
        return AcyclicColoring{j.at("k").get<int>(), j.at("colors").get<std::vector<int>>()};
    });
}

auto certificate_json(const Certificate &c) -> Json
{
    Json bags = Json::array();
    for (const auto &bag : c.cover.bags) {
        Json edges = Json::array();
        for (const auto &e : bag)
            edges.push_back({e.u, e.v});
        bags.push_back(edges);
    }
    return Json{{"parameter", std::string(parameter_name(c.parameter))}, {"value", c.value},
        {"host_graph6", serialize_graph6(c.graph)},
        {"complement_cover", {{"class", std::string(class_name(c.cover.cover_class))}, {"bags", bags}}},
        {"stats", {{"t", c.stats.globality}, {"s", c.stats.locality}}}};
}

auto certificate_from_json(const Json &j) -> Certificate
{
    return guarded("certificate", [&] {
        Certificate c;
        c.parameter = parse_parameter_name(j.at("parameter").get<std::string>());
        c.value = j.at("value").get<int>();
        c.graph = parse_graph6(j.at("host_graph6").get<std::string>());
        const auto &cover = j.at("complement_cover");
        c.cover.host = complement(c.graph);
        c.cover.cover_class = parse_class_name(cover.at("class").get<std::string>());
        for (const auto &bag : cover.at("bags")) {
            Bag edges;
            for (const auto &e : bag)
                edges.push_back(edge_pair(e));
            c.cover.bags.push_back(std::move(edges));
        }
        c.stats.globality = j.at("stats").at("t").get<int>();
        c.stats.locality = j.at("stats").at("s").get<int>();
        return c;
    });
}

} // namespace boxicity
