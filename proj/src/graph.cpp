#include "boxicity/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace boxicity {

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const auto &e : edges)
        add_edge(e.u, e.v);
}

auto Graph::add_edge(Vertex a, Vertex b) -> void
{
    if (! valid_vertex(a) || ! valid_vertex(b))
        throw GraphError("edge endpoint out of range: " + std::to_string(a) + "-" + std::to_string(b));
    if (a == b)
        throw GraphError("self-loop at vertex " + std::to_string(a));
    if (adjacent(a, b))
        return;

    auto un = static_cast<std::size_t>(n_);
    matrix_[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = 1;
    matrix_[static_cast<std::size_t>(b) * un + static_cast<std::size_t>(a)] = 1;
    auto &la = adj_[static_cast<std::size_t>(a)];
    la.insert(std::lower_bound(la.begin(), la.end(), b), b);
    auto &lb = adj_[static_cast<std::size_t>(b)];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
    ++edge_count_;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex w : adj_[static_cast<std::size_t>(u)])
            if (u < w)
                result.emplace_back(u, w);
    return result;
}

auto Graph::is_complete() const -> bool
{
    auto n = static_cast<std::size_t>(n_);
    return edge_count_ == n * (n > 0 ? n - 1 : 0) / 2;
}

auto Graph::operator==(const Graph &other) const -> bool
{
    return n_ == other.n_ && matrix_ == other.matrix_;
}

auto complement(const Graph &g) -> Graph
{
    Graph result(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                result.add_edge(u, v);
    return result;
}

auto induced_subgraph(const Graph &g, const VertexSet &s) -> Graph
{
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted)
        if (! g.valid_vertex(v))
            throw GraphError("vertex out of range: " + std::to_string(v));

    Graph result(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.adjacent(sorted[i], sorted[j]))
                result.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return result;
}

auto disjoint_union(std::span<const Graph> gs) -> Graph
{
    int total = 0;
    for (const auto &g : gs)
        total += g.order();

    Graph result(total);
    int offset = 0;
    for (const auto &g : gs) {
        for (const auto &e : g.edges())
            result.add_edge(e.u + offset, e.v + offset);
        offset += g.order();
    }
    return result;
}

auto identify_nonadjacent(const Graph &g, Vertex u, Vertex v) -> Graph
{
    if (! g.valid_vertex(u) || ! g.valid_vertex(v))
        throw GraphError("vertex out of range");
    if (u == v)
        throw GraphError("cannot identify a vertex with itself");
    if (g.adjacent(u, v))
        throw GraphError("cannot identify adjacent vertices " + std::to_string(u) + " and " + std::to_string(v));

    Vertex keep = std::min(u, v), drop = std::max(u, v);
    auto relabel = [&](Vertex x) { return x == drop ? keep : (x > drop ? x - 1 : x); };

    Graph result(g.order() - 1);
    for (const auto &e : g.edges())
        result.add_edge(relabel(e.u), relabel(e.v));
    return result;
}

auto line_graph(const Graph &g) -> Graph
{
    auto es = g.edges();
    Graph result(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
                result.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return result;
}

auto girth(const Graph &g) -> std::optional<int>
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));

    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<Vertex> queue;
        dist[static_cast<std::size_t>(root)] = 0;
        queue.push(root);
        while (! queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (Vertex y : g.neighbours(x)) {
                auto ux = static_cast<std::size_t>(x), uy = static_cast<std::size_t>(y);
                if (dist[uy] < 0) {
                    dist[uy] = dist[ux] + 1;
                    parent[uy] = x;
                    queue.push(y);
                }
                else if (parent[ux] != y)
                    best = std::min(best, dist[ux] + dist[uy] + 1);
            }
        }
    }

    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

auto has_induced_two_matching(const Graph &g) -> bool
{
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto &a = es[i], &b = es[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                continue;
            if (! g.adjacent(a.u, b.u) && ! g.adjacent(a.u, b.v) && ! g.adjacent(a.v, b.u) && ! g.adjacent(a.v, b.v))
                return true;
        }
    return false;
}

auto connected_components(const Graph &g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        VertexSet comp{start};
        seen[static_cast<std::size_t>(start)] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbours(comp[i]))
                if (! seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

auto is_forest(const Graph &g) -> bool
{
    return g.size() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

auto spanning_edge_graph(int n, std::span<const Edge> edges) -> Graph
{
    return Graph(n, edges);
}

auto spanned_subgraph(std::span<const Edge> edges, VertexSet *support) -> Graph
{
    VertexSet vs;
    for (const auto &e : edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    auto index_of = [&](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
    };
    Graph result(static_cast<int>(vs.size()));
    for (const auto &e : edges)
        result.add_edge(index_of(e.u), index_of(e.v));
    if (support)
        *support = std::move(vs);
    return result;
}

} // namespace boxicity
