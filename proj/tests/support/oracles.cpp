#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace oracle {

using boxicity::Edge;

namespace {
    auto pair_index(int n, int u, int v) -> int
    {
        // row-major over u < v
        return u * n - u * (u + 1) / 2 + (v - u - 1);
    }

    auto graph_of(int n, std::uint32_t m) -> Graph
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((m >> pair_index(n, u, v)) & 1U)
                    g.add_edge(u, v);
        return g;
    }

    struct Dsu {
        std::vector<int> parent;
        explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
        auto find(int x) -> int
        {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        }
        auto unite(int a, int b) -> bool
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            parent[static_cast<std::size_t>(a)] = b;
            return true;
        }
    };

    auto complement_of(const Graph &g) -> Graph
    {
        Graph c(g.order());
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    c.add_edge(u, v);
        return c;
    }

    // Edge subsets of complement(h) that lie in the class, as bitmasks over
    // the host edge list, plus each subset's vertex support.
    struct Members {
        int edge_count = 0;
        std::vector<std::uint32_t> edges;
        std::vector<std::uint32_t> support;
    };

    auto class_members(const Graph &h, bool union_class, std::vector<Edge> &host_edges) -> Members
    {
        int n = h.order();
        host_edges.clear();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (! h.adjacent(u, v))
                    host_edges.emplace_back(u, v);
        if (host_edges.size() > 16)
            throw std::invalid_argument("cover oracle is limited to 16 host edges");

        Members out;
        out.edge_count = static_cast<int>(host_edges.size());
        for (std::uint32_t s = 1; s < (1U << out.edge_count); ++s) {
            Graph g(n);
            std::uint32_t sup = 0;
            for (int i = 0; i < out.edge_count; ++i)
                if ((s >> i) & 1U) {
                    const auto &e = host_edges[static_cast<std::size_t>(i)];
                    g.add_edge(e.u, e.v);
                    sup |= (1U << e.u) | (1U << e.v);
                }
            bool ok = union_class ? is_union_co_interval(g) : is_co_interval(g);
            if (ok) {
                out.edges.push_back(s);
                out.support.push_back(sup);
            }
        }
        return out;
    }
}

auto graphs_up_to_isomorphism(int n) -> const std::vector<Graph> &
{
    static std::map<int, std::vector<Graph>> cache;
    if (auto it = cache.find(n); it != cache.end())
        return it->second;
    if (n < 0 || n > 6)
        throw std::invalid_argument("isomorphism enumeration is limited to 6 vertices");

    int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> relabel; // pair index -> permuted pair index, per permutation
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> map(static_cast<std::size_t>(pairs));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
                map[static_cast<std::size_t>(pair_index(n, u, v))] = pair_index(n, std::min(a, b), std::max(a, b));
            }
        relabel.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<char> seen(std::size_t{1} << pairs, 0);
    std::vector<Graph> classes;
    for (std::uint32_t m = 0; m < (1U << pairs); ++m) {
        if (seen[m])
            continue;
        for (const auto &map : relabel) {
            std::uint32_t image = 0;
            for (int p = 0; p < pairs; ++p)
                if ((m >> p) & 1U)
                    image |= 1U << map[static_cast<std::size_t>(p)];
            seen[image] = 1;
        }
        classes.push_back(graph_of(n, m));
    }
    return cache.emplace(n, std::move(classes)).first->second;
}

auto is_interval_by_ordering(const Graph &g) -> bool
{
    int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int k = i + 2; k < n && ok; ++k) {
                int u = order[static_cast<std::size_t>(i)], w = order[static_cast<std::size_t>(k)];
                if (! g.adjacent(u, w))
                    continue;
                for (int j = i + 1; j < k && ok; ++j)
                    if (! g.adjacent(u, order[static_cast<std::size_t>(j)]))
                        ok = false;
            }
        if (ok)
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

auto is_co_interval(const Graph &g) -> bool { return is_interval_by_ordering(complement_of(g)); }

auto is_union_co_interval(const Graph &g) -> bool
{
    int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = count;
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < n; ++y)
                if (g.adjacent(x, y) && comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = count;
                    stack.push_back(y);
                }
        }
        ++count;
    }
    for (int c = 0; c < count; ++c) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<std::size_t>(v)] == c)
                members.push_back(v);
        Graph part(static_cast<int>(members.size()));
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (g.adjacent(members[a], members[b]))
                    part.add_edge(static_cast<int>(a), static_cast<int>(b));
        if (! is_co_interval(part))
            return false;
    }
    return true;
}

auto min_global_cover(const Graph &h, bool union_class) -> int
{
    std::vector<Edge> host_edges;
    auto members = class_members(h, union_class, host_edges);
    const std::uint32_t all = members.edge_count >= 32 ? ~0U : (1U << members.edge_count) - 1;

    std::unordered_set<std::uint64_t> failed;
    std::function<bool(std::uint32_t, int)> cover = [&](std::uint32_t covered, int left) -> bool {
        if (covered == all)
            return true;
        if (left == 0)
            return false;
        std::uint64_t key = (std::uint64_t{covered} << 8) | static_cast<std::uint64_t>(left);
        if (failed.contains(key))
            return false;
        int lowest = std::countr_one(covered);
        for (auto s : members.edges)
            if (((s >> lowest) & 1U) && cover(covered | s, left - 1))
                return true;
        failed.insert(key);
        return false;
    };
    for (int k = 0;; ++k)
        if (cover(0, k))
            return k;
}

auto min_local_cover(const Graph &h, bool union_class) -> int
{
    std::vector<Edge> host_edges;
    auto members = class_members(h, union_class, host_edges);
    const std::uint32_t all = members.edge_count >= 32 ? ~0U : (1U << members.edge_count) - 1;
    const int n = h.order();

    for (int limit = 0;; ++limit) {
        std::unordered_set<std::uint64_t> failed;
        std::vector<int> load(static_cast<std::size_t>(n), 0);
        std::function<bool(std::uint32_t)> cover = [&](std::uint32_t covered) -> bool {
            if (covered == all)
                return true;
            std::uint64_t key = covered;
            for (int v = 0; v < n; ++v)
                key = key * 8 + static_cast<std::uint64_t>(load[static_cast<std::size_t>(v)]);
            if (failed.contains(key))
                return false;
            int lowest = std::countr_one(covered);
            for (std::size_t i = 0; i < members.edges.size(); ++i) {
                auto s = members.edges[i];
                if (! ((s >> lowest) & 1U))
                    continue;
                auto sup = members.support[i];
                bool fits = true;
                for (int v = 0; v < n; ++v)
                    if (((sup >> v) & 1U) && load[static_cast<std::size_t>(v)] == limit)
                        fits = false;
                if (! fits)
                    continue;
                for (int v = 0; v < n; ++v)
                    if ((sup >> v) & 1U)
                        ++load[static_cast<std::size_t>(v)];
                bool ok = cover(covered | s);
                for (int v = 0; v < n; ++v)
                    if ((sup >> v) & 1U)
                        --load[static_cast<std::size_t>(v)];
                if (ok)
                    return true;
            }
            failed.insert(key);
            return false;
        };
        if (cover(0))
            return limit;
    }
}

auto acyclic_chromatic_number(const Graph &g) -> int
{
    const int n = g.order();
    if (n == 0)
        return 0;
    auto edges = g.edges();
    for (int k = 1;; ++k) {
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        while (true) {
            bool proper = std::ranges::all_of(edges, [&](const Edge &e) {
                return color[static_cast<std::size_t>(e.u)] != color[static_cast<std::size_t>(e.v)];
            });
            bool acyclic = proper;
            for (int a = 0; a < k && acyclic; ++a)
                for (int b = a + 1; b < k && acyclic; ++b) {
                    std::vector<Edge> two;
                    for (const auto &e : edges) {
                        int cu = color[static_cast<std::size_t>(e.u)], cv = color[static_cast<std::size_t>(e.v)];
                        if ((cu == a || cu == b) && (cv == a || cv == b))
                            two.push_back(e);
                    }
                    acyclic = edges_form_forest(n, two);
                }
            if (acyclic)
                return k;

            int pos = 0;
            while (pos < n && color[static_cast<std::size_t>(pos)] == k - 1)
                color[static_cast<std::size_t>(pos++)] = 0;
            if (pos == n)
                break;
            ++color[static_cast<std::size_t>(pos)];
        }
    }
}

auto edges_form_forest(int n, const std::vector<Edge> &edges) -> bool
{
    Dsu dsu(n);
    return std::ranges::all_of(edges, [&](const Edge &e) { return dsu.unite(e.u, e.v); });
}

auto random_graph(int n, std::mt19937_64 &rng) -> Graph
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1U)
                g.add_edge(u, v);
    return g;
}

} // namespace oracle
