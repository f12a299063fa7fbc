#include "boxicity/interval.hpp"

#include <algorithm>

namespace boxicity {

namespace {
    auto idx(Vertex v) -> std::size_t { return static_cast<std::size_t>(v); }

    // Component id of every vertex in g - N[z]; -1 for vertices of N[z].
    auto components_avoiding(const Graph &g, Vertex z) -> std::vector<int>
    {
        const int n = g.order();
        std::vector<int> comp(idx(n), -2);
        comp[idx(z)] = -1;
        for (Vertex w : g.neighbours(z))
            comp[idx(w)] = -1;

        int next = 0;
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < n; ++s) {
            if (comp[idx(s)] != -2)
                continue;
            comp[idx(s)] = next;
            stack.push_back(s);
            while (! stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g.neighbours(x))
                    if (comp[idx(y)] == -2) {
                        comp[idx(y)] = next;
                        stack.push_back(y);
                    }
            }
            ++next;
        }
        return comp;
    }

    // Depth-first search for an ordering of `cliques` in which every vertex's
    // cliques are consecutive. A vertex that drops out between two adjacent
    // cliques must have no unplaced cliques left.
    class CliqueOrderer {
      public:
        CliqueOrderer(const std::vector<VertexSet> &cliques, int n) :
            cliques_(cliques), remaining_(idx(n), 0), used_(cliques.size(), false)
        {
            for (const auto &c : cliques_)
                for (Vertex v : c)
                    ++remaining_[idx(v)];
        }

        auto solve() -> std::optional<std::vector<std::size_t>>
        {
            if (extend())
                return order_;
            return std::nullopt;
        }

      private:
        const std::vector<VertexSet> &cliques_;
        std::vector<int> remaining_;
        std::vector<bool> used_;
        std::vector<std::size_t> order_;

        auto extend() -> bool
        {
            if (order_.size() == cliques_.size())
                return true;

            for (std::size_t c = 0; c < cliques_.size(); ++c) {
                if (used_[c] || ! compatible(c))
                    continue;
                used_[c] = true;
                order_.push_back(c);
                for (Vertex v : cliques_[c])
                    --remaining_[idx(v)];

                if (extend())
                    return true;

                for (Vertex v : cliques_[c])
                    ++remaining_[idx(v)];
                order_.pop_back();
                used_[c] = false;
            }
            return false;
        }

        auto compatible(std::size_t c) const -> bool
        {
            if (order_.empty())
                return true;
            const auto &prev = cliques_[order_.back()];
            const auto &next = cliques_[c];
            for (Vertex v : prev)
                if (! std::binary_search(next.begin(), next.end(), v) && remaining_[idx(v)] > 0)
                    return false;
            return true;
        }
    };
}

auto perfect_elimination_ordering(const Graph &g) -> std::optional<std::vector<Vertex>>
{
    const int n = g.order();
    std::vector<int> weight(idx(n), 0);
    std::vector<bool> numbered(idx(n), false);
    std::vector<Vertex> selection;
    selection.reserve(idx(n));

    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (! numbered[idx(v)] && (best < 0 || weight[idx(v)] > weight[idx(best)]))
                best = v;
        numbered[idx(best)] = true;
        selection.push_back(best);
        for (Vertex w : g.neighbours(best))
            if (! numbered[idx(w)])
                ++weight[idx(w)];
    }

    std::vector<Vertex> order(selection.rbegin(), selection.rend());
    std::vector<int> position(idx(n));
    for (int i = 0; i < n; ++i)
        position[idx(order[idx(i)])] = i;

    // Later neighbours of v, minus the earliest one p, must all be adjacent to p.
    for (Vertex v : order) {
        Vertex parent = -1;
        for (Vertex w : g.neighbours(v))
            if (position[idx(w)] > position[idx(v)] && (parent < 0 || position[idx(w)] < position[idx(parent)]))
                parent = w;
        if (parent < 0)
            continue;
        for (Vertex w : g.neighbours(v))
            if (w != parent && position[idx(w)] > position[idx(v)] && ! g.adjacent(w, parent))
                return std::nullopt;
    }
    return order;
}

auto is_chordal(const Graph &g) -> bool
{
    return perfect_elimination_ordering(g).has_value();
}

auto find_asteroidal_triple(const Graph &g) -> std::optional<std::array<Vertex, 3>>
{
    const int n = g.order();
    std::vector<std::vector<int>> comp;
    comp.reserve(idx(n));
    for (Vertex z = 0; z < n; ++z)
        comp.push_back(components_avoiding(g, z));

    auto joined_avoiding = [&](Vertex a, Vertex b, Vertex z) {
        int ca = comp[idx(z)][idx(a)];
        return ca >= 0 && ca == comp[idx(z)][idx(b)];
    };

    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y))
                continue;
            for (Vertex z = y + 1; z < n; ++z) {
                if (g.adjacent(x, z) || g.adjacent(y, z))
                    continue;
                if (joined_avoiding(x, y, z) && joined_avoiding(x, z, y) && joined_avoiding(y, z, x))
                    return std::array<Vertex, 3>{x, y, z};
            }
        }
    return std::nullopt;
}

auto has_asteroidal_triple(const Graph &g) -> bool
{
    return find_asteroidal_triple(g).has_value();
}

auto is_interval(const Graph &g) -> bool
{
    return is_chordal(g) && ! has_asteroidal_triple(g);
}

auto is_co_interval(const Graph &g) -> bool
{
    return is_interval(complement(g));
}

auto is_union_co_interval(const Graph &g) -> bool
{
    for (const auto &comp : connected_components(g))
        if (comp.size() > 1 && ! is_co_interval(induced_subgraph(g, comp)))
            return false;
    return true;
}

auto chordal_maximal_cliques(const Graph &g) -> std::vector<VertexSet>
{
    auto peo = perfect_elimination_ordering(g);
    if (! peo)
        throw NotIntervalError("graph is not chordal");

    const int n = g.order();
    std::vector<int> position(idx(n));
    for (int i = 0; i < n; ++i)
        position[idx((*peo)[idx(i)])] = i;

    std::vector<VertexSet> candidates;
    for (Vertex v : *peo) {
        VertexSet c{v};
        for (Vertex w : g.neighbours(v))
            if (position[idx(w)] > position[idx(v)])
                c.push_back(w);
        std::sort(c.begin(), c.end());
        candidates.push_back(std::move(c));
    }

    std::vector<VertexSet> result;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && ! dominated; ++j) {
            if (i == j)
                continue;
            const auto &a = candidates[i], &b = candidates[j];
            bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
            // Equal candidates: keep the first occurrence only.
            if (subset && (a.size() < b.size() || j < i))
                dominated = true;
        }
        if (! dominated)
            result.push_back(candidates[i]);
    }
    std::sort(result.begin(), result.end());
    return result;
}

auto interval_model(const Graph &g) -> IntervalModel
{
    const int n = g.order();
    IntervalModel model;
    model.intervals.resize(idx(n));

    int position = 0;
    std::vector<Vertex> isolated;
    for (const auto &comp : connected_components(g)) {
        if (comp.size() == 1) {
            isolated.push_back(comp.front());
            continue;
        }

        auto local = induced_subgraph(g, comp);
        if (! is_interval(local))
            throw NotIntervalError("graph is not an interval graph");
        auto cliques = chordal_maximal_cliques(local);
        auto order = CliqueOrderer(cliques, local.order()).solve();
        if (! order)
            throw NotIntervalError("no consecutive clique ordering exists");

        std::vector<int> first(comp.size(), -1), last(comp.size(), -1);
        for (std::size_t k = 0; k < order->size(); ++k) {
            int pos = position + static_cast<int>(k) + 1;
            for (Vertex v : cliques[(*order)[k]]) {
                if (first[idx(v)] < 0)
                    first[idx(v)] = pos;
                last[idx(v)] = pos;
            }
        }
        for (std::size_t i = 0; i < comp.size(); ++i)
            model.intervals[idx(comp[i])] = Interval{first[i], last[i]};
        position += static_cast<int>(order->size());
    }

    for (Vertex v : isolated) {
        ++position;
        model.intervals[idx(v)] = Interval{position, position};
    }

    if (intersection_graph_of_intervals(model) != g)
        throw std::logic_error("interval model does not realise the input graph");
    return model;
}

auto intersection_graph_of_intervals(const IntervalModel &m) -> Graph
{
    const int n = static_cast<int>(m.intervals.size());
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        if (m.intervals[idx(u)].left > m.intervals[idx(u)].right)
            throw std::invalid_argument("interval with left > right");
        for (Vertex v = u + 1; v < n; ++v)
            if (m.intervals[idx(u)].intersects(m.intervals[idx(v)]))
                g.add_edge(u, v);
    }
    return g;
}

} // namespace boxicity
