#include "boxicity/cover.hpp"
#include "boxicity/interval.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace boxicity {

namespace {
    auto idx(int v) -> std::size_t { return static_cast<std::size_t>(v); }

    class EdgeMask {
      public:
        explicit EdgeMask(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

        auto set(std::size_t i) -> void { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
        auto reset(std::size_t i) -> void { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        [[nodiscard]] auto test(std::size_t i) const -> bool { return (words_[i / 64] >> (i % 64)) & 1; }
        [[nodiscard]] auto any() const -> bool
        {
            return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
        }

        auto operator==(const EdgeMask &) const -> bool = default;

        [[nodiscard]] auto hash() const -> std::size_t
        {
            std::size_t h = 0xcbf29ce484222325ULL;
            for (auto w : words_)
                h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
            return h;
        }

      private:
        std::vector<std::uint64_t> words_;
    };

    struct EdgeMaskHash {
        auto operator()(const EdgeMask &m) const -> std::size_t { return m.hash(); }
    };

    // Class membership of the graph spanned by a set of host edges, memoised
    // on the edge set.
    class MembershipCache {
      public:
        MembershipCache(const std::vector<Edge> &edges, CoverClass c) : edges_(edges), class_(c) {}

        auto member(const EdgeMask &mask) -> bool
        {
            if (auto it = memo_.find(mask); it != memo_.end())
                return it->second;
            Bag bag;
            for (std::size_t i = 0; i < edges_.size(); ++i)
                if (mask.test(i))
                    bag.push_back(edges_[i]);
            bool result = in_class(spanned_subgraph(bag), class_);
            memo_.emplace(mask, result);
            return result;
        }

      private:
        const std::vector<Edge> &edges_;
        CoverClass class_;
        std::unordered_map<EdgeMask, bool, EdgeMaskHash> memo_;
    };

    class Deadline {
      public:
        explicit Deadline(const SolveOptions &options)
        {
            if (options.time_budget)
                limit_ = std::chrono::steady_clock::now() + *options.time_budget;
        }

        auto tick() -> void
        {
            if (limit_ && (++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > *limit_)
                throw BudgetExceeded();
        }

      private:
        std::optional<std::chrono::steady_clock::time_point> limit_;
        std::uint64_t ticks_ = 0;
    };

    struct BagState {
        EdgeMask mask;
        std::vector<int> members;
        std::vector<int> incidence;
    };

    // An assignment of the current edge: a set of already opened bags plus a
    // number of freshly opened ones.
    struct Choice {
        std::vector<int> existing;
        int fresh = 0;
    };

    enum class Budget { bags, locality };

    // Assigns host edges one at a time, in a fixed order, to nonempty sets of
    // bags. Bag i is always opened before bag i+1, so bags are ordered by
    // their first edge. A bag is only tested against the covering class on
    // vertex sets whose host edges have all been decided already, since
    // membership is hereditary but not monotone under edge insertion.
    class CoverSearch {
      public:
        CoverSearch(const Graph &host, CoverClass c, Deadline &deadline) :
            host_(host), class_(c), deadline_(deadline), n_(host.order()),
            edges_(decision_order(host)), position_(idx(n_) * idx(n_), -1), cache_(edges_, c), load_(idx(n_), 0)
        {
            for (std::size_t i = 0; i < edges_.size(); ++i) {
                position_[idx(edges_[i].u) * idx(n_) + idx(edges_[i].v)] = static_cast<int>(i);
                position_[idx(edges_[i].v) * idx(n_) + idx(edges_[i].u)] = static_cast<int>(i);
            }
        }

        auto run(Budget budget, int limit) -> std::optional<CoCover>
        {
            budget_ = budget;
            limit_ = limit;
            bags_.clear();
            std::fill(load_.begin(), load_.end(), 0);
            if (! search(0))
                return std::nullopt;

            CoCover cover{host_, {}, class_};
            for (const auto &bag : bags_) {
                Bag edges;
                for (int p : bag.members)
                    edges.push_back(edges_[idx(p)]);
                std::sort(edges.begin(), edges.end());
                cover.bags.push_back(std::move(edges));
            }
            return cover;
        }

      private:
        const Graph &host_;
        CoverClass class_;
        Deadline &deadline_;
        int n_;
        std::vector<Edge> edges_;
        std::vector<int> position_;
        MembershipCache cache_;
        std::vector<BagState> bags_;
        std::vector<int> load_;
        Budget budget_ = Budget::bags;
        int limit_ = 0;

        // Descending degree sum, ties broken lexicographically.
        static auto decision_order(const Graph &host) -> std::vector<Edge>
        {
            auto es = host.edges();
            std::stable_sort(es.begin(), es.end(), [&](const Edge &a, const Edge &b) {
                return host.degree(a.u) + host.degree(a.v) > host.degree(b.u) + host.degree(b.v);
            });
            return es;
        }

        auto position(Vertex a, Vertex b) const -> int { return position_[idx(a) * idx(n_) + idx(b)]; }

        // True when the pair can no longer become an edge of the bag.
        auto blocked(const BagState &bag, Vertex a, Vertex b, int decided) const -> bool
        {
            int p = position(a, b);
            return p < 0 || (p <= decided && ! bag.mask.test(idx(p)));
        }

        auto search(std::size_t k) -> bool
        {
            deadline_.tick();
            if (k == edges_.size()) {
                for (const auto &bag : bags_)
                    if (! cache_.member(bag.mask))
                        return false;
                return true;
            }

            for (const auto &choice : choices(edges_[k])) {
                apply(choice, k);
                bool ok = consistent(static_cast<int>(k)) && search(k + 1);
                if (ok)
                    return true;
                undo(choice, k);
            }
            return false;
        }

        auto choices(const Edge &e) const -> std::vector<Choice>
        {
            const int used = static_cast<int>(bags_.size());
            std::vector<Choice> result;

            if (budget_ == Budget::bags) {
                for (int r = 1; r <= limit_; ++r)
                    for (int fresh = 0; fresh <= std::min(r, limit_ - used); ++fresh) {
                        int pick = r - fresh;
                        if (pick > used)
                            continue;
                        std::vector<int> chosen;
                        enumerate_subsets(used, pick, 0, chosen, [&](const std::vector<int> &s) {
                            result.push_back(Choice{s, fresh});
                        });
                    }
                return result;
            }

            // Locality budget: joining a bag that does not yet contain an
            // endpoint costs that endpoint one unit; a fresh bag costs one
            // unit at each end.
            std::vector<int> chosen;
            std::function<void(int, int, int)> grow = [&](int next, int cost_u, int cost_v) {
                int room = std::min(limit_ - load_[idx(e.u)] - cost_u, limit_ - load_[idx(e.v)] - cost_v);
                for (int fresh = 0; fresh <= std::max(room, 0); ++fresh)
                    if (! chosen.empty() || fresh > 0)
                        result.push_back(Choice{chosen, fresh});
                for (int b = next; b < used; ++b) {
                    int cu = cost_u + (bags_[idx(b)].incidence[idx(e.u)] == 0 ? 1 : 0);
                    int cv = cost_v + (bags_[idx(b)].incidence[idx(e.v)] == 0 ? 1 : 0);
                    if (load_[idx(e.u)] + cu > limit_ || load_[idx(e.v)] + cv > limit_)
                        continue;
                    chosen.push_back(b);
                    grow(b + 1, cu, cv);
                    chosen.pop_back();
                }
            };
            grow(0, 0, 0);
            std::stable_sort(result.begin(), result.end(), [](const Choice &a, const Choice &b) {
                auto sa = a.existing.size() + idx(a.fresh), sb = b.existing.size() + idx(b.fresh);
                if (sa != sb)
                    return sa < sb;
                return a.fresh < b.fresh;
            });
            return result;
        }

        template <typename F>
        static auto enumerate_subsets(int used, int pick, int next, std::vector<int> &chosen, F &&emit) -> void
        {
            if (static_cast<int>(chosen.size()) == pick) {
                emit(chosen);
                return;
            }
            for (int b = next; b < used; ++b) {
                chosen.push_back(b);
                enumerate_subsets(used, pick, b + 1, chosen, emit);
                chosen.pop_back();
            }
        }

        auto add_to_bag(BagState &bag, std::size_t k) -> void
        {
            const auto &e = edges_[k];
            bag.mask.set(k);
            bag.members.push_back(static_cast<int>(k));
            for (Vertex x : {e.u, e.v})
                if (bag.incidence[idx(x)]++ == 0)
                    ++load_[idx(x)];
        }

        auto remove_from_bag(BagState &bag, std::size_t k) -> void
        {
            const auto &e = edges_[k];
            bag.mask.reset(k);
            bag.members.pop_back();
            for (Vertex x : {e.u, e.v})
                if (--bag.incidence[idx(x)] == 0)
                    --load_[idx(x)];
        }

        auto apply(const Choice &choice, std::size_t k) -> void
        {
            for (int b : choice.existing)
                add_to_bag(bags_[idx(b)], k);
            for (int f = 0; f < choice.fresh; ++f) {
                bags_.push_back(BagState{EdgeMask(edges_.size()), {}, std::vector<int>(idx(n_), 0)});
                add_to_bag(bags_.back(), k);
            }
        }

        auto undo(const Choice &choice, std::size_t k) -> void
        {
            for (int f = 0; f < choice.fresh; ++f) {
                remove_from_bag(bags_.back(), k);
                bags_.pop_back();
            }
            for (int b : choice.existing)
                remove_from_bag(bags_[idx(b)], k);
        }

        auto consistent(int k) -> bool
        {
            const auto &e = edges_[idx(k)];
            for (auto &bag : bags_) {
                bool contains = bag.mask.test(idx(k));
                bool spans = bag.incidence[idx(e.u)] > 0 && bag.incidence[idx(e.v)] > 0;
                if (! contains && ! spans)
                    continue;
                if (! two_matching_free(bag, e, contains, k))
                    return false;
                if (! decided_part_in_class(bag, k))
                    return false;
            }
            return budget_ != Budget::locality || saturation_ok(e, k);
        }

        // Component label of every support vertex of the bag. Under class C
        // the whole bag counts as one component.
        auto component_labels(const BagState &bag) const -> std::vector<int>
        {
            std::vector<int> parent(idx(n_));
            for (Vertex x = 0; x < n_; ++x)
                parent[idx(x)] = class_ == CoverClass::co_interval ? 0 : x;
            if (class_ == CoverClass::co_interval)
                return parent;
            auto find = [&](int x) {
                while (parent[idx(x)] != x)
                    x = parent[idx(x)] = parent[idx(parent[idx(x)])];
                return x;
            };
            for (int p : bag.members)
                parent[idx(find(edges_[idx(p)].u))] = find(edges_[idx(p)].v);
            for (Vertex x = 0; x < n_; ++x)
                parent[idx(x)] = find(x);
            return parent;
        }

        auto fixed_two_matching(const BagState &bag, const Edge &f, const Edge &g, int k) const -> bool
        {
            if (f.u == g.u || f.u == g.v || f.v == g.u || f.v == g.v)
                return false;
            return blocked(bag, f.u, g.u, k) && blocked(bag, f.u, g.v, k) && blocked(bag, f.v, g.u, k)
                   && blocked(bag, f.v, g.v, k);
        }

        // A co-interval graph never contains an induced 2K2, so neither does
        // a component of a bag. Edges only ever get added, so components
        // only grow and a fixed 2K2 inside one component is final.
        auto two_matching_free(const BagState &bag, const Edge &e, bool contains, int k) const -> bool
        {
            auto label = component_labels(bag);
            auto together = [&](const Edge &f, const Edge &g) { return label[idx(f.u)] == label[idx(g.u)]; };

            if (contains) {
                // Under Cbar the new edge may have merged two components,
                // which exposes pairs not involving it.
                for (std::size_t a = 0; a < bag.members.size(); ++a) {
                    const auto &f = edges_[idx(bag.members[a])];
                    if (class_ == CoverClass::co_interval && bag.members[a] != k)
                        continue;
                    for (int q : bag.members) {
                        const auto &g = edges_[idx(q)];
                        if (together(f, g) && fixed_two_matching(bag, f, g, k))
                            return false;
                    }
                }
                return true;
            }

            // e was kept out of the bag: it may be the last cross pair of a
            // 2K2 made of a bag edge at e.u and a bag edge at e.v.
            for (int p : bag.members) {
                const auto &f = edges_[idx(p)];
                if (f.u != e.u && f.v != e.u)
                    continue;
                Vertex a = f.u == e.u ? f.v : f.u;
                if (a == e.v)
                    continue;
                for (int q : bag.members) {
                    const auto &g = edges_[idx(q)];
                    if (g.u != e.v && g.v != e.v)
                        continue;
                    Vertex c = g.u == e.v ? g.v : g.u;
                    if (c == e.u || c == a)
                        continue;
                    if (together(f, g) && blocked(bag, e.u, c, k) && blocked(bag, a, e.v, k) && blocked(bag, a, c, k))
                        return false;
                }
            }
            return true;
        }

        // Restrict the bag to support vertices with no undecided host edge
        // inside the support; that induced piece is final and must be in
        // the class already.
        auto decided_part_in_class(const BagState &bag, int k) -> bool
        {
            std::vector<Vertex> support;
            for (Vertex x = 0; x < n_; ++x)
                if (bag.incidence[idx(x)] > 0)
                    support.push_back(x);

            std::vector<bool> settled(idx(n_), false);
            for (Vertex w : support) {
                bool ok = true;
                for (Vertex x : support)
                    if (x != w && position(w, x) > k) {
                        ok = false;
                        break;
                    }
                settled[idx(w)] = ok;
            }

            EdgeMask part(edges_.size());
            bool any = false;
            for (int p : bag.members) {
                const auto &f = edges_[idx(p)];
                if (settled[idx(f.u)] && settled[idx(f.v)]) {
                    part.set(idx(p));
                    any = true;
                }
            }
            return ! any || cache_.member(part);
        }

        // An undecided edge whose endpoints are both at full load must land
        // in a bag that already contains both of them.
        auto saturation_ok(const Edge &e, int k) const -> bool
        {
            for (Vertex a : {e.u, e.v}) {
                if (load_[idx(a)] < limit_)
                    continue;
                for (Vertex c : host_.neighbours(a)) {
                    if (position(a, c) <= k || load_[idx(c)] < limit_)
                        continue;
                    bool shared = std::any_of(bags_.begin(), bags_.end(), [&](const BagState &bag) {
                        return bag.incidence[idx(a)] > 0 && bag.incidence[idx(c)] > 0;
                    });
                    if (! shared)
                        return false;
                }
            }
            return true;
        }
    };

    // Cover used when the budget runs out: single edges for C, a greedy
    // split into matchings for Cbar.
    auto fallback_cover(const Graph &host, CoverClass c) -> CoCover
    {
        CoCover cover{host, {}, c};
        if (c == CoverClass::co_interval) {
            for (const auto &e : host.edges())
                cover.bags.push_back(Bag{e});
            return cover;
        }
        std::vector<std::vector<bool>> used;
        for (const auto &e : host.edges()) {
            std::size_t slot = 0;
            while (slot < used.size() && (used[slot][idx(e.u)] || used[slot][idx(e.v)]))
                ++slot;
            if (slot == used.size()) {
                used.emplace_back(idx(host.order()), false);
                cover.bags.emplace_back();
            }
            used[slot][idx(e.u)] = used[slot][idx(e.v)] = true;
            cover.bags[slot].push_back(e);
        }
        return cover;
    }

    auto certified(CoCover cover, int value, int lower, bool exact) -> CoverSolution
    {
        CoverSolution solution;
        solution.stats = verify_cover(cover);
        solution.witness = std::move(cover);
        solution.value = value;
        solution.lower_bound = lower;
        solution.exact = exact;
        return solution;
    }

    auto solve(const Graph &h, CoverClass c, Budget budget, const SolveOptions &options) -> CoverSolution
    {
        Graph host = complement(h);
        if (host.size() == 0)
            return certified(CoCover{host, {}, c}, 0, 0, true);

        Deadline deadline(options);
        CoverSearch search(host, c, deadline);

        // One bag suffices exactly when the host itself is in the class.
        int level = 1;
        if (budget == Budget::bags && ! in_class(host, c))
            level = 2;

        for (;; ++level) {
            std::optional<CoCover> found;
            try {
                found = search.run(budget, level);
            }
            catch (const BudgetExceeded &) {
                auto cover = fallback_cover(host, c);
                auto stats = verify_cover(cover);
                int upper = budget == Budget::bags ? stats.globality : stats.locality;
                return certified(std::move(cover), upper, level, false);
            }
            if (! found)
                continue;

            auto stats = verify_cover(*found);
            int achieved = budget == Budget::bags ? stats.globality : stats.locality;
            if (achieved > level)
                throw std::logic_error("cover search returned a cover above its budget");
            return certified(std::move(*found), achieved, achieved, true);
        }
    }
}

auto find_global_cover(const Graph &host, int bags, CoverClass c, const SolveOptions &options) -> std::optional<CoCover>
{
    if (host.size() == 0)
        return CoCover{host, {}, c};
    Deadline deadline(options);
    CoverSearch search(host, c, deadline);
    return search.run(Budget::bags, bags);
}

auto find_local_cover(const Graph &host, int locality, CoverClass c, const SolveOptions &options)
    -> std::optional<CoCover>
{
    if (host.size() == 0)
        return CoCover{host, {}, c};
    Deadline deadline(options);
    CoverSearch search(host, c, deadline);
    return search.run(Budget::locality, locality);
}

auto boxicity(const Graph &h, const SolveOptions &options) -> CoverSolution
{
    return solve(h, CoverClass::co_interval, Budget::bags, options);
}

auto union_boxicity(const Graph &h, const SolveOptions &options) -> CoverSolution
{
    return solve(h, CoverClass::union_co_interval, Budget::bags, options);
}

auto local_boxicity(const Graph &h, const SolveOptions &options) -> CoverSolution
{
    return solve(h, CoverClass::co_interval, Budget::locality, options);
}

auto local_boxicity_union_class(const Graph &h, const SolveOptions &options) -> CoverSolution
{
    return solve(h, CoverClass::union_co_interval, Budget::locality, options);
}

} // namespace boxicity
