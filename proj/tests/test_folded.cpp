#include "boxicity/families.hpp"
#include "boxicity/folded.hpp"
#include "boxicity/interval.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace boxicity {
namespace {

auto kind_of(const Graph &host, const FoldedCover &f, CoverClass c) -> std::optional<FoldedCoverError::Kind>
{
    try {
        (void)verify_folded_cover(host, f, c);
    }
    catch (const FoldedCoverError &e) {
        return e.kind();
    }
    return std::nullopt;
}

TEST(Folded, IdentityFoldOfAnEdge)
{
    FoldedCover f{complete(2), {0, 1}};
    EXPECT_EQ(verify_folded_cover(complete(2), f, CoverClass::co_interval), 1);
}

TEST(Folded, EightCycleOverFourCycleFailsTheClass)
{
    // C8 wrapped twice around C4, fibers {i, i+4}
    FoldedCover f{cycle(8), {0, 1, 2, 3, 0, 1, 2, 3}};
    EXPECT_EQ(kind_of(cycle(4), f, CoverClass::co_interval), FoldedCoverError::Kind::class_violation);
    EXPECT_EQ(kind_of(cycle(4), f, CoverClass::union_co_interval), FoldedCoverError::Kind::class_violation);
    EXPECT_FALSE(oracle::is_co_interval(cycle(8)));
}

TEST(Folded, MatchingIdentityUnderUnionClass)
{
    FoldedCover f{matching(2), {0, 1, 2, 3}};
    EXPECT_EQ(verify_folded_cover(matching(2), f, CoverClass::union_co_interval), 1);
    EXPECT_EQ(kind_of(matching(2), f, CoverClass::co_interval), FoldedCoverError::Kind::class_violation);
}

TEST(Folded, StructuralViolations)
{
    auto host = path(3);
    EXPECT_EQ(kind_of(host, FoldedCover{path(3), {0, 1}}, CoverClass::co_interval),
        FoldedCoverError::Kind::malformed_map);
    EXPECT_EQ(kind_of(host, FoldedCover{path(3), {0, 1, 5}}, CoverClass::co_interval),
        FoldedCoverError::Kind::malformed_map);
    // split vertices 0 and 1 are adjacent but share a fiber
    EXPECT_EQ(kind_of(host, FoldedCover{path(3), {1, 1, 2}}, CoverClass::co_interval),
        FoldedCoverError::Kind::dependent_fiber);
    // edge 1-2 of the split graph maps onto the non-edge 0-2
    EXPECT_EQ(kind_of(host, FoldedCover{path(3), {1, 0, 2}}, CoverClass::co_interval),
        FoldedCoverError::Kind::non_homomorphism);
    Graph lone(3);
    lone.add_edge(0, 1);
    EXPECT_EQ(kind_of(host, FoldedCover{lone, {0, 1, 2}}, CoverClass::co_interval),
        FoldedCoverError::Kind::uncovered_edge);
}

TEST(Folded, TwoPathBagsOverFourCycle)
{
    auto host = cycle(4);
    CoCover c{host, {{{0, 1}, {1, 2}}, {{2, 3}, {0, 3}}}, CoverClass::co_interval};
    auto f = local_cover_to_folded(c);
    EXPECT_EQ(f.split_graph.order(), 6);
    EXPECT_EQ(f.split_graph.size(), 4U);
    EXPECT_EQ(verify_folded_cover(host, f, CoverClass::union_co_interval), 2);
}

TEST(Folded, StarCliqueCoverGivesLocalityTwo)
{
    auto f = local_cover_to_folded(star_clique_cover(5));
    EXPECT_EQ(verify_folded_cover(line_of_complete(5), f, CoverClass::union_co_interval), 2);
}

TEST(Folded, OneBagMatchingCoverIsIdentity)
{
    CoCover c{matching(3), {{{0, 1}, {2, 3}, {4, 5}}}, CoverClass::union_co_interval};
    auto f = local_cover_to_folded(c);
    EXPECT_EQ(f.split_graph, matching(3));
    EXPECT_EQ(f.fold_map, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(Folded, SearchExamples)
{
    auto found = folded_search_bounded(complement(path(5)), 2, 7, CoverClass::co_interval);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->locality, 1);

    EXPECT_FALSE(folded_search_bounded(matching(2), 2, 8, CoverClass::co_interval).has_value());
    EXPECT_FALSE(folded_search_bounded(matching(2), 3, 12, CoverClass::co_interval).has_value());

    auto union_found = folded_search_bounded(matching(2), 2, 8, CoverClass::union_co_interval);
    ASSERT_TRUE(union_found.has_value());
    EXPECT_EQ(union_found->locality, 1);

    EXPECT_THROW((void)folded_search_bounded(matching(2), 2, 13, CoverClass::co_interval), std::invalid_argument);
}

TEST(Folded, SearchResultsVerify)
{
    for (const auto &host : oracle::graphs_up_to_isomorphism(4)) {
        auto found = folded_search_bounded(host, 2, 6, CoverClass::union_co_interval);
        if (! found)
            continue;
        EXPECT_EQ(verify_folded_cover(host, found->cover, CoverClass::union_co_interval), found->locality);
    }
}

TEST(Folded, FoldingRecoversAHostSupergraph)
{
    for (const auto &h : oracle::graphs_up_to_isomorphism(5)) {
        auto host = complement(h);
        auto witness = local_boxicity(h).witness;
        auto f = local_cover_to_folded(witness);
        auto folded = fold_along_fibers(f, host.order());
        ASSERT_EQ(folded.order(), host.order());
        for (const auto &e : host.edges())
            EXPECT_TRUE(folded.adjacent(e.u, e.v));
    }
}

} // namespace
} // namespace boxicity
