#include "boxicity/boxes.hpp"
#include "boxicity/families.hpp"
#include "boxicity/interval.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace boxicity {
namespace {

TEST(Families, Sizes)
{
    EXPECT_EQ(matching(3).size(), 3U);
    EXPECT_EQ(complete(5).size(), 10U);
    EXPECT_EQ(cycle(5).size(), 5U);
    EXPECT_EQ(path(5).size(), 4U);
    EXPECT_EQ(octahedron().size(), 12U);
    EXPECT_EQ(line_of_complete(4).order(), 6);
    EXPECT_THROW((void)cycle(2), std::invalid_argument);
}

TEST(Families, StarCliqueCover)
{
    for (int n = 3; n <= 6; ++n) {
        auto c = star_clique_cover(n);
        EXPECT_EQ(c.host, line_of_complete(n));
        EXPECT_EQ(verify_cover(c), (CoverStats{n, 2}));
    }
}

TEST(Families, ProjectiveIncidence)
{
    for (int q : {2, 3, 5}) {
        auto g = projective_incidence(q);
        int points = q * q + q + 1;
        EXPECT_EQ(g.order(), 2 * points);
        for (Vertex v = 0; v < g.order(); ++v)
            EXPECT_EQ(g.degree(v), q + 1);
        EXPECT_EQ(girth(g), 6);
    }
    EXPECT_THROW((void)projective_incidence(4), std::invalid_argument);
}

TEST(Families, AcyclicChromaticMatchesOracle)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto &g : oracle::graphs_up_to_isomorphism(n)) {
            auto c = acyclic_chromatic_number(g);
            EXPECT_TRUE(is_acyclic_coloring(g, c));
            EXPECT_EQ(c.colors, oracle::acyclic_chromatic_number(g)) << serialize_graph6(g);
        }
    EXPECT_EQ(acyclic_chromatic_number(cycle(4)).colors, 3);
}

TEST(Families, AcyclicColoringChecks)
{
    // proper but colours {0,1} carry the whole 4-cycle
    EXPECT_FALSE(is_acyclic_coloring(cycle(4), AcyclicColoring{2, {0, 1, 0, 1}}));
    EXPECT_FALSE(is_acyclic_coloring(path(2), AcyclicColoring{2, {0, 0}}));
    EXPECT_TRUE(is_acyclic_coloring(cycle(4), AcyclicColoring{3, {0, 1, 0, 2}}));
}

TEST(Families, ColoringToBoxesRoundTrips)
{
    for (int n = 2; n <= 6; ++n)
        for (const auto &g : oracle::graphs_up_to_isomorphism(n)) {
            auto c = acyclic_chromatic_number(g);
            auto rep = acyclic_coloring_to_boxes(g, c);
            EXPECT_EQ(intersection_graph_of_boxes(rep), g) << serialize_graph6(g);
            EXPECT_LE(rep.locality(), 2 * (std::max(c.colors, 2) - 1));
        }
}

TEST(Families, LimitsAreEnforced)
{
    EXPECT_THROW((void)acyclic_chromatic_number(Graph(acyclic_chromatic_vertex_limit + 1)), std::invalid_argument);
    EXPECT_THROW((void)acyclic_coloring_to_boxes(cycle(4), AcyclicColoring{2, {0, 1, 0, 1}}), std::invalid_argument);
}

} // namespace
} // namespace boxicity
