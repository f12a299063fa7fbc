#include "boxicity/boxes.hpp"
#include "boxicity/families.hpp"
#include "boxicity/interval.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace boxicity {
namespace {

TEST(Boxes, ExtentBasics)
{
    EXPECT_TRUE(Extent::full().is_full());
    EXPECT_TRUE(Extent::full().intersects(Extent::bounded(3, 4)));
    EXPECT_FALSE(Extent::bounded(1, 2).intersects(Extent::bounded(3, 4)));
    EXPECT_TRUE(Extent::bounded(1, 3).intersects(Extent::bounded(3, 4)));
    EXPECT_THROW((void)Extent::bounded(2, 1), BoxError);
}

TEST(Boxes, FullRepresentationIsComplete)
{
    auto rep = full_representation(4, 3);
    EXPECT_EQ(rep.locality(), 0);
    EXPECT_EQ(intersection_graph_of_boxes(rep), complete(4));
}

TEST(Boxes, ValidateChecksDimension)
{
    BoxRepresentation rep{2, {{Extent::full(), Extent::full()}, {Extent::full()}}};
    EXPECT_THROW(rep.validate(), BoxError);
}

TEST(Boxes, HandBuiltFourCycle)
{
    // C4 0-1-2-3-0 as two crossing bars
    BoxRepresentation rep{2,
        {{Extent::bounded(0, 1), Extent::full()}, {Extent::full(), Extent::bounded(0, 1)},
            {Extent::bounded(2, 3), Extent::full()}, {Extent::full(), Extent::bounded(2, 3)}}};
    EXPECT_EQ(intersection_graph_of_boxes(rep), cycle(4));
    EXPECT_EQ(rep.vertex_locality(0), 1);
    EXPECT_EQ(rep.locality(), 1);

    auto cover = boxes_to_cover(rep);
    EXPECT_EQ(cover.host, complement(cycle(4)));
    EXPECT_EQ(verify_cover(cover), (CoverStats{2, 1}));
}

TEST(Boxes, OctahedronFromUnionCover)
{
    auto h = octahedron();
    CoCover c{complement(h), {{{0, 1}, {2, 3}, {4, 5}}}, CoverClass::union_co_interval};
    auto rep = union_cover_to_boxes(c);
    EXPECT_EQ(rep.dimension, 3);
    EXPECT_EQ(rep.locality(), 1);
    EXPECT_EQ(intersection_graph_of_boxes(rep), h);
}

TEST(Boxes, LocalCoverRoundTripsEverySmallGraph)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto &h : oracle::graphs_up_to_isomorphism(n)) {
            auto witness = local_boxicity(h).witness;
            auto rep = local_cover_to_boxes(witness, h);
            EXPECT_EQ(intersection_graph_of_boxes(rep), h) << serialize_graph6(h);
            EXPECT_EQ(rep.locality(), verify_cover(witness).locality);
            auto back = boxes_to_cover(rep);
            EXPECT_EQ(back.host, complement(h));
            EXPECT_LE(verify_cover(back).locality, rep.locality());
        }
}

TEST(Boxes, LocalCoverRejectsWrongGraph)
{
    auto witness = boxicity(cycle(4)).witness;
    EXPECT_THROW((void)local_cover_to_boxes(witness, path(4)), std::invalid_argument);
}

TEST(Boxes, ProductIntersectsGraphs)
{
    auto a = local_cover_to_boxes(boxicity(cycle(4)).witness, cycle(4));
    auto b = full_representation(4, 2);
    std::vector<BoxRepresentation> parts{a, b};
    auto product = product_of_representations(parts);
    EXPECT_EQ(product.dimension, a.dimension + 2);
    EXPECT_EQ(intersection_graph_of_boxes(product), cycle(4));
}

} // namespace
} // namespace boxicity
