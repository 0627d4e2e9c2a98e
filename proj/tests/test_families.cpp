#include "mmik/catalog.hpp"
#include "mmik/families.hpp"

#include <gtest/gtest.h>

using namespace mmik;

TEST(Families, TriangleYAndBack)
{
    SmallGraph k4 = complete(4);
    SmallGraph t = triangle_y(k4, {0, 1, 2});
    EXPECT_EQ(t.order(), 5);
    EXPECT_EQ(t.size(), 6);
    EXPECT_EQ(t.degree(4), 3);
    EXPECT_TRUE(are_isomorphic(y_triangle(t, 4), k4));
    EXPECT_THROW(triangle_y(cycle(4), {0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(y_triangle(cycle(4), 0), std::invalid_argument);
}

TEST(Families, PetersenFamily)
{
    FamilyClosure fam = family_closure(complete(6), "K6");
    EXPECT_EQ(fam.members.size(), 7u);
    for (const auto& m : fam.members)
        EXPECT_EQ(m.graph.size(), 15);
    EXPECT_TRUE(is_closed(fam));
    EXPECT_EQ(fam.of_order(10).size(), 1u);
    EXPECT_TRUE(is_triangle_free(fam.of_order(10).front()));
    EXPECT_TRUE(fam.contains(complete_multipartite({3, 3, 1})));
    EXPECT_FALSE(fam.contains(complete(7)));
}

TEST(Families, LargerFamilies)
{
    FamilyClosure k7 = family_closure(complete(7), "K7");
    EXPECT_EQ(k7.members.size(), 20u);
    EXPECT_TRUE(is_closed(k7));
    FamilyClosure k3311 = family_closure(complete_multipartite({3, 3, 1, 1}), "K3,3,1,1");
    EXPECT_EQ(k3311.members.size(), 58u);
    EXPECT_TRUE(is_closed(k3311));
}

TEST(Families, ProvenanceReplays)
{
    FamilyClosure fam = family_closure(complete(7), "K7");
    for (const auto& m : fam.members) {
        if (m.parent < 0)
            continue;
        const SmallGraph& p = fam.members[m.parent].graph;
        SmallGraph r = m.move == Move::triangle_y ? triangle_y(p, m.triangle) : y_triangle(p, m.vertex);
        EXPECT_EQ(canonical_key(r), m.key);
    }
}

TEST(Families, CapIsEnforced)
{
    EXPECT_THROW(family_closure(complete(7), "K7", 5), FamilyCapExceeded);
}
