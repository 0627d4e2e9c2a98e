#include "mmik/catalog.hpp"
#include "mmik/graph6.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mmik;

TEST(Graph6, KnownStrings)
{
    EXPECT_EQ(to_graph6(complete(5)), "D~{");
    EXPECT_EQ(to_graph6(SmallGraph(0)), "?");
    EXPECT_EQ(to_graph6(SmallGraph(1)), "@");
    EXPECT_EQ(from_graph6("D~{"), complete(5));
    EXPECT_EQ(from_graph6("D~{\n"), complete(5));
}

TEST(Graph6, CatalogRoundTrip)
{
    for (const auto& ng : catalog().graphs)
        EXPECT_EQ(from_graph6(to_graph6(ng.graph)), ng.graph) << ng.name;
}

TEST(Graph6, RandomRoundTrip)
{
    std::mt19937_64 rng(6006);
    std::uniform_int_distribution<int> order(0, kMaxOrder);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        SmallGraph g = oracle::random_graph(rng, order(rng), density(rng));
        std::string s = to_graph6(g);
        SmallGraph h = from_graph6(s);
        ASSERT_EQ(h, g) << s;
        ASSERT_EQ(to_graph6(h), s);
    }
}

TEST(Graph6, MalformedInput)
{
    EXPECT_THROW(from_graph6(""), Graph6Error);
    EXPECT_THROW(from_graph6("D~"), Graph6Error);     // truncated
    EXPECT_THROW(from_graph6("D~{?"), Graph6Error);   // trailing data
    EXPECT_THROW(from_graph6("D~ {"), Graph6Error);   // byte out of range
    EXPECT_THROW(from_graph6("Q????????????????????????????????????????"), Graph6Error);  // order 18
    EXPECT_THROW(from_graph6("~??C"), Graph6Error);   // long form
}
