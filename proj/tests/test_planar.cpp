#include "mmik/enumerate.hpp"
#include "mmik/planar.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mmik;

namespace {

void check_slice(int n, int m)
{
    int planar = 0;
    for (const auto& g : enumerate_graphs(EnumSpec::slice(n, m), 1)) {
        const auto r = is_planar(g);
        ASSERT_EQ(r.planar, kuratowski_oracle(g)) << n << "," << m;
        if (!r.planar) {
            ASSERT_TRUE(r.obstruction.has_value()) << n << "," << m;
            ASSERT_TRUE(verify_obstruction(g, *r.obstruction));
        } else {
            ++planar;
        }
    }
    // Euler bound: more than 3n-6 edges is never planar
    if (m > 3 * n - 6) {
        EXPECT_EQ(planar, 0);
    }
}

} // namespace

TEST(Planar, SmallClassics)
{
    EXPECT_FALSE(planar_test(complete(5)));
    EXPECT_FALSE(planar_test(complete_multipartite({3, 3})));
    EXPECT_TRUE(planar_test(delete_edge(complete(5), 0, 1)));
    EXPECT_TRUE(planar_test(complete(4)));
    EXPECT_TRUE(planar_test(complete_multipartite({2, 2, 2})));  // octahedron
    EXPECT_TRUE(planar_test(SmallGraph(0)));
    EXPECT_TRUE(planar_test(disjoint_union(complete(4), cycle(5))));
    EXPECT_FALSE(planar_test(disjoint_union(complete(4), complete(5))));
}

TEST(Planar, BruteForceAllSmallGraphs)
{
    for (int n = 1; n <= 6; ++n) {
        const int all = n * (n - 1) / 2;
        for (const auto& g : enumerate_graphs(EnumSpec::slice(n, 0, all), 1))
            ASSERT_EQ(planar_test(g), oracle::brute_planar(g));
    }
}

TEST(Planar, BruteForceSlice7_12)
{
    for (const auto& g : enumerate_graphs(EnumSpec::slice(7, 12), 1))
        ASSERT_EQ(planar_test(g), oracle::brute_planar(g));
}

TEST(Planar, MinorOracleSlice7_12) { check_slice(7, 12); }
TEST(Planar, MinorOracleSlice8_15) { check_slice(8, 15); }
TEST(Planar, MinorOracleSlice8_16) { check_slice(8, 16); }

TEST(Planar, RandomGraphs)
{
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<int> order(5, 9);
    std::uniform_real_distribution<double> density(0.2, 0.7);
    for (int i = 0; i < 10000; ++i) {
        SmallGraph g = oracle::random_graph(rng, order(rng), density(rng));
        ASSERT_EQ(planar_test(g), kuratowski_oracle(g));
    }
}
