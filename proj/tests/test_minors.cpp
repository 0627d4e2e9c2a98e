#include "mmik/enumerate.hpp"
#include "mmik/minors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mmik;

namespace {

std::vector<SmallGraph> all_graphs(int lo, int hi)
{
    std::vector<SmallGraph> out;
    for (int n = lo; n <= hi; ++n) {
        auto part = enumerate_graphs(EnumSpec::slice(n, 0, n * (n - 1) / 2), 1);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace

TEST(Minors, ExhaustiveAgainstBruteForce)
{
    const auto hosts = all_graphs(1, 6);
    const auto patterns = all_graphs(1, 5);
    for (const auto& h : hosts)
        for (const auto& p : patterns) {
            const auto w = has_minor(h, p);
            ASSERT_EQ(w.has_value(), oracle::brute_minor(h, p));
            if (w) {
                ASSERT_TRUE(verify_witness(h, p, *w));
            }
            const auto s = has_subgraph(h, p);
            ASSERT_EQ(s.has_value(), oracle::brute_subgraph(h, p));
            if (s) {
                ASSERT_TRUE(verify_witness(h, p, *s));
            }
        }
}

TEST(Minors, IsolatedVerticesInPattern)
{
    SmallGraph p = disjoint_union(complete(3), SmallGraph(2));
    EXPECT_TRUE(has_minor(disjoint_union(cycle(4), SmallGraph(2)), p).has_value());
    EXPECT_FALSE(has_minor(path(7), p).has_value());
    EXPECT_FALSE(has_minor(cycle(5), p).has_value());
    EXPECT_FALSE(has_minor(disjoint_union(cycle(4), SmallGraph(1)), p).has_value());
    EXPECT_TRUE(has_minor(disjoint_union(cycle(5), SmallGraph(2)), p).has_value());
}

// is_proper_minor assumes pattern is already known to be a minor of host.
TEST(Minors, ProperMinor)
{
    EXPECT_TRUE(is_proper_minor(complete(6), complete(5)));
    EXPECT_FALSE(is_proper_minor(complete(5), complete(5)));
    EXPECT_TRUE(is_proper_minor(complete(5), delete_edge(complete(5), 0, 1)));
}

TEST(Minors, LargerHostsAgainstBruteForce)
{
    std::mt19937_64 rng(4242);
    const std::vector<SmallGraph> patterns{complete(5), complete_multipartite({3, 3}), complete(4),
                                           complete_multipartite({2, 2, 2})};
    for (int i = 0; i < 60; ++i) {
        SmallGraph h = oracle::random_graph(rng, 7, 0.55);
        for (const auto& p : patterns) {
            const auto w = has_minor(h, p);
            ASSERT_EQ(w.has_value(), oracle::brute_minor(h, p));
            if (w) {
                ASSERT_TRUE(verify_witness(h, p, *w));
            }
        }
    }
}

TEST(Minors, RejectsBadWitnesses)
{
    SmallGraph k4 = complete(4);
    SmallGraph c4 = cycle(4);
    MinorWitness overlapping{{bit(0), bit(0) | bit(1), bit(2), bit(3)}};
    EXPECT_FALSE(verify_witness(k4, k4, overlapping));
    MinorWitness missing_edge{{bit(0), bit(1), bit(2), bit(3)}};
    EXPECT_FALSE(verify_witness(c4, k4, missing_edge));
    MinorWitness disconnected{{bit(0) | bit(2), bit(1), bit(3)}};
    EXPECT_FALSE(verify_witness(c4, complete(3), disconnected));
    SubgraphWitness not_injective{{0, 0, 1}};
    EXPECT_FALSE(verify_witness(k4, complete(3), not_injective));
    SubgraphWitness non_edge{{0, 2, 1}};
    EXPECT_FALSE(verify_witness(c4, path(3), non_edge));
    EXPECT_TRUE(verify_witness(c4, path(3), SubgraphWitness{{0, 1, 2}}));
}
