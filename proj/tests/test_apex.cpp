#include "mmik/apex.hpp"
#include "mmik/catalog.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mmik;

namespace {

// Smallest number of vertices whose removal leaves a planar graph, by brute force.
int brute_apex_number(const SmallGraph& g)
{
    int best = g.order();
    for (Mask s = 0; s <= g.vertices(); ++s)
        if (popcount(s) < best && oracle::brute_planar(delete_vertices(g, s)))
            best = popcount(s);
    return best;
}

} // namespace

TEST(Apex, AgainstBruteForce)
{
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 120; ++i) {
        SmallGraph g = oracle::random_graph(rng, 6 + i % 2, 0.75);
        const int a = brute_apex_number(g);
        for (int k = 0; k <= 2; ++k) {
            auto w = apex_witness(g, k);
            ASSERT_EQ(w.has_value(), a <= k);
            if (w) {
                EXPECT_TRUE(verify_apex_witness(g, k, *w));
                EXPECT_EQ(popcount(w->removed), a);
            }
        }
    }
}

TEST(Apex, Classics)
{
    EXPECT_FALSE(is_k_apex(complete(5), 0));
    EXPECT_TRUE(is_k_apex(complete(5), 1));
    EXPECT_FALSE(is_k_apex(complete(6), 1));
    EXPECT_TRUE(is_k_apex(complete(6), 2));
    EXPECT_FALSE(is_k_apex(complete(7), 2));
    EXPECT_FALSE(verify_apex_witness(complete(6), 1, ApexWitness{bit(0), true}));
    EXPECT_FALSE(verify_apex_witness(complete(6), 1, ApexWitness{bit(0) | bit(1), true}));
    EXPECT_TRUE(verify_apex_witness(complete(6), 2, ApexWitness{bit(0) | bit(1), true}));
}

TEST(Apex, PlusK2Recognition)
{
    const SmallGraph octahedron = complete_multipartite({2, 2, 2});
    EXPECT_TRUE(recognize_p_plus_k2(join(octahedron, complete(2))));
    EXPECT_TRUE(recognize_p_plus_k2(join(complete(3), complete(2))));  // K5
    EXPECT_TRUE(recognize_p_plus_k2(relabel(join(complete(4), complete(2)), {5, 0, 3, 1, 4, 2})));
    // Two universal vertices but the rest is not a triangulation
    EXPECT_FALSE(recognize_p_plus_k2(join(cycle(6), complete(2))));
    // Triangulation plus two non-adjacent apices
    EXPECT_FALSE(recognize_p_plus_k2(join(octahedron, SmallGraph(2))));
}

TEST(Apex, MinimalNotOneApexUpToOrder8)
{
    MmnaSearchOptions opt;
    opt.k = 1;
    opt.max_order = 8;
    opt.jobs = 1;
    auto found = find_mm_not_k_apex(opt);
    // Every Petersen family member of order at most 8 appears; those are exactly the hits with 15 edges.
    const auto& fam = catalog().petersen_family;
    std::size_t members = 0, hits15 = 0;
    for (const auto& m : fam.members)
        members += m.graph.order() <= 8 ? 1 : 0;
    for (const auto& g : found) {
        if (g.size() == 15) {
            ++hits15;
            EXPECT_TRUE(fam.contains(g));
        }
    }
    EXPECT_EQ(hits15, members);

    // Brute-force minimality of every hit: not 1-apex, every one-step minor 1-apex.
    auto brute_one_apex = [](const SmallGraph& g) {
        if (oracle::brute_planar(g))
            return true;
        for (int v = 0; v < g.order(); ++v)
            if (oracle::brute_planar(delete_vertex(g, v)))
                return true;
        return false;
    };
    for (const auto& g : found) {
        EXPECT_FALSE(brute_one_apex(g));
        for (const auto& e : g.edges()) {
            EXPECT_TRUE(brute_one_apex(delete_edge(g, e.u, e.v)));
            EXPECT_TRUE(brute_one_apex(contract_edge(g, e.u, e.v)));
        }
    }
}

TEST(Apex, MinimalityCheck)
{
    EXPECT_TRUE(is_mm_not_k_apex(complete(7), 2));
    EXPECT_TRUE(is_mm_not_k_apex(complete(6), 1));
    EXPECT_FALSE(is_mm_not_k_apex(complete(7), 1));  // K6 minor is already not 1-apex
    MmnaSearchOptions big;
    big.max_order = 10;
    EXPECT_THROW(find_mm_not_k_apex(big), std::invalid_argument);
}
