#include "mmik/enumerate.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace mmik;

namespace {

// Isomorphism classes per size by deduplicating every labeled graph with the brute key.
std::map<int, std::set<std::uint64_t>> naive_classes(int n, const EnumSpec& filter)
{
    std::map<int, std::set<std::uint64_t>> out;
    oracle::for_each_labeled(n, [&](const SmallGraph& g) {
        if (filter.accepts(g))
            out[g.size()].insert(oracle::brute_key(g));
    });
    return out;
}

} // namespace

TEST(Enumerate, TotalsUpToOrder7)
{
    const std::vector<std::size_t> totals{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) {
        const int all = n * (n - 1) / 2;
        EXPECT_EQ(count_graphs(EnumSpec::slice(n, 0, all), 1), totals[n]) << n;
    }
}

TEST(Enumerate, MatchesNaiveDedupPerSlice)
{
    for (int n = 1; n <= 6; ++n) {
        const int all = n * (n - 1) / 2;
        auto naive = naive_classes(n, EnumSpec::slice(n, 0, all));
        for (int m = 0; m <= all; ++m)
            EXPECT_EQ(count_graphs(EnumSpec::slice(n, m), 1), naive[m].size()) << n << "," << m;
    }
}

TEST(Enumerate, Order7AgainstCanonicalDedup)
{
    std::map<int, std::set<CanonKey>> naive;
    oracle::for_each_labeled(7, [&](const SmallGraph& g) { naive[g.size()].insert(canonical_key(g)); });
    for (int m = 0; m <= 21; ++m)
        EXPECT_EQ(count_graphs(EnumSpec::slice(7, m), 1), naive[m].size()) << m;
}

TEST(Enumerate, FiltersMatchNaive)
{
    const int n = 6;
    std::vector<EnumSpec> specs{
        EnumSpec::slice(n, 0, 15).with_connected(),
        EnumSpec::slice(n, 0, 15).with_connected(false),
        EnumSpec::slice(n, 0, 15).with_min_degree(2),
        EnumSpec::slice(n, 0, 15).with_max_degree(3),
        EnumSpec::slice(n, 5, 12).with_min_degree(1).with_max_degree(4).with_connected(),
    };
    for (const auto& spec : specs) {
        std::size_t expect = 0;
        for (const auto& [m, cls] : naive_classes(n, spec))
            expect += cls.size();
        auto got = enumerate_graphs(spec, 1);
        EXPECT_EQ(got.size(), expect);
        for (const auto& g : got)
            EXPECT_TRUE(spec.accepts(g));
    }
}

TEST(Enumerate, OutputIsCanonicalSortedAndDistinct)
{
    auto graphs = enumerate_graphs(EnumSpec::slice(8, 14), 1);
    std::set<CanonKey> keys;
    for (const auto& g : graphs) {
        EXPECT_EQ(canonical_graph(g), g);
        keys.insert(canonical_key(g));
    }
    EXPECT_EQ(keys.size(), graphs.size());
    for (std::size_t i = 1; i < graphs.size(); ++i)
        EXPECT_LT(canonical_key(graphs[i - 1]), canonical_key(graphs[i]));
}

TEST(Enumerate, ComplementDuality)
{
    for (int n = 7; n <= 8; ++n) {
        const int all = n * (n - 1) / 2;
        for (int m = 0; m <= all; ++m)
            EXPECT_EQ(count_graphs(EnumSpec::slice(n, m), 1), count_graphs(EnumSpec::slice(n, all - m), 1));
    }
    // min degree on one side is max degree on the other
    auto a = enumerate_graphs(EnumSpec::slice(8, 20).with_min_degree(4), 1);
    auto b = enumerate_graphs(EnumSpec::slice(8, 8).with_max_degree(3), 1);
    std::set<CanonKey> ka, kb;
    for (const auto& g : a)
        ka.insert(canonical_key(complement(g)));
    for (const auto& g : b)
        kb.insert(canonical_key(g));
    EXPECT_EQ(ka, kb);
}

TEST(Enumerate, Order8Total)
{
    EXPECT_EQ(count_graphs(EnumSpec::slice(8, 0, 28), 1), 12346u);
}

TEST(Enumerate, DeterministicAcrossJobs)
{
    auto spec = EnumSpec::slice(9, 27).with_min_degree(3);
    EXPECT_EQ(enumerate_graphs(spec, 1), enumerate_graphs(spec, 3));
}

TEST(Enumerate, RejectsBadSpecs)
{
    EXPECT_THROW(enumerate_graphs(EnumSpec::slice(13, 0), 1), std::invalid_argument);
    EXPECT_THROW(enumerate_graphs(EnumSpec::slice(5, 11), 1), std::invalid_argument);
    EXPECT_THROW(enumerate_graphs(EnumSpec::slice(5, 4, 3), 1), std::invalid_argument);
}
