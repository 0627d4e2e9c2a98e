#include "mmik/catalog.hpp"
#include "mmik/graph6.hpp"

#include <gtest/gtest.h>

using namespace mmik;

TEST(Catalog, LedgerCoversEveryName)
{
    const Catalog& cat = catalog();
    EXPECT_EQ(cat.graphs.size(), catalog_ledger().size());
    for (const auto& [name, os] : catalog_ledger()) {
        ASSERT_TRUE(cat.has(name)) << name;
        EXPECT_EQ(cat[name].order(), os.first) << name;
        EXPECT_EQ(cat[name].size(), os.second) << name;
    }
    EXPECT_THROW(cat.get("nope"), CatalogError);
}

TEST(Catalog, NamesArePairwiseNonIsomorphic)
{
    const auto& gs = catalog().graphs;
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            EXPECT_FALSE(are_isomorphic(gs[i].graph, gs[j].graph)) << gs[i].name << " " << gs[j].name;
}

TEST(Catalog, FamilyMembership)
{
    const Catalog& cat = catalog();
    for (const char* n : {"K6", "K3,3,1", "P7", "K4,4-e", "P8", "P9", "P10"})
        EXPECT_TRUE(cat.petersen_family.contains(cat[n])) << n;
    for (const char* n : {"K7", "H8", "E9", "F9", "H9"})
        EXPECT_TRUE(cat.k7_family.contains(cat[n])) << n;
    for (const char* n : {"K3,3,1,1", "A9", "B9", "Cousin12", "Cousin41"})
        EXPECT_TRUE(cat.k3311_family.contains(cat[n])) << n;
    EXPECT_FALSE(cat.k7_family.contains(cat["E9+e"]));
    EXPECT_FALSE(cat.k3311_family.contains(cat["E9+e"]));
    EXPECT_EQ(cat.k7_family.of_order(9).size(), 3u);
    EXPECT_EQ(cat.k3311_family.of_order(9).size(), 4u);
}

TEST(Catalog, StructuralFacts)
{
    const Catalog& cat = catalog();
    EXPECT_TRUE(has_subgraph(cat["E9+e"], cat["E9"]).has_value());
    EXPECT_FALSE(has_subgraph(cat["E9+e"], cat["F9"]).has_value());
    EXPECT_TRUE(has_subgraph(cat["260910"], cat["G9,27"]).has_value());
    EXPECT_TRUE(has_subgraph(add_vertex_avoiding(cat["P8"], bit(0)), cat["A9"]) ||
                [&] {
                    for (int v = 0; v < 8; ++v)
                        if (are_isomorphic(add_vertex_avoiding(cat["P8"], bit(v)), cat["A9"]))
                            return true;
                    return false;
                }());
    EXPECT_TRUE(is_triangle_free(cat["P10"]));
    EXPECT_EQ(cat.identify(complete(7)), std::optional<std::string>("K7"));
    EXPECT_EQ(cat.identify(cycle(5)), std::nullopt);
    for (const char* n : {"G9,26", "G9,27", "G9,28"})
        EXPECT_FALSE(is_k_apex(cat[n], 2)) << n;
}

TEST(Catalog, PinnedCanonicalForms)
{
    const Catalog& cat = catalog();
    EXPECT_EQ(to_graph6(canonical_graph(cat["Cousin12"])), "HLr@y}n");
    EXPECT_EQ(to_graph6(canonical_graph(cat["Cousin41"])), "HImu^_~");
}

TEST(Catalog, NameLists)
{
    EXPECT_EQ(ik_probe_names().size(), 7u);
    EXPECT_EQ(small_mmik_names().size(), 10u);
    for (const auto& n : small_mmik_names()) {
        const int m = catalog()[n].size();
        EXPECT_TRUE(m == 21 || m == 22) << n;
    }
}
