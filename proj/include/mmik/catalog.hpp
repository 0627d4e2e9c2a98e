#pragma once

// Named graphs. Graphs that are only known by name are pinned by derivation
// procedures run when the catalog is first built; a procedure that does not
// single out exactly one graph aborts the build.

#include "mmik/apex.hpp"
#include "mmik/canon.hpp"
#include "mmik/enumerate.hpp"
#include "mmik/families.hpp"
#include "mmik/graph.hpp"
#include "mmik/minors.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmik {

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NamedGraph {
    std::string name;
    SmallGraph graph;
    std::string provenance;
};

class Catalog {
public:
    const NamedGraph& get(std::string_view name) const
    {
        for (const auto& g : graphs)
            if (g.name == name)
                return g;
        throw CatalogError("unknown graph name '" + std::string(name) + "'");
    }

    const SmallGraph& operator[](std::string_view name) const { return get(name).graph; }

    bool has(std::string_view name) const
    {
        for (const auto& g : graphs)
            if (g.name == name)
                return true;
        return false;
    }

    /// Name of a catalog graph isomorphic to g, if any.
    std::optional<std::string> identify(const SmallGraph& g) const
    {
        for (const auto& ng : graphs)
            if (are_isomorphic(ng.graph, g))
                return ng.name;
        return std::nullopt;
    }

    std::vector<NamedGraph> graphs;
    FamilyClosure petersen_family;
    FamilyClosure k7_family;
    FamilyClosure k3311_family;
};

/// (order, size) every named graph must have.
inline const std::map<std::string, std::pair<int, int>>& catalog_ledger()
{
    static const std::map<std::string, std::pair<int, int>> ledger{
        {"K5", {5, 10}},          {"K3,3", {6, 9}},        {"K6", {6, 15}},         {"K7", {7, 21}},
        {"K8", {8, 28}},          {"K3,3,1", {7, 15}},     {"P7", {7, 15}},         {"K4,4", {8, 16}},
        {"K4,4-e", {8, 15}},      {"P8", {8, 15}},         {"P9", {9, 15}},         {"P10", {10, 15}},
        {"K3,3,1,1", {8, 22}},    {"H8", {8, 21}},         {"F9", {9, 21}},         {"H9", {9, 21}},
        {"E9", {9, 21}},          {"A9", {9, 22}},         {"B9", {9, 22}},         {"E9+e", {9, 22}},
        {"Cousin12", {9, 22}},    {"Cousin41", {9, 22}},   {"G9,26", {9, 26}},      {"G9,27", {9, 27}},
        {"G9,28", {9, 28}},       {"260910", {9, 29}},
    };
    return ledger;
}

/// The MMN2A edge list for G9,26 as published, 1-based.
inline const std::vector<std::pair<int, int>>& g926_published_edges()
{
    static const std::vector<std::pair<int, int>> edges{
        {1, 4}, {1, 5}, {1, 7}, {1, 8}, {1, 9}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 5}, {3, 6}, {3, 7},
        {3, 8}, {3, 9}, {4, 6}, {4, 7}, {4, 8}, {4, 9}, {5, 6}, {5, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9},
    };
    return edges;
}

inline SmallGraph from_one_based(int n, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<Edge> edges;
    for (auto [a, b] : pairs)
        edges.emplace_back(a - 1, b - 1);
    return from_edges(n, edges);
}

/// K4,4 minus an edge: parts {0..3}, {4..7}, edge {0,4} removed, so 0 and 4 have degree 3.
inline SmallGraph k44_minus_edge()
{
    SmallGraph g = complete_multipartite({4, 4});
    g.remove_edge(0, 4);
    return g;
}

/// G plus a new last vertex adjacent to every vertex except `avoid`.
inline SmallGraph add_vertex_avoiding(const SmallGraph& g, Mask avoid)
{
    SmallGraph out(g.order() + 1);
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    for_each_bit(g.vertices() & ~avoid, [&](int v) { out.add_edge(v, g.order()); });
    return out;
}

namespace detail {

inline std::vector<SmallGraph> distinct_children(const SmallGraph& g)
{
    std::vector<SmallGraph> out;
    std::vector<CanonKey> seen;
    for (const auto& t : triangles(g)) {
        SmallGraph c = canonical_graph(triangle_y(g, t));
        CanonKey k = canonical_key(c);
        if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
            seen.push_back(k);
            out.push_back(c);
        }
    }
    return out;
}

template <typename Pred>
std::vector<SmallGraph> select(const std::vector<SmallGraph>& from, Pred pred)
{
    std::vector<SmallGraph> out;
    for (const auto& g : from)
        if (pred(g))
            out.push_back(g);
    return out;
}

inline const SmallGraph& exactly_one(const std::vector<SmallGraph>& found, const std::string& what)
{
    if (found.size() != 1)
        throw CatalogError("derivation of " + what + " found " + std::to_string(found.size()) +
                           " candidates, expected exactly 1");
    return found.front();
}

inline std::vector<SmallGraph> remove_isomorphic(std::vector<SmallGraph> from, const SmallGraph& g)
{
    std::erase_if(from, [&](const SmallGraph& x) { return are_isomorphic(x, g); });
    return from;
}

// One extension per non-edge orbit.
inline std::vector<SmallGraph> one_edge_extensions(const SmallGraph& g)
{
    std::vector<SmallGraph> out;
    for (const auto& cls : orbits(g, ElementKind::non_edge).pair_classes)
        out.push_back(add_edge(g, cls.front().u, cls.front().v));
    return out;
}

inline Catalog build_catalog()
{
    Catalog cat;
    auto put = [&](std::string name, SmallGraph g, std::string provenance) {
        cat.graphs.push_back({std::move(name), std::move(g), std::move(provenance)});
    };

    put("K5", complete(5), "complete graph");
    put("K3,3", complete_multipartite({3, 3}), "complete bipartite graph");
    put("K6", complete(6), "complete graph");
    put("K7", complete(7), "complete graph");
    put("K8", complete(8), "complete graph");
    put("K3,3,1", complete_multipartite({3, 3, 1}), "complete multipartite graph");
    put("K4,4", complete_multipartite({4, 4}), "complete bipartite graph");
    put("K4,4-e", k44_minus_edge(), "K4,4 with edge {0,4} deleted");
    put("K3,3,1,1", complete_multipartite({3, 3, 1, 1}), "complete multipartite graph");

    // Petersen family.
    cat.petersen_family = family_closure(complete(6), "K6");
    {
        auto order7 = remove_isomorphic(cat.petersen_family.of_order(7), cat["K3,3,1"]);
        put("P7", exactly_one(order7, "P7"), "order-7 Petersen family member other than K3,3,1");
        auto order8 = remove_isomorphic(cat.petersen_family.of_order(8), cat["K4,4-e"]);
        put("P8", exactly_one(order8, "P8"), "order-8 Petersen family member other than K4,4-e");
        put("P9", exactly_one(cat.petersen_family.of_order(9), "P9"), "order-9 Petersen family member");
        auto p10 = select(cat.petersen_family.of_order(10), [](const SmallGraph& g) { return is_triangle_free(g); });
        put("P10", exactly_one(p10, "P10"), "Petersen graph: the triangle-free Petersen family member");
    }

    // K7 family.
    put("H8", triangle_y(complete(7), {0, 1, 2}), "triangle-Y on K7");
    cat.k7_family = family_closure(complete(7), "K7");
    {
        const auto order9 = cat.k7_family.of_order(9);
        const SmallGraph calibration = add_vertex_avoiding(cat["K4,4-e"], bit(0));
        auto h9 = select(order9, [&](const SmallGraph& g) { return has_subgraph(calibration, g).has_value(); });
        const SmallGraph H9 = exactly_one(h9, "H9");
        put("H9", H9,
            "order-9 K7-family member that is a proper minor of K4,4-e plus a vertex adjacent to all but one "
            "degree-3 vertex");

        // Of the other two, E9 is the one with a non-edge orbit whose extension
        // has no F9 subgraph while the other orbit's extension has one.
        auto rest = remove_isomorphic(order9, H9);
        if (rest.size() != 2)
            throw CatalogError("K7 family has " + std::to_string(order9.size()) + " order-9 members, expected 3");
        std::vector<std::pair<SmallGraph, SmallGraph>> assignments;  // (E9, F9)
        for (int pick = 0; pick < 2; ++pick) {
            const SmallGraph& e9 = rest[pick];
            const SmallGraph& f9 = rest[1 - pick];
            auto ext = one_edge_extensions(e9);
            int with_f9 = 0;
            for (const auto& x : ext)
                with_f9 += has_subgraph(x, f9).has_value() ? 1 : 0;
            if (ext.size() == 2 && with_f9 == 1)
                assignments.emplace_back(e9, f9);
        }
        if (assignments.size() != 1)
            throw CatalogError("E9/F9 disambiguation is ambiguous (" + std::to_string(assignments.size()) +
                               " consistent assignments)");
        const auto [E9, F9] = assignments.front();
        put("F9", F9, "order-9 K7-family member other than H9 and E9");
        put("E9", E9, "order-9 K7-family member with one non-edge orbit extension lacking an F9 subgraph");
        auto e9e = select(one_edge_extensions(E9), [&](const SmallGraph& g) { return !has_subgraph(g, F9); });
        put("E9+e", exactly_one(e9e, "E9+e"), "E9 plus the non-edge orbit whose extension has no F9 subgraph");
    }

    // K3,3,1,1 family.
    cat.k3311_family = family_closure(cat["K3,3,1,1"], "K3,3,1,1");
    {
        auto children = distinct_children(cat["K3,3,1,1"]);
        if (children.size() != 2)
            throw CatalogError("K3,3,1,1 has " + std::to_string(children.size()) + " distinct children, expected 2");
        std::vector<SmallGraph> p8_apexed;
        for (const auto& cls : orbits(cat["P8"], ElementKind::vertex).vertex_classes)
            p8_apexed.push_back(add_vertex_avoiding(cat["P8"], bit(cls.front())));
        auto a9 = select(children, [&](const SmallGraph& c) {
            return std::any_of(p8_apexed.begin(), p8_apexed.end(),
                               [&](const SmallGraph& g) { return are_isomorphic(c, g); });
        });
        const SmallGraph A9 = exactly_one(a9, "A9");
        const SmallGraph B9 = exactly_one(remove_isomorphic(children, A9), "B9");
        put("A9", A9, "child of K3,3,1,1 equal to P8 plus a vertex adjacent to all but one vertex");
        put("B9", B9, "the other child of K3,3,1,1");

        auto cousins = remove_isomorphic(remove_isomorphic(cat.k3311_family.of_order(9), A9), B9);
        if (cousins.size() != 2)
            throw CatalogError("K3,3,1,1 family has " + std::to_string(cousins.size() + 2) +
                               " order-9 members, expected 4");
        // Cousin12 is the one where deleting a degree-6 vertex leaves an (8,15)
        // Petersen family graph plus an edge.
        auto petersen_plus_edge = [&](const SmallGraph& c) {
            for (int v = 0; v < c.order(); ++v) {
                if (c.degree(v) != 6)
                    continue;
                const SmallGraph rest = delete_vertex(c, v);
                if (has_subgraph(rest, cat["K4,4-e"]) || has_subgraph(rest, cat["P8"]))
                    return true;
            }
            return false;
        };
        auto c12 = select(cousins, petersen_plus_edge);
        const SmallGraph Cousin12 = exactly_one(c12, "Cousin12");
        put("Cousin12", Cousin12,
            "order-9 K3,3,1,1-family member other than A9, B9 that deletes to an (8,15) Petersen graph plus an edge");
        put("Cousin41", exactly_one(remove_isomorphic(cousins, Cousin12), "Cousin41"),
            "the remaining order-9 K3,3,1,1-family member");
    }

    // Order-nine graphs from the 23..29 edge analysis.
    put("G9,26", from_one_based(9, g926_published_edges()), "published MMN2A edge list (vertex i -> i-1)");
    put("G9,28", complement(disjoint_union(complete(2), cycle(7))), "complement of K2 + C7");
    put("260910", complement(disjoint_union(disjoint_union(cycle(6), complete(2)), complete(1))),
        "complement of C6 + K2 + K1");
    {
        MmnaSearchOptions opt;
        opt.min_order = opt.max_order = 9;
        opt.k = 2;
        opt.min_size = opt.max_size = 27;
        auto found = find_mm_not_k_apex(opt);
        const SmallGraph G927 = exactly_one(found, "G9,27");
        if (!has_subgraph(cat["260910"], G927))
            throw CatalogError("G9,27 is not a subgraph of 260910");
        put("G9,27", G927, "the unique (9,27) minor-minimal not 2-apex graph");
    }

    for (const auto& ng : cat.graphs) {
        auto it = catalog_ledger().find(ng.name);
        if (it == catalog_ledger().end())
            throw CatalogError("graph " + ng.name + " missing from the ledger");
        if (ng.graph.order() != it->second.first || ng.graph.size() != it->second.second)
            throw CatalogError("graph " + ng.name + " is (" + std::to_string(ng.graph.order()) + "," +
                               std::to_string(ng.graph.size()) + "), ledger says (" +
                               std::to_string(it->second.first) + "," + std::to_string(it->second.second) + ")");
    }
    return cat;
}

} // namespace detail

/// Built on first use, then shared read-only.
inline const Catalog& catalog()
{
    static const Catalog cat = detail::build_catalog();
    return cat;
}

inline const NamedGraph& named_graph(std::string_view name) { return catalog().get(name); }

/// The seven IK graphs probed by the containment test, in probe order.
inline const std::vector<std::string>& ik_probe_names()
{
    static const std::vector<std::string> names{"K7", "H8", "F9", "H9", "K3,3,1,1", "A9", "B9"};
    return names;
}

/// Catalog MMIK graphs with 21 or 22 edges (the "minor of" test).
inline const std::vector<std::string>& small_mmik_names()
{
    static const std::vector<std::string> names{"K7",  "H8",  "F9",   "H9",       "K3,3,1,1",
                                                "A9",  "B9",  "E9+e", "Cousin12", "Cousin41"};
    return names;
}

} // namespace mmik
