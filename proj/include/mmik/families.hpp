#pragma once

// ∇Y and Y∇ moves and closure of a graph under both.

#include "mmik/canon.hpp"
#include "mmik/graph.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmik {

/// Deletes the triangle's edges and joins a new last vertex to its corners.
inline SmallGraph triangle_y(const SmallGraph& g, std::array<int, 3> t)
{
    auto [a, b, c] = t;
    for (int v : t)
        if (v < 0 || v >= g.order())
            throw GraphError("triangle vertex out of range");
    if (a == b || b == c || a == c || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c))
        throw GraphError("{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                         "} is not a triangle");
    if (g.order() + 1 > kMaxOrder)
        throw GraphError("triangle-Y result exceeds order " + std::to_string(kMaxOrder));
    SmallGraph out(g.order() + 1);
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    out.remove_edge(a, b);
    out.remove_edge(b, c);
    out.remove_edge(a, c);
    const int v = g.order();
    for (int x : t)
        out.add_edge(x, v);
    return out;
}

/// Deletes a degree-3 vertex and makes its neighborhood a triangle; edges
/// already present are not doubled.
inline SmallGraph y_triangle(const SmallGraph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw GraphError("no vertex " + std::to_string(v));
    if (g.degree(v) != 3)
        throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", not 3");
    SmallGraph h = g;
    std::vector<int> nb;
    for_each_bit(g.row(v), [&](int w) { nb.push_back(w); });
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!h.has_edge(nb[i], nb[j]))
                h.add_edge(nb[i], nb[j]);
    return delete_vertex(h, v);
}

enum class Move { none, triangle_y, y_triangle };

inline std::string to_string(Move m)
{
    switch (m) {
    case Move::none: return "seed";
    case Move::triangle_y: return "triangle-Y";
    case Move::y_triangle: return "Y-triangle";
    }
    return "?";
}

struct FamilyMember {
    SmallGraph graph;  // canonical labeling
    CanonKey key;
    int parent = -1;   // index into members, -1 for the seed
    Move move = Move::none;
    std::array<int, 3> triangle{-1, -1, -1};  // for triangle-Y, in the parent's labels
    int vertex = -1;                           // for Y-triangle, in the parent's labels
    int edges_lost = 0;                        // doubled edges removed by a Y-triangle move
};

struct FamilyClosure {
    std::string seed_name;
    std::vector<FamilyMember> members;

    int find(const SmallGraph& g) const
    {
        const CanonKey key = canonical_key(g);
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i].key == key)
                return static_cast<int>(i);
        return -1;
    }

    bool contains(const SmallGraph& g) const { return find(g) >= 0; }

    std::vector<SmallGraph> of_order(int n) const
    {
        std::vector<SmallGraph> out;
        for (const auto& m : members)
            if (m.graph.order() == n)
                out.push_back(m.graph);
        return out;
    }
};

class FamilyCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Breadth-first closure under both moves, deduplicated by canonical form.
/// Members are ordered by discovery; the BFS visits moves in a fixed order so
/// the result is deterministic.
inline FamilyClosure family_closure(const SmallGraph& seed, std::string seed_name = {}, std::size_t cap = 10000)
{
    FamilyClosure fam;
    fam.seed_name = std::move(seed_name);
    std::map<CanonKey, int> index;

    auto add = [&](const SmallGraph& g, FamilyMember proto) {
        CanonicalForm form = canonical_form(g);
        if (index.count(form.key))
            return;
        if (fam.members.size() >= cap)
            throw FamilyCapExceeded("family of " + fam.seed_name + " exceeds " + std::to_string(cap) + " members");
        index.emplace(form.key, static_cast<int>(fam.members.size()));
        proto.graph = apply_permutation(g, form.perm);
        proto.key = form.key;
        fam.members.push_back(std::move(proto));
    };

    add(seed, FamilyMember{});
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const SmallGraph g = fam.members[i].graph;
        for (const auto& t : triangles(g)) {
            FamilyMember m;
            m.parent = static_cast<int>(i);
            m.move = Move::triangle_y;
            m.triangle = t;
            add(triangle_y(g, t), m);
        }
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) != 3)
                continue;
            SmallGraph r = y_triangle(g, v);
            FamilyMember m;
            m.parent = static_cast<int>(i);
            m.move = Move::y_triangle;
            m.vertex = v;
            m.edges_lost = g.size() - r.size();
            add(r, m);
        }
    }
    return fam;
}

/// Re-applies both moves to every member and checks nothing new appears.
inline bool is_closed(const FamilyClosure& fam)
{
    for (const auto& m : fam.members) {
        for (const auto& t : triangles(m.graph))
            if (!fam.contains(triangle_y(m.graph, t)))
                return false;
        for (int v = 0; v < m.graph.order(); ++v)
            if (m.graph.degree(v) == 3 && !fam.contains(y_triangle(m.graph, v)))
                return false;
    }
    return true;
}

} // namespace mmik
