#pragma once

// Compact simple-graph value type for graphs of order at most 16.
//
// Adjacency is stored as one bit row per vertex. All operations return new
// values; a SmallGraph never aliases another.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmik {

inline constexpr int kMaxOrder = 16;

using Mask = std::uint32_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline constexpr Mask low_bits(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Calls fn(v) for every set bit v of m, ascending.
template <typename Fn>
inline void for_each_bit(Mask m, Fn&& fn)
{
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        fn(v);
    }
}

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;
};

class SmallGraph {
public:
    SmallGraph() = default;

    explicit SmallGraph(int order) : order_(order)
    {
        if (order < 0 || order > kMaxOrder)
            throw GraphError("graph order " + std::to_string(order) + " outside 0.." +
                             std::to_string(kMaxOrder));
    }

    int order() const { return order_; }
    Mask vertices() const { return low_bits(order_); }
    Mask row(int v) const { return adj_[v]; }
    const std::array<Mask, kMaxOrder>& rows() const { return adj_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return popcount(adj_[v]); }

    int size() const
    {
        int twice = 0;
        for (int v = 0; v < order_; ++v)
            twice += popcount(adj_[v]);
        return twice / 2;
    }

    void add_edge(int u, int v)
    {
        check_pair(u, v);
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    void remove_edge(int u, int v)
    {
        check_pair(u, v);
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < order_; ++u)
            for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    std::vector<Edge> non_edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < order_; ++u)
            for_each_bit(~adj_[u] & vertices() & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    bool operator==(const SmallGraph&) const = default;

private:
    void check_pair(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= order_ || v >= order_)
            throw GraphError("vertex index out of range");
        if (u == v)
            throw GraphError("loops are not allowed");
    }

    int order_ = 0;
    std::array<Mask, kMaxOrder> adj_{};
};

/// Checks symmetry, absence of loops, and that no bit lies beyond the order.
inline bool is_valid(const SmallGraph& g)
{
    if (g.order() < 0 || g.order() > kMaxOrder)
        return false;
    for (int v = 0; v < kMaxOrder; ++v) {
        Mask r = g.row(v);
        if (v >= g.order()) {
            if (r != 0)
                return false;
            continue;
        }
        if (r & bit(v))
            return false;
        if (r & ~g.vertices())
            return false;
        bool symmetric = true;
        for_each_bit(r, [&](int w) { symmetric = symmetric && g.has_edge(w, v); });
        if (!symmetric)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Constructors

inline SmallGraph empty_graph(int n) { return SmallGraph(n); }

inline SmallGraph complete(int n)
{
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline SmallGraph cycle(int n)
{
    if (n < 3)
        throw GraphError("a cycle needs at least three vertices");
    SmallGraph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

inline SmallGraph path(int n)
{
    SmallGraph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline SmallGraph complete_multipartite(const std::vector<int>& parts)
{
    int n = 0;
    for (int p : parts) {
        if (p < 0)
            throw GraphError("negative part size");
        n += p;
    }
    if (n > kMaxOrder)
        throw GraphError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    SmallGraph g(n);
    std::vector<int> part_of;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        part_of.insert(part_of.end(), parts[i], i);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                g.add_edge(u, v);
    return g;
}

/// Builds a graph from an explicit edge list. Duplicates and loops are rejected.
inline SmallGraph from_edges(int n, const std::vector<Edge>& edges)
{
    SmallGraph g(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} out of range for order " + std::to_string(n));
        if (e.u == e.v)
            throw GraphError("loop at vertex " + std::to_string(e.u));
        if (g.has_edge(e.u, e.v))
            throw GraphError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        g.add_edge(e.u, e.v);
    }
    return g;
}

inline SmallGraph disjoint_union(const SmallGraph& g, const SmallGraph& h)
{
    int n = g.order() + h.order();
    if (n > kMaxOrder)
        throw GraphError("disjoint union of order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    SmallGraph out(n);
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    for (const Edge& e : h.edges())
        out.add_edge(e.u + g.order(), e.v + g.order());
    return out;
}

/// Disjoint union plus every edge between the two sides.
inline SmallGraph join(const SmallGraph& g, const SmallGraph& h)
{
    SmallGraph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            out.add_edge(u, g.order() + v);
    return out;
}

inline SmallGraph complement(const SmallGraph& g)
{
    SmallGraph out(g.order());
    for (const Edge& e : g.non_edges())
        out.add_edge(e.u, e.v);
    return out;
}

/// perm[old] = new label.
inline SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm)
{
    SmallGraph out(g.order());
    for (const Edge& e : g.edges())
        out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

/// Subgraph induced on `keep`, reindexed compactly in ascending vertex order.
inline SmallGraph induced_subgraph(const SmallGraph& g, Mask keep)
{
    keep &= g.vertices();
    std::array<int, kMaxOrder> index{};
    int n = 0;
    for_each_bit(keep, [&](int v) { index[v] = n++; });
    SmallGraph out(n);
    for_each_bit(keep, [&](int u) {
        for_each_bit(g.row(u) & keep & ~low_bits(u + 1), [&](int v) { out.add_edge(index[u], index[v]); });
    });
    return out;
}

// ---------------------------------------------------------------------------
// Minor edits

inline SmallGraph delete_vertex(const SmallGraph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw GraphError("no vertex " + std::to_string(v));
    return induced_subgraph(g, g.vertices() & ~bit(v));
}

inline SmallGraph delete_vertices(const SmallGraph& g, Mask removed)
{
    return induced_subgraph(g, g.vertices() & ~removed);
}

inline SmallGraph delete_edge(const SmallGraph& g, int u, int v)
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v))
        throw GraphError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    SmallGraph out = g;
    out.remove_edge(u, v);
    return out;
}

inline SmallGraph add_edge(const SmallGraph& g, int u, int v)
{
    SmallGraph out = g;
    out.add_edge(u, v);
    return out;
}

/// Merges v into u (the lower index survives), drops the loop and any
/// parallel edges, and removes the higher index with a shift-down.
inline SmallGraph contract_edge(const SmallGraph& g, int u, int v)
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v))
        throw GraphError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "} to contract");
    int keep = std::min(u, v);
    int gone = std::max(u, v);
    SmallGraph merged = g;
    for_each_bit(g.row(gone) & ~bit(keep), [&](int w) {
        if (!merged.has_edge(keep, w))
            merged.add_edge(keep, w);
    });
    return delete_vertex(merged, gone);
}

// ---------------------------------------------------------------------------
// Metrics

inline std::vector<int> degree_sequence(const SmallGraph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline int min_degree(const SmallGraph& g)
{
    int d = g.order() == 0 ? 0 : kMaxOrder;
    for (int v = 0; v < g.order(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

inline int max_degree(const SmallGraph& g)
{
    int d = 0;
    for (int v = 0; v < g.order(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

inline int count_degree(const SmallGraph& g, int degree)
{
    int c = 0;
    for (int v = 0; v < g.order(); ++v)
        c += g.degree(v) == degree;
    return c;
}

/// Vertex masks of the connected components, ordered by lowest vertex.
inline std::vector<Mask> components(const SmallGraph& g)
{
    std::vector<Mask> out;
    Mask seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen & bit(s))
            continue;
        Mask comp = bit(s);
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.row(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

inline int component_count(const SmallGraph& g) { return static_cast<int>(components(g).size()); }
inline bool is_connected(const SmallGraph& g) { return component_count(g) <= 1; }

/// Every triangle once, as ascending vertex triples.
inline std::vector<std::array<int, 3>> triangles(const SmallGraph& g)
{
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < g.order(); ++a)
        for_each_bit(g.row(a) & ~low_bits(a + 1), [&](int b) {
            for_each_bit(g.row(a) & g.row(b) & ~low_bits(b + 1), [&](int c) { out.push_back({a, b, c}); });
        });
    return out;
}

inline bool is_triangle_free(const SmallGraph& g)
{
    for (int a = 0; a < g.order(); ++a) {
        bool hit = false;
        for_each_bit(g.row(a), [&](int b) { hit = hit || (g.row(a) & g.row(b)); });
        if (hit)
            return false;
    }
    return true;
}

struct Metrics {
    int size = 0;
    std::vector<int> degree_sequence;
    int min_degree = 0;
    int max_degree = 0;
    bool is_connected = true;
    int component_count = 0;
    std::vector<std::array<int, 3>> triangle_list;
};

inline Metrics metrics(const SmallGraph& g)
{
    Metrics m;
    m.size = g.size();
    m.degree_sequence = degree_sequence(g);
    m.min_degree = min_degree(g);
    m.max_degree = max_degree(g);
    m.component_count = component_count(g);
    m.is_connected = m.component_count <= 1;
    m.triangle_list = triangles(g);
    return m;
}

} // namespace mmik
