#pragma once

// Canonical labeling, isomorphism, automorphism generators and orbits.
//
// The canonical form is the smallest relabeled upper-triangle bit string over
// the leaves of an individualization/refinement tree. Refinement splits cells
// by neighbor counts into earlier cells, so the search only visits labelings
// compatible with an isomorphism-invariant ordered partition. Automorphisms
// are collected whenever two leaves produce the same bit string and are used
// to prune sibling subtrees.

#include "mmik/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace mmik {

using Permutation = std::array<std::uint8_t, kMaxOrder>;

/// Order plus packed upper triangle; usable as a map/set key.
struct CanonKey {
    int order = 0;
    std::array<std::uint64_t, 2> bits{};

    auto operator<=>(const CanonKey&) const = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const noexcept
    {
        std::uint64_t h = k.bits[0] * 0x9E3779B97F4A7C15ULL;
        h ^= k.bits[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(k.order) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h);
    }
};

struct CanonicalForm {
    CanonKey key;
    /// perm[input vertex] = canonical label.
    Permutation perm{};

    int order() const { return key.order; }
    const std::array<std::uint64_t, 2>& bits() const { return key.bits; }
};

/// Bit string of an upper triangle in graph6 (column-major) pair order, first
/// pair in the most significant bit, so numeric order is lexicographic order.
inline std::array<std::uint64_t, 2> pack_upper_triangle(const SmallGraph& g)
{
    std::array<std::uint64_t, 2> out{};
    int t = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.has_edge(i, j))
                out[t >> 6] |= std::uint64_t{1} << (63 - (t & 63));
    return out;
}

inline SmallGraph apply_permutation(const SmallGraph& g, const Permutation& perm)
{
    SmallGraph out(g.order());
    for (const Edge& e : g.edges())
        out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

namespace detail {

struct Cells {
    std::array<Mask, kMaxOrder> cell{};
    int count = 0;
};

inline void refine(const SmallGraph& g, Cells& c)
{
    std::array<std::pair<std::uint64_t, int>, kMaxOrder> sig{};
    for (;;) {
        Cells next;
        for (int ci = 0; ci < c.count; ++ci) {
            Mask m = c.cell[ci];
            if (popcount(m) == 1) {
                next.cell[next.count++] = m;
                continue;
            }
            int k = 0;
            for_each_bit(m, [&](int v) {
                std::uint64_t s = 0;
                for (int cj = 0; cj < c.count; ++cj)
                    s |= static_cast<std::uint64_t>(popcount(g.row(v) & c.cell[cj])) << (4 * (15 - cj));
                sig[k++] = {s, v};
            });
            std::sort(sig.begin(), sig.begin() + k);
            Mask current = bit(sig[0].second);
            for (int i = 1; i < k; ++i) {
                if (sig[i].first != sig[i - 1].first) {
                    next.cell[next.count++] = current;
                    current = 0;
                }
                current |= bit(sig[i].second);
            }
            next.cell[next.count++] = current;
        }
        bool stable = next.count == c.count;
        c = next;
        if (stable)
            return;
    }
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

class CanonSearch {
public:
    explicit CanonSearch(const SmallGraph& g) : g_(g), n_(g.order()) {}

    void run()
    {
        Cells root;
        if (n_ > 0)
            root.cell[root.count++] = g_.vertices();
        visit(root, 0);
    }

    CanonicalForm form() const
    {
        CanonicalForm f;
        f.key.order = n_;
        f.key.bits = best_bits_;
        for (int p = 0; p < kMaxOrder; ++p)
            f.perm[p] = static_cast<std::uint8_t>(p);
        for (int p = 0; p < n_; ++p)
            f.perm[best_lab_[p]] = static_cast<std::uint8_t>(p);
        return f;
    }

    const std::vector<Permutation>& generators() const { return generators_; }

private:
    using Labels = std::array<std::uint8_t, kMaxOrder>;

    void visit(Cells c, int depth)
    {
        refine(g_, c);
        if (c.count == n_) {
            leaf(c);
            return;
        }
        int target = 0;
        while (popcount(c.cell[target]) == 1)
            ++target;
        const Mask cell = c.cell[target];
        Mask explored = 0;
        for_each_bit(cell, [&](int w) {
            if (explored && equivalent_to_explored(w, explored, depth))
                return;
            explored |= bit(w);
            Cells child;
            for (int i = 0; i < target; ++i)
                child.cell[child.count++] = c.cell[i];
            child.cell[child.count++] = bit(w);
            child.cell[child.count++] = cell & ~bit(w);
            for (int i = target + 1; i < c.count; ++i)
                child.cell[child.count++] = c.cell[i];
            fixed_[depth] = w;
            visit(child, depth + 1);
        });
    }

    bool equivalent_to_explored(int w, Mask explored, int depth)
    {
        UnionFind uf(n_);
        bool any = false;
        for (const Permutation& gen : generators_) {
            bool fixes_prefix = true;
            for (int i = 0; i < depth && fixes_prefix; ++i)
                fixes_prefix = gen[fixed_[i]] == fixed_[i];
            if (!fixes_prefix)
                continue;
            any = true;
            for (int v = 0; v < n_; ++v)
                uf.unite(v, gen[v]);
        }
        if (!any)
            return false;
        int root = uf.find(w);
        bool hit = false;
        for_each_bit(explored, [&](int x) { hit = hit || uf.find(x) == root; });
        return hit;
    }

    std::array<std::uint64_t, 2> leaf_bits(const Labels& lab) const
    {
        std::array<std::uint64_t, 2> out{};
        int t = 0;
        for (int j = 1; j < n_; ++j) {
            const Mask row = g_.row(lab[j]);
            for (int i = 0; i < j; ++i, ++t)
                if ((row >> lab[i]) & 1U)
                    out[t >> 6] |= std::uint64_t{1} << (63 - (t & 63));
        }
        return out;
    }

    void record_automorphism(const Labels& from, const Labels& to)
    {
        Permutation gen{};
        for (int p = 0; p < kMaxOrder; ++p)
            gen[p] = static_cast<std::uint8_t>(p);
        bool identity = true;
        for (int p = 0; p < n_; ++p) {
            gen[from[p]] = to[p];
            identity = identity && from[p] == to[p];
        }
        if (!identity)
            generators_.push_back(gen);
    }

    void leaf(const Cells& c)
    {
        Labels lab{};
        for (int p = 0; p < n_; ++p)
            lab[p] = static_cast<std::uint8_t>(lowest(c.cell[p]));
        const auto bits = leaf_bits(lab);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_lab_ = best_lab_ = lab;
            first_bits_ = best_bits_ = bits;
            return;
        }
        if (bits == first_bits_) {
            record_automorphism(first_lab_, lab);
            return;
        }
        if (bits == best_bits_) {
            record_automorphism(best_lab_, lab);
            return;
        }
        if (bits < best_bits_) {
            best_bits_ = bits;
            best_lab_ = lab;
        }
    }

    const SmallGraph& g_;
    const int n_;
    bool have_leaf_ = false;
    Labels first_lab_{}, best_lab_{};
    std::array<std::uint64_t, 2> first_bits_{}, best_bits_{};
    std::array<int, kMaxOrder> fixed_{};
    std::vector<Permutation> generators_;
};

} // namespace detail

struct CanonResult {
    CanonicalForm form;
    /// Generators of the full automorphism group.
    std::vector<Permutation> generators;
};

inline CanonResult canonical_search(const SmallGraph& g)
{
    detail::CanonSearch search(g);
    search.run();
    return {search.form(), search.generators()};
}

inline CanonicalForm canonical_form(const SmallGraph& g) { return canonical_search(g).form; }

inline CanonKey canonical_key(const SmallGraph& g) { return canonical_form(g).key; }

/// The canonically relabeled graph, the representative used in all outputs.
inline SmallGraph canonical_graph(const SmallGraph& g) { return apply_permutation(g, canonical_form(g).perm); }

inline bool are_isomorphic(const SmallGraph& g, const SmallGraph& h)
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    if (degree_sequence(g) != degree_sequence(h))
        return false;
    return canonical_key(g) == canonical_key(h);
}

/// Permutation certifying g ≅ h (perm[g vertex] = h vertex), if one exists.
inline std::optional<Permutation> isomorphism(const SmallGraph& g, const SmallGraph& h)
{
    if (g.order() != h.order() || g.size() != h.size())
        return std::nullopt;
    const CanonicalForm fg = canonical_form(g);
    const CanonicalForm fh = canonical_form(h);
    if (fg.key != fh.key)
        return std::nullopt;
    Permutation inv_h{};
    for (int v = 0; v < h.order(); ++v)
        inv_h[fh.perm[v]] = static_cast<std::uint8_t>(v);
    Permutation out{};
    for (int p = 0; p < kMaxOrder; ++p)
        out[p] = static_cast<std::uint8_t>(p);
    for (int v = 0; v < g.order(); ++v)
        out[v] = inv_h[fg.perm[v]];
    return out;
}

// ---------------------------------------------------------------------------
// Orbits

enum class ElementKind { vertex, edge, non_edge };

inline std::string to_string(ElementKind k)
{
    switch (k) {
    case ElementKind::vertex: return "vertex";
    case ElementKind::edge: return "edge";
    case ElementKind::non_edge: return "non_edge";
    }
    return "?";
}

struct OrbitPartition {
    ElementKind kind = ElementKind::vertex;
    /// Filled for vertex orbits; classes ordered by smallest member.
    std::vector<std::vector<int>> vertex_classes;
    /// Filled for edge and non-edge orbits; classes ordered by smallest member.
    std::vector<std::vector<Edge>> pair_classes;

    std::size_t size() const
    {
        return kind == ElementKind::vertex ? vertex_classes.size() : pair_classes.size();
    }
};

inline std::vector<std::vector<int>> vertex_orbits(int n, const std::vector<Permutation>& generators)
{
    detail::UnionFind uf(n);
    for (const Permutation& gen : generators)
        for (int v = 0; v < n; ++v)
            uf.unite(v, gen[v]);
    std::vector<std::vector<int>> classes;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[slot[r]].push_back(v);
    }
    return classes;
}

/// Orbits of the given pairs (all edges or all non-edges of a graph) under the group.
inline std::vector<std::vector<Edge>> pair_orbits(int n, const std::vector<Edge>& pairs,
                                                  const std::vector<Permutation>& generators)
{
    std::vector<int> index(static_cast<std::size_t>(n * n), -1);
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
        index[pairs[i].u * n + pairs[i].v] = i;
    detail::UnionFind uf(static_cast<int>(pairs.size()));
    for (const Permutation& gen : generators)
        for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
            Edge img(gen[pairs[i].u], gen[pairs[i].v]);
            uf.unite(i, index[img.u * n + img.v]);
        }
    std::vector<std::vector<Edge>> classes;
    std::vector<int> slot(pairs.size(), -1);
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
        int r = uf.find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[slot[r]].push_back(pairs[i]);
    }
    return classes;
}

inline std::vector<Permutation> automorphism_generators(const SmallGraph& g)
{
    return canonical_search(g).generators;
}

inline OrbitPartition orbits(const SmallGraph& g, ElementKind kind)
{
    const auto gens = automorphism_generators(g);
    OrbitPartition out;
    out.kind = kind;
    switch (kind) {
    case ElementKind::vertex: out.vertex_classes = vertex_orbits(g.order(), gens); break;
    case ElementKind::edge: out.pair_classes = pair_orbits(g.order(), g.edges(), gens); break;
    case ElementKind::non_edge: out.pair_classes = pair_orbits(g.order(), g.non_edges(), gens); break;
    }
    return out;
}

} // namespace mmik
