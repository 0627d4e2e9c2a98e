#pragma once

// Brute-force reference implementations for the property tests. Nothing here
// calls into the library's search code; only SmallGraph and its edits.

#include "mmik/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

namespace oracle {

using mmik::SmallGraph;

// Upper-triangle bits in column order under a relabeling perm[old] = new.
inline std::uint64_t packed(const SmallGraph& g, const std::vector<int>& perm)
{
    const int n = g.order();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v)
        inv[perm[v]] = v;
    std::uint64_t bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits = (bits << 1) | (g.has_edge(inv[i], inv[j]) ? 1u : 0u);
    return bits;
}

/// Largest packed bit string over all n! labelings; a complete invariant.
inline std::uint64_t brute_key(const SmallGraph& g)
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = 0;
    do
        best = std::max(best, packed(g, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool brute_isomorphic(const SmallGraph& g, const SmallGraph& h)
{
    return g.order() == h.order() && g.size() == h.size() && brute_key(g) == brute_key(h);
}

/// All automorphisms as perm[v] = image.
inline std::vector<std::vector<int>> brute_automorphisms(const SmallGraph& g)
{
    std::vector<std::vector<int>> out;
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : g.edges())
            if (!g.has_edge(p[e.u], p[e.v])) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Orbit label of every vertex: the smallest vertex it can be mapped to.
inline std::vector<int> brute_vertex_orbits(const SmallGraph& g)
{
    std::vector<int> label(g.order());
    std::iota(label.begin(), label.end(), 0);
    for (const auto& a : brute_automorphisms(g))
        for (int v = 0; v < g.order(); ++v)
            label[v] = std::min(label[v], a[v]);
    return label;
}

/// Injective edge-preserving map from pattern into host, by exhaustive search.
inline bool brute_subgraph(const SmallGraph& host, const SmallGraph& pattern)
{
    const int n = host.order(), k = pattern.order();
    if (k > n || pattern.size() > host.size())
        return false;
    std::vector<int> map(k, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k)
            return true;
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pattern.has_edge(i, j) && !host.has_edge(v, map[j]))
                    ok = false;
            if (!ok)
                continue;
            used[v] = true;
            map[i] = v;
            if (self(self, i + 1))
                return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Minor test by deletion/contraction: shrink the host one vertex at a time
/// (delete a vertex or contract an edge) down to the pattern's order, then
/// look for the pattern as a subgraph. Visited graphs are memoized by brute key.
inline bool brute_minor(const SmallGraph& host, const SmallGraph& pattern)
{
    if (pattern.order() > host.order() || pattern.size() > host.size())
        return false;
    std::set<std::pair<int, std::uint64_t>> seen;
    auto rec = [&](auto&& self, const SmallGraph& g) -> bool {
        if (g.size() < pattern.size())
            return false;
        if (!seen.insert({g.order(), brute_key(g)}).second)
            return false;
        if (g.order() == pattern.order())
            return brute_subgraph(g, pattern);
        for (int v = 0; v < g.order(); ++v)
            if (self(self, mmik::delete_vertex(g, v)))
                return true;
        for (const auto& e : g.edges())
            if (self(self, mmik::contract_edge(g, e.u, e.v)))
                return true;
        return false;
    };
    return rec(rec, host);
}

/// Every labeled graph on n vertices (n ≤ 7).
template <typename Fn>
void for_each_labeled(int n, Fn&& fn)
{
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        SmallGraph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1)
                g.add_edge(pairs[b].first, pairs[b].second);
        fn(g);
    }
}

inline SmallGraph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    SmallGraph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline SmallGraph permuted(const SmallGraph& g, const std::vector<int>& perm)
{
    SmallGraph h(g.order());
    for (const auto& e : g.edges())
        h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

/// Wagner's criterion: no K5 and no K3,3 minor.
inline bool brute_planar(const SmallGraph& g)
{
    static const SmallGraph k5 = mmik::complete(5);
    static const SmallGraph k33 = mmik::complete_multipartite({3, 3});
    return !brute_minor(g, k5) && !brute_minor(g, k33);
}

} // namespace oracle
