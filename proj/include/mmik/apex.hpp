#pragma once

// n-apex decisions, P+K2 recognition and minor-minimal-not-k-apex search.

#include "mmik/enumerate.hpp"
#include "mmik/graph.hpp"
#include "mmik/parallel.hpp"
#include "mmik/planar.hpp"

#include <optional>
#include <vector>

namespace mmik {

struct ApexWitness {
    Mask removed = 0;
    bool certified_planar = false;

    std::vector<int> vertices() const
    {
        std::vector<int> out;
        for_each_bit(removed, [&](int v) { out.push_back(v); });
        return out;
    }
};

namespace detail {

// Subsets of {0..n-1} with exactly r elements, in lexicographic order.
template <typename Fn>
bool for_each_subset(int n, int r, Mask chosen, int start, Fn&& fn)
{
    if (r == 0)
        return fn(chosen);
    for (int v = start; v <= n - r; ++v)
        if (for_each_subset(n, r - 1, chosen | bit(v), v + 1, fn))
            return true;
    return false;
}

} // namespace detail

/// Lexicographically least deletion set of size ≤ k leaving a planar graph.
/// Smaller sets are tried before larger ones.
inline std::optional<ApexWitness> apex_witness(const SmallGraph& g, int k)
{
    for (int r = 0; r <= std::min(k, g.order()); ++r) {
        std::optional<ApexWitness> found;
        detail::for_each_subset(g.order(), r, 0, 0, [&](Mask removed) {
            if (planar_test(delete_vertices(g, removed))) {
                found = ApexWitness{removed, true};
                return true;
            }
            return false;
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

inline bool is_k_apex(const SmallGraph& g, int k) { return apex_witness(g, k).has_value(); }

inline bool verify_apex_witness(const SmallGraph& g, int k, const ApexWitness& w)
{
    return popcount(w.removed) <= k && (w.removed & ~g.vertices()) == 0 && planar_test(delete_vertices(g, w.removed));
}

/// True iff G = P + K2 with P a planar triangulation on |G| − 2 vertices.
inline bool recognize_p_plus_k2(const SmallGraph& g)
{
    const int n = g.order();
    if (n < 5)
        return false;
    const Mask all = g.vertices();
    for (int u = 0; u < n; ++u) {
        if ((g.row(u) | bit(u)) != all)
            continue;
        for (int v = u + 1; v < n; ++v) {
            if ((g.row(v) | bit(v)) != all)
                continue;
            SmallGraph rest = delete_vertices(g, bit(u) | bit(v));
            if (rest.size() == 3 * (n - 2) - 6 && planar_test(rest))
                return true;
        }
    }
    return false;
}

inline SmallGraph drop_isolated(const SmallGraph& g)
{
    Mask isolated = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.row(v) == 0)
            isolated |= bit(v);
    return isolated ? delete_vertices(g, isolated) : g;
}

/// Calls fn(minor) for every single edge deletion, edge contraction and
/// vertex deletion; stops early when fn returns false.
template <typename Fn>
bool for_each_one_step_minor(const SmallGraph& g, Fn&& fn)
{
    for (const Edge& e : g.edges())
        if (!fn(delete_edge(g, e.u, e.v)))
            return false;
    for (const Edge& e : g.edges())
        if (!fn(contract_edge(g, e.u, e.v)))
            return false;
    for (int v = 0; v < g.order(); ++v)
        if (!fn(delete_vertex(g, v)))
            return false;
    return true;
}

inline bool is_mm_not_k_apex(const SmallGraph& g, int k)
{
    if (is_k_apex(g, k))
        return false;
    return for_each_one_step_minor(g, [&](const SmallGraph& minor) { return is_k_apex(drop_isolated(minor), k); });
}

struct MmnaSearchOptions {
    int max_order = 9;
    int k = 2;
    int min_order = 5;
    /// Optional size window; by default every size is scanned except where a
    /// published lower bound applies (k = 1: at least 15 edges).
    std::optional<int> min_size;
    std::optional<int> max_size;
    int jobs = default_jobs();
};

/// All minor-minimal-not-k-apex graphs in the window, canonical and sorted by
/// (order, canonical key).
inline std::vector<SmallGraph> find_mm_not_k_apex(const MmnaSearchOptions& opt)
{
    if (opt.k < 1 || opt.k > 2)
        throw std::invalid_argument("k must be 1 or 2");
    if (opt.max_order > 9)
        throw std::invalid_argument("max_order must be at most 9");
    std::vector<SmallGraph> out;
    for (int n = std::max(1, opt.min_order); n <= opt.max_order; ++n) {
        const int total = n * (n - 1) / 2;
        int lo = opt.min_size.value_or(opt.k == 1 ? 15 : 0);
        int hi = std::min(total, opt.max_size.value_or(total));
        if (lo > hi)
            continue;
        // Every vertex of a minimal graph has degree ≥ 1 (else deleting it keeps the property).
        EnumSpec spec = EnumSpec::slice(n, lo, hi).with_min_degree(1);
        auto graphs = enumerate_graphs(spec, opt.jobs);
        std::vector<char> hit(graphs.size(), 0);
        parallel_for(graphs.size(), [&](std::size_t i) { hit[i] = is_mm_not_k_apex(graphs[i], opt.k) ? 1 : 0; },
                     opt.jobs);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (hit[i])
                out.push_back(graphs[i]);
    }
    return out;
}

inline std::vector<SmallGraph> find_mm_not_k_apex(int max_order, int k)
{
    MmnaSearchOptions opt;
    opt.max_order = max_order;
    opt.k = k;
    return find_mm_not_k_apex(opt);
}

} // namespace mmik
