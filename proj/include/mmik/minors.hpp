#pragma once

// Subgraph and minor containment with checkable witnesses.
//
// Minor search grows one connected branch set per pattern vertex, in an order
// where each pattern vertex has as many already-placed neighbors as possible.
// Host edges that cannot serve as the single realizer of a pattern edge are
// "wasted"; a model exists only if waste ≤ ‖host‖ − ‖pattern‖, which prunes
// hard when the two sizes are close.

#include "mmik/graph.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace mmik {

struct SubgraphWitness {
    /// injection[pattern vertex] = host vertex
    std::vector<int> injection;
};

struct MinorWitness {
    /// branch_sets[pattern vertex] = host vertex set
    std::vector<Mask> branch_sets;
};

inline bool verify_witness(const SmallGraph& host, const SmallGraph& pattern, const SubgraphWitness& w)
{
    if (static_cast<int>(w.injection.size()) != pattern.order())
        return false;
    Mask image = 0;
    for (int x : w.injection) {
        if (x < 0 || x >= host.order() || (image & bit(x)))
            return false;
        image |= bit(x);
    }
    for (const Edge& e : pattern.edges())
        if (!host.has_edge(w.injection[e.u], w.injection[e.v]))
            return false;
    return true;
}

inline bool induces_connected(const SmallGraph& g, Mask set)
{
    if (set == 0)
        return false;
    Mask reached = bit(lowest(set));
    Mask frontier = reached;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.row(v) & set; });
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == set;
}

inline Mask neighborhood(const SmallGraph& g, Mask set)
{
    Mask out = 0;
    for_each_bit(set, [&](int v) { out |= g.row(v); });
    return out & ~set;
}

inline bool sets_adjacent(const SmallGraph& g, Mask a, Mask b) { return (neighborhood(g, a) & b) != 0; }

inline bool verify_witness(const SmallGraph& host, const SmallGraph& pattern, const MinorWitness& w)
{
    if (static_cast<int>(w.branch_sets.size()) != pattern.order())
        return false;
    Mask used = 0;
    for (Mask s : w.branch_sets) {
        if (s == 0 || (s & ~host.vertices()) || (s & used))
            return false;
        if (!induces_connected(host, s))
            return false;
        used |= s;
    }
    for (const Edge& e : pattern.edges())
        if (!sets_adjacent(host, w.branch_sets[e.u], w.branch_sets[e.v]))
            return false;
    return true;
}

inline MinorWitness to_minor_witness(const SubgraphWitness& w)
{
    MinorWitness out;
    for (int x : w.injection)
        out.branch_sets.push_back(bit(x));
    return out;
}

namespace detail {

/// Pattern vertices ordered so each has many already-placed neighbors.
inline std::vector<int> connectivity_order(const SmallGraph& pattern)
{
    std::vector<int> order;
    Mask placed = 0;
    const int p = pattern.order();
    for (int step = 0; step < p; ++step) {
        int best = -1;
        std::pair<int, int> best_key{-1, -1};
        for (int v = 0; v < p; ++v) {
            if (placed & bit(v))
                continue;
            std::pair<int, int> key{popcount(pattern.row(v) & placed), pattern.degree(v)};
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        order.push_back(best);
        placed |= bit(best);
    }
    return order;
}

class SubgraphSearch {
public:
    SubgraphSearch(const SmallGraph& host, const SmallGraph& pattern)
        : host_(host), pattern_(pattern), order_(connectivity_order(pattern)),
          image_(static_cast<std::size_t>(pattern.order()), -1)
    {
    }

    std::optional<SubgraphWitness> run()
    {
        if (pattern_.order() > host_.order() || pattern_.size() > host_.size())
            return std::nullopt;
        if (!search(0, 0))
            return std::nullopt;
        return SubgraphWitness{image_};
    }

private:
    bool search(int idx, Mask used)
    {
        if (idx == pattern_.order())
            return true;
        const int i = order_[idx];
        Mask cand = host_.vertices() & ~used;
        for (int k = 0; k < idx; ++k) {
            int j = order_[k];
            if (pattern_.has_edge(i, j))
                cand &= host_.row(image_[j]);
        }
        const int need = pattern_.degree(i);
        while (cand) {
            int x = lowest(cand);
            cand &= cand - 1;
            if (host_.degree(x) < need)
                continue;
            image_[i] = x;
            if (search(idx + 1, used | bit(x)))
                return true;
        }
        image_[i] = -1;
        return false;
    }

    const SmallGraph& host_;
    const SmallGraph& pattern_;
    std::vector<int> order_;
    std::vector<int> image_;
};

class MinorSearch {
public:
    MinorSearch(const SmallGraph& host, const SmallGraph& pattern)
        : host_(host), pattern_(pattern), order_(connectivity_order(pattern)),
          budget_(host.size() - pattern.size())
    {
    }

    std::optional<MinorWitness> run()
    {
        if (pattern_.order() > host_.order() || budget_ < 0)
            return std::nullopt;
        if (!search(0, 0, 0, 0))
            return std::nullopt;
        MinorWitness w;
        w.branch_sets.assign(branch_.begin(), branch_.begin() + pattern_.order());
        return w;
    }

private:
    // Connected subsets of `allowed` with at most `cap` vertices, each once.
    void connected_subsets(Mask allowed, int cap, std::vector<Mask>& out) const
    {
        for_each_bit(allowed, [&](int root) {
            Mask above = allowed & ~low_bits(root + 1);
            extend(bit(root), host_.row(root) & above, above, cap, out);
        });
    }

    void extend(Mask set, Mask ext, Mask above, int cap, std::vector<Mask>& out) const
    {
        out.push_back(set);
        if (popcount(set) == cap)
            return;
        const Mask closed = set | neighborhood(host_, set);
        while (ext) {
            int w = lowest(ext);
            ext &= ext - 1;
            Mask fresh = host_.row(w) & above & ~closed;
            extend(set | bit(w), ext | fresh, above, cap, out);
        }
    }

    int edges_within(Mask s) const
    {
        int twice = 0;
        for_each_bit(s, [&](int v) { twice += popcount(host_.row(v) & s); });
        return twice / 2;
    }

    int edges_between(Mask a, Mask b) const
    {
        int c = 0;
        for_each_bit(a, [&](int v) { c += popcount(host_.row(v) & b); });
        return c;
    }

    bool search(int idx, Mask used, Mask placed, int waste)
    {
        const int p = pattern_.order();
        if (idx == p)
            return true;
        const int i = order_[idx];
        const Mask free = host_.vertices() & ~used;
        const int cap = popcount(free) - (p - idx - 1);
        if (cap < 1)
            return false;
        const Mask placed_nbrs = pattern_.row(i) & placed;
        const int open_nbrs = popcount(pattern_.row(i) & ~placed);

        std::vector<Mask> candidates;
        connected_subsets(free, cap, candidates);
        std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
            int pa = popcount(a), pb = popcount(b);
            return pa != pb ? pa < pb : a < b;
        });

        for (Mask s : candidates) {
            const Mask ns = neighborhood(host_, s);
            bool touches_all = true;
            for_each_bit(placed_nbrs, [&](int j) { touches_all = touches_all && (ns & branch_[j]); });
            if (!touches_all)
                continue;
            const Mask remaining = free & ~s;
            if (popcount(ns & remaining) < open_nbrs)
                continue;
            int added = edges_within(s);
            for_each_bit(placed, [&](int j) {
                added += edges_between(s, branch_[j]) - (pattern_.has_edge(i, j) ? 1 : 0);
            });
            if (waste + added > budget_)
                continue;
            const Mask now_placed = placed | bit(i);
            bool feasible = true;
            for_each_bit(placed, [&](int j) {
                if (!feasible)
                    return;
                int open = popcount(pattern_.row(j) & ~now_placed);
                if (open > 0 && popcount(neighborhood(host_, branch_[j]) & remaining) < open)
                    feasible = false;
            });
            if (!feasible)
                continue;
            branch_[i] = s;
            if (search(idx + 1, used | s, now_placed, waste + added))
                return true;
        }
        branch_[i] = 0;
        return false;
    }

    const SmallGraph& host_;
    const SmallGraph& pattern_;
    std::vector<int> order_;
    int budget_;
    std::array<Mask, kMaxOrder> branch_{};
};

} // namespace detail

inline std::optional<SubgraphWitness> has_subgraph(const SmallGraph& host, const SmallGraph& pattern)
{
    return detail::SubgraphSearch(host, pattern).run();
}

inline std::optional<MinorWitness> has_minor(const SmallGraph& host, const SmallGraph& pattern)
{
    if (pattern.order() == host.order()) {
        if (auto sub = has_subgraph(host, pattern))
            return to_minor_witness(*sub);
        return std::nullopt;
    }
    return detail::MinorSearch(host, pattern).run();
}

/// A minor of `host` isomorphic to `pattern` is proper unless it uses every
/// vertex and every edge, which forces pattern ≅ host.
inline bool is_proper_minor(const SmallGraph& host, const SmallGraph& pattern)
{
    return pattern.order() < host.order() || pattern.size() < host.size();
}

} // namespace mmik
