#pragma once

// Isomorph-free generation of simple graphs by canonical edge augmentation.
//
// A child G+e is kept only when e lies in the automorphism orbit of the
// child's canonical last edge, and each parent extends by one representative
// per orbit of its non-edges. Every isomorphism class is produced exactly
// once. Slices denser than half of C(n,2) are generated on the complement.

#include "mmik/canon.hpp"
#include "mmik/graph.hpp"
#include "mmik/parallel.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmik {

inline constexpr int kMaxEnumerationOrder = 12;

struct EnumSpec {
    int order = 0;
    int min_size = 0;
    int max_size = 0;
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::optional<bool> connected;
    std::function<bool(const SmallGraph&)> predicate;

    static EnumSpec slice(int order, int size)
    {
        EnumSpec s;
        s.order = order;
        s.min_size = s.max_size = size;
        return s;
    }

    static EnumSpec slice(int order, int min_size, int max_size)
    {
        EnumSpec s;
        s.order = order;
        s.min_size = min_size;
        s.max_size = max_size;
        return s;
    }

    EnumSpec& with_connected(bool c = true) { connected = c; return *this; }
    EnumSpec& with_min_degree(int d) { min_degree = d; return *this; }
    EnumSpec& with_max_degree(int d) { max_degree = d; return *this; }
    EnumSpec& where(std::function<bool(const SmallGraph&)> p) { predicate = std::move(p); return *this; }

    void validate() const
    {
        if (order < 0 || order > kMaxEnumerationOrder)
            throw std::invalid_argument("enumeration order " + std::to_string(order) + " outside 0.." +
                                        std::to_string(kMaxEnumerationOrder));
        const int total = order * (order - 1) / 2;
        if (min_size < 0 || max_size > total || min_size > max_size)
            throw std::invalid_argument("size range " + std::to_string(min_size) + ".." + std::to_string(max_size) +
                                        " outside 0.." + std::to_string(total));
    }

    bool accepts(const SmallGraph& g) const
    {
        if (g.order() != order)
            return false;
        const int m = g.size();
        if (m < min_size || m > max_size)
            return false;
        if (min_degree && mmik::min_degree(g) < *min_degree)
            return false;
        if (max_degree && mmik::max_degree(g) > *max_degree)
            return false;
        if (connected && mmik::is_connected(g) != *connected)
            return false;
        if (predicate && !predicate(g))
            return false;
        return true;
    }
};

namespace detail {

struct AugmentNode {
    SmallGraph graph;
    std::vector<Permutation> generators;
};

// Isomorphism-invariant preference among edges; the last edge maximizes it.
inline int edge_invariant(const SmallGraph& g, int u, int v)
{
    int a = g.degree(u);
    int b = g.degree(v);
    return std::min(a, b) * 32 + std::max(a, b);
}

inline bool same_edge_orbit(Edge a, Edge b, const std::vector<Permutation>& gens)
{
    if (a == b)
        return true;
    std::vector<Edge> orbit{a};
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const Permutation& gen : gens) {
            Edge img(gen[orbit[i].u], gen[orbit[i].v]);
            if (img == b)
                return true;
            if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                orbit.push_back(img);
        }
    return false;
}

class Augmenter {
public:
    Augmenter(int max_size, int max_degree) : max_size_(max_size), max_degree_(max_degree) {}

    /// Accepted children of a node, each with its automorphism generators and canonical form.
    template <typename Visit>
    void children(const AugmentNode& node, Visit&& visit) const
    {
        const SmallGraph& g = node.graph;
        if (g.size() >= max_size_)
            return;
        const auto classes = pair_orbits(g.order(), g.non_edges(), node.generators);
        for (const auto& cls : classes) {
            const Edge e = cls.front();
            if (g.degree(e.u) + 1 > max_degree_ || g.degree(e.v) + 1 > max_degree_)
                continue;
            SmallGraph child = g;
            child.add_edge(e.u, e.v);
            const int inv = edge_invariant(child, e.u, e.v);
            bool dominated = false;
            for (int u = 0; u < child.order() && !dominated; ++u)
                for_each_bit(child.row(u) & ~low_bits(u + 1),
                             [&](int v) { dominated = dominated || edge_invariant(child, u, v) > inv; });
            if (dominated)
                continue;
            CanonResult canon = canonical_search(child);
            const Edge last = canonical_last_edge(child, canon.form, inv);
            if (!same_edge_orbit(e, last, canon.generators))
                continue;
            visit(AugmentNode{std::move(child), std::move(canon.generators)}, canon.form);
        }
    }

private:
    static Edge canonical_last_edge(const SmallGraph& g, const CanonicalForm& form, int inv)
    {
        Edge best;
        std::pair<int, int> best_pos{-1, -1};
        for (const Edge& e : g.edges()) {
            if (edge_invariant(g, e.u, e.v) != inv)
                continue;
            int a = form.perm[e.u];
            int b = form.perm[e.v];
            std::pair<int, int> pos{std::max(a, b), std::min(a, b)};
            if (pos > best_pos) {
                best_pos = pos;
                best = e;
            }
        }
        return best;
    }

    int max_size_;
    int max_degree_;
};

struct Generated {
    CanonKey key;
    SmallGraph graph;
};

/// All graphs of order n with size in [lo, hi] and max degree ≤ max_degree,
/// one canonical representative per class, sorted by canonical key.
inline std::vector<Generated> generate_range(int n, int lo, int hi, int max_deg, int jobs)
{
    std::vector<Generated> out;
    if (lo > hi)
        return out;
    const Augmenter aug(hi, max_deg);

    auto emit = [&](std::vector<Generated>& sink, const AugmentNode& node, const CanonicalForm& form) {
        const int m = node.graph.size();
        if (m >= lo && m <= hi)
            sink.push_back({form.key, apply_permutation(node.graph, form.perm)});
    };

    std::function<void(const AugmentNode&, std::vector<Generated>&)> dfs =
        [&](const AugmentNode& node, std::vector<Generated>& sink) {
            aug.children(node, [&](AugmentNode&& child, const CanonicalForm& form) {
                emit(sink, child, form);
                dfs(child, sink);
            });
        };

    AugmentNode root{SmallGraph(n), automorphism_generators(SmallGraph(n))};
    emit(out, root, canonical_form(root.graph));

    // Breadth-first to a shallow frontier, then independent subtrees per worker.
    const int split = std::min(hi, 4);
    std::vector<AugmentNode> frontier{root};
    for (int level = 0; level < split; ++level) {
        std::vector<AugmentNode> next;
        for (const AugmentNode& node : frontier)
            aug.children(node, [&](AugmentNode&& child, const CanonicalForm& form) {
                emit(out, child, form);
                next.push_back(std::move(child));
            });
        frontier = std::move(next);
    }
    auto parts = parallel_map(
        frontier,
        [&](const AugmentNode& node) {
            std::vector<Generated> sink;
            dfs(node, sink);
            return sink;
        },
        jobs);
    for (auto& part : parts)
        std::move(part.begin(), part.end(), std::back_inserter(out));
    std::sort(out.begin(), out.end(), [](const Generated& a, const Generated& b) { return a.key < b.key; });
    return out;
}

} // namespace detail

/// One canonical representative per isomorphism class meeting the spec,
/// sorted by canonical key.
inline std::vector<SmallGraph> enumerate_graphs(const EnumSpec& spec, int jobs = default_jobs())
{
    spec.validate();
    const int n = spec.order;
    const int total = n * (n - 1) / 2;
    const int half = total / 2;
    const int max_deg = spec.max_degree.value_or(n > 0 ? n - 1 : 0);
    const int min_deg = spec.min_degree.value_or(0);

    std::vector<detail::Generated> found;
    // Sparse part directly.
    {
        auto part = detail::generate_range(n, spec.min_size, std::min(spec.max_size, half), max_deg, jobs);
        std::move(part.begin(), part.end(), std::back_inserter(found));
    }
    // Dense part on the complement; the min-degree bound becomes a max-degree bound there.
    {
        const int lo = std::max(spec.min_size, half + 1);
        if (lo <= spec.max_size) {
            const int comp_max_deg = n > 0 ? n - 1 - std::max(0, min_deg) : 0;
            auto part = detail::generate_range(n, total - spec.max_size, total - lo, comp_max_deg, jobs);
            for (auto& item : part) {
                SmallGraph g = complement(item.graph);
                CanonicalForm form = canonical_form(g);
                found.push_back({form.key, apply_permutation(g, form.perm)});
            }
        }
    }

    std::vector<char> keep(found.size(), 0);
    parallel_for(found.size(), [&](std::size_t i) { keep[i] = spec.accepts(found[i].graph) ? 1 : 0; }, jobs);
    std::vector<detail::Generated> kept;
    for (std::size_t i = 0; i < found.size(); ++i)
        if (keep[i])
            kept.push_back(std::move(found[i]));
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.key < b.key; });

    std::vector<SmallGraph> out;
    out.reserve(kept.size());
    for (auto& item : kept)
        out.push_back(std::move(item.graph));
    return out;
}

inline std::size_t count_graphs(const EnumSpec& spec, int jobs = default_jobs())
{
    return enumerate_graphs(spec, jobs).size();
}

} // namespace mmik
