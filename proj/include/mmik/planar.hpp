#pragma once

// Planarity for graphs of order at most 16.
//
// The fast path strips vertices of degree ≤ 1, smooths degree-2 vertices,
// applies the Euler bound, splits into blocks and runs the
// Demoucron–Malgrange–Pertuiset path-embedding algorithm on each block.
// Nonplanarity witnesses come from the minors module (K5 first, then K3,3).

#include "mmik/graph.hpp"
#include "mmik/minors.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mmik {

namespace detail {

using Rows = std::array<Mask, kMaxOrder>;

// Tarjan block decomposition over the live vertices; returns vertex masks of
// blocks with at least three vertices.
class Blocks {
public:
    Blocks(const Rows& adj, Mask alive) : adj_(adj), alive_(alive) {}

    std::vector<Mask> run()
    {
        for_each_bit(alive_, [&](int v) {
            if (disc_[v] == 0)
                dfs(v, -1);
        });
        return out_;
    }

private:
    void dfs(int v, int parent)
    {
        disc_[v] = low_[v] = ++time_;
        for_each_bit(adj_[v] & alive_, [&](int w) {
            if (disc_[w] == 0) {
                stack_[top_++] = {v, w};
                dfs(w, v);
                low_[v] = std::min(low_[v], low_[w]);
                if (low_[w] >= disc_[v]) {
                    Mask block = 0;
                    for (;;) {
                        auto [a, b] = stack_[--top_];
                        block |= bit(a) | bit(b);
                        if (a == v && b == w)
                            break;
                    }
                    if (popcount(block) >= 3)
                        out_.push_back(block);
                }
            } else if (w != parent && disc_[w] < disc_[v]) {
                stack_[top_++] = {v, w};
                low_[v] = std::min(low_[v], disc_[w]);
            }
        });
    }

    const Rows& adj_;
    Mask alive_;
    std::array<int, kMaxOrder> disc_{};
    std::array<int, kMaxOrder> low_{};
    int time_ = 0;
    std::array<std::pair<int, int>, kMaxOrder * kMaxOrder> stack_{};
    int top_ = 0;
    std::vector<Mask> out_;
};

inline bool bfs_path(const Rows& adj, Mask allowed, int from, Mask targets, std::vector<int>& path)
{
    std::array<int, kMaxOrder> prev{};
    prev.fill(-1);
    Mask seen = bit(from);
    std::array<int, kMaxOrder> queue{};
    int head = 0, tail = 0;
    queue[tail++] = from;
    while (head < tail) {
        int v = queue[head++];
        if ((targets & bit(v)) && v != from) {
            path.clear();
            for (int x = v; x != -1; x = prev[x])
                path.push_back(x);
            std::reverse(path.begin(), path.end());
            return true;
        }
        for_each_bit(adj[v] & allowed & ~seen, [&](int w) {
            seen |= bit(w);
            prev[w] = v;
            queue[tail++] = w;
        });
    }
    return false;
}

// Demoucron–Malgrange–Pertuiset on a 2-connected block.
inline bool block_is_planar(const Rows& adj, Mask verts)
{
    Rows a{};
    int edges = 0;
    for_each_bit(verts, [&](int v) {
        a[v] = adj[v] & verts;
        edges += popcount(a[v]);
    });
    edges /= 2;
    const int n = popcount(verts);
    if (n <= 4)
        return true;
    if (edges > 3 * n - 6)
        return false;

    // Initial cycle: an edge u-w closed by a path avoiding that edge.
    const int u0 = lowest(verts);
    const int w0 = lowest(a[u0]);
    Rows without = a;
    without[u0] &= ~bit(w0);
    without[w0] &= ~bit(u0);
    std::vector<int> cyc;
    if (!bfs_path(without, verts, u0, bit(w0), cyc))
        return true;

    Rows h{};
    Mask hv = 0;
    int h_edges = 0;
    auto embed_edge = [&](int x, int y) {
        h[x] |= bit(y);
        h[y] |= bit(x);
        ++h_edges;
    };
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        hv |= bit(cyc[i]);
        embed_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    std::vector<std::vector<int>> faces{cyc, cyc};
    std::vector<Mask> face_mask{hv, hv};

    struct Fragment {
        Mask attach = 0;
        Mask inner = 0;
        int chord_u = -1, chord_v = -1;
    };
    std::vector<Fragment> frags;
    std::vector<int> path;

    while (h_edges < edges) {
        frags.clear();
        for_each_bit(hv, [&](int x) {
            for_each_bit(a[x] & hv & ~h[x] & ~low_bits(x + 1), [&](int y) {
                frags.push_back({bit(x) | bit(y), 0, x, y});
            });
        });
        Mask outside = verts & ~hv;
        while (outside) {
            Mask comp = bit(lowest(outside));
            Mask frontier = comp;
            while (frontier) {
                Mask next = 0;
                for_each_bit(frontier, [&](int v) { next |= a[v] & verts & ~hv; });
                frontier = next & ~comp;
                comp |= next;
            }
            Mask attach = 0;
            for_each_bit(comp, [&](int v) { attach |= a[v] & hv; });
            frags.push_back({attach, comp, -1, -1});
            outside &= ~comp;
        }

        int chosen = -1, chosen_face = -1;
        for (std::size_t f = 0; f < frags.size(); ++f) {
            int count = 0, first = -1;
            for (std::size_t k = 0; k < faces.size(); ++k)
                if ((frags[f].attach & ~face_mask[k]) == 0) {
                    if (first < 0)
                        first = static_cast<int>(k);
                    ++count;
                }
            if (count == 0)
                return false;
            if (chosen < 0 || count == 1) {
                chosen = static_cast<int>(f);
                chosen_face = first;
                if (count == 1)
                    break;
            }
        }

        const Fragment& fr = frags[chosen];
        if (fr.inner == 0) {
            path = {fr.chord_u, fr.chord_v};
        } else {
            // attachment -> inner vertex ... inner vertex -> different attachment
            const int s = lowest(fr.attach);
            const int x = lowest(a[s] & fr.inner);
            Mask targets = 0;
            for_each_bit(fr.inner, [&](int v) {
                if (a[v] & fr.attach & ~bit(s))
                    targets |= bit(v);
            });
            std::vector<int> inner_path;
            if (targets & bit(x)) {
                inner_path = {x};
            } else {
                Rows restricted{};
                for_each_bit(fr.inner, [&](int v) { restricted[v] = a[v] & fr.inner; });
                bfs_path(restricted, fr.inner, x, targets, inner_path);
            }
            const int y = inner_path.back();
            const int t = lowest(a[y] & fr.attach & ~bit(s));
            path.clear();
            path.push_back(s);
            path.insert(path.end(), inner_path.begin(), inner_path.end());
            path.push_back(t);
        }

        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            embed_edge(path[k], path[k + 1]);
        for (std::size_t k = 1; k + 1 < path.size(); ++k)
            hv |= bit(path[k]);

        const std::vector<int> face = faces[chosen_face];
        const int len = static_cast<int>(face.size());
        const int iu = static_cast<int>(std::find(face.begin(), face.end(), path.front()) - face.begin());
        const int iw = static_cast<int>(std::find(face.begin(), face.end(), path.back()) - face.begin());
        std::vector<int> f1, f2;
        for (int k = iu;; k = (k + 1) % len) {
            f1.push_back(face[k]);
            if (k == iw)
                break;
        }
        for (std::size_t k = path.size() - 2; k >= 1; --k)
            f1.push_back(path[k]);
        for (int k = iw;; k = (k + 1) % len) {
            f2.push_back(face[k]);
            if (k == iu)
                break;
        }
        for (std::size_t k = 1; k + 1 < path.size(); ++k)
            f2.push_back(path[k]);
        auto mask_of = [](const std::vector<int>& f) {
            Mask m = 0;
            for (int v : f)
                m |= bit(v);
            return m;
        };
        faces[chosen_face] = f1;
        face_mask[chosen_face] = mask_of(f1);
        faces.push_back(f2);
        face_mask.push_back(mask_of(f2));
    }
    return true;
}

} // namespace detail

/// Planarity decision without a witness; the hot path for apex searches.
inline bool planar_test(const SmallGraph& g)
{
    detail::Rows a = g.rows();
    Mask alive = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        Mask scan = alive;
        while (scan) {
            int v = lowest(scan);
            scan &= scan - 1;
            int d = popcount(a[v]);
            if (d <= 1) {
                for_each_bit(a[v], [&](int w) { a[w] &= ~bit(v); });
                a[v] = 0;
                alive &= ~bit(v);
                changed = true;
            } else if (d == 2) {
                int x = lowest(a[v]);
                int y = lowest(a[v] & (a[v] - 1));
                a[x] &= ~bit(v);
                a[y] &= ~bit(v);
                a[x] |= bit(y);
                a[y] |= bit(x);
                a[v] = 0;
                alive &= ~bit(v);
                changed = true;
            }
        }
    }
    const int n = popcount(alive);
    if (n <= 4)
        return true;
    int m = 0;
    for_each_bit(alive, [&](int v) { m += popcount(a[v]); });
    m /= 2;
    if (m > 3 * n - 6)
        return false;
    for (Mask block : detail::Blocks(a, alive).run())
        if (!detail::block_is_planar(a, block))
            return false;
    return true;
}

enum class Obstruction { k5, k33 };

inline std::string to_string(Obstruction o) { return o == Obstruction::k5 ? "K5" : "K3,3"; }

struct KuratowskiWitness {
    Obstruction kind;
    MinorWitness model;
};

struct PlanarityResult {
    bool planar = true;
    std::optional<KuratowskiWitness> obstruction;
};

inline const SmallGraph& k5_graph()
{
    static const SmallGraph g = complete(5);
    return g;
}

inline const SmallGraph& k33_graph()
{
    static const SmallGraph g = complete_multipartite({3, 3});
    return g;
}

/// K5 or K3,3 minor model, searched in that order.
inline std::optional<KuratowskiWitness> kuratowski_minor(const SmallGraph& g)
{
    if (auto w = has_minor(g, k5_graph()))
        return KuratowskiWitness{Obstruction::k5, *w};
    if (auto w = has_minor(g, k33_graph()))
        return KuratowskiWitness{Obstruction::k33, *w};
    return std::nullopt;
}

/// Planarity with a verifiable obstruction for nonplanar input.
inline PlanarityResult is_planar(const SmallGraph& g)
{
    PlanarityResult r;
    r.planar = planar_test(g);
    if (!r.planar)
        r.obstruction = kuratowski_minor(g);
    return r;
}

inline bool verify_obstruction(const SmallGraph& g, const KuratowskiWitness& w)
{
    return verify_witness(g, w.kind == Obstruction::k5 ? k5_graph() : k33_graph(), w.model);
}

/// Wagner's characterization evaluated directly by minor search.
inline bool kuratowski_oracle(const SmallGraph& g) { return !kuratowski_minor(g).has_value(); }

} // namespace mmik
