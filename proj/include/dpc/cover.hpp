#pragma once

#include "dpc/errors.hpp"
#include "dpc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dpc {

// Color lists per vertex.  Lists are kept sorted ascending and duplicate-free.
struct ListAssignment {
    std::vector<std::vector<int>> lists;
};

// Cover of a graph: per-vertex color lists plus one (partial) matching per
// edge.  Pairs for edge (u,v) with u < v are stored as (color at u, color at
// v), sorted.  A transversal picks one color per vertex avoiding all pairs.
struct Cover {
    Graph base;
    std::vector<std::vector<int>> lists;
    std::vector<std::vector<std::pair<int, int>>> matchings; // by edge id

    explicit Cover(Graph g)
        : base(std::move(g)), lists(base.n), matchings(base.edge_count())
    {
    }

    int k_max() const
    {
        std::size_t k = 0;
        for (const auto& l : lists)
            k = std::max(k, l.size());
        return static_cast<int>(k);
    }

    bool uniform_k(int& k_out) const
    {
        if (lists.empty()) {
            k_out = 0;
            return true;
        }
        k_out = static_cast<int>(lists[0].size());
        for (const auto& l : lists)
            if (static_cast<int>(l.size()) != k_out)
                return false;
        return true;
    }
};

struct Transversal {
    std::vector<int> colors; // 0 = unassigned
};

namespace detail {
inline void check_lists(const std::vector<std::vector<int>>& lists)
{
    for (std::size_t v = 0; v < lists.size(); ++v) {
        const auto& l = lists[v];
        if (l.empty())
            throw Error(Errc::InvalidArgument,
                        "empty color list at vertex " + std::to_string(v));
        if (l.front() < 1)
            throw Error(Errc::InvalidArgument,
                        "colors must be positive (vertex " + std::to_string(v) + ")");
        for (std::size_t i = 0; i + 1 < l.size(); ++i)
            if (l[i] >= l[i + 1])
                throw Error(Errc::InvalidArgument,
                            "color list at vertex " + std::to_string(v) +
                                " not strictly ascending");
    }
}

inline bool list_has(const std::vector<int>& l, int c)
{
    return std::binary_search(l.begin(), l.end(), c);
}
} // namespace detail

// Straight cover: lists 1..k everywhere, every edge matches equal colors.
// Transversals of this cover are exactly the proper k-colorings.
inline Cover identity_cover(const Graph& g, int k)
{
    if (k < 1)
        throw Error(Errc::InvalidArgument, "k must be >= 1");
    Cover c(g);
    std::vector<int> l(k);
    for (int i = 0; i < k; ++i)
        l[i] = i + 1;
    for (int v = 0; v < g.n; ++v)
        c.lists[v] = l;
    for (int e = 0; e < g.edge_count(); ++e) {
        c.matchings[e].reserve(k);
        for (int i = 1; i <= k; ++i)
            c.matchings[e].emplace_back(i, i);
    }
    return c;
}

// Edge matchings given per edge in caller orientation: ((u,v), pairs) where
// each pair is (color at u, color at v).  Edges not listed get the empty
// matching.
using EdgeMatchingSpec =
    std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<int, int>>>>;

inline Cover build_cover(const Graph& g, std::vector<std::vector<int>> lists,
                         const EdgeMatchingSpec& spec)
{
    if (static_cast<int>(lists.size()) != g.n)
        throw Error(Errc::InvalidArgument, "list count != vertex count");
    detail::check_lists(lists);
    Cover c(g);
    c.lists = std::move(lists);
    std::vector<char> specified(g.edge_count(), 0);
    for (const auto& [uv, pairs] : spec) {
        auto [u, v] = uv;
        check_vertex(g, u);
        check_vertex(g, v);
        int e = g.edge_id(u, v);
        if (e < 0)
            throw Error(Errc::UnknownEdge,
                        std::to_string(u) + "-" + std::to_string(v));
        bool flip = u > v;
        std::vector<std::pair<int, int>> m;
        m.reserve(pairs.size());
        for (auto [cu, cv] : pairs) {
            if (flip)
                std::swap(cu, cv);
            if (!detail::list_has(c.lists[g.edges[e].first], cu))
                throw Error(Errc::UnknownColor,
                            "color " + std::to_string(cu) + " not in list of vertex " +
                                std::to_string(g.edges[e].first));
            if (!detail::list_has(c.lists[g.edges[e].second], cv))
                throw Error(Errc::UnknownColor,
                            "color " + std::to_string(cv) + " not in list of vertex " +
                                std::to_string(g.edges[e].second));
            m.emplace_back(cu, cv);
        }
        std::sort(m.begin(), m.end());
        for (std::size_t i = 0; i + 1 < m.size(); ++i) {
            if (m[i].first == m[i + 1].first)
                throw Error(Errc::NotAMatching,
                            "color " + std::to_string(m[i].first) +
                                " matched twice on edge " + std::to_string(u) + "-" +
                                std::to_string(v));
        }
        std::vector<std::pair<int, int>> by_second = m;
        std::sort(by_second.begin(), by_second.end(),
                  [](auto a, auto b) { return a.second < b.second; });
        for (std::size_t i = 0; i + 1 < by_second.size(); ++i) {
            if (by_second[i].second == by_second[i + 1].second)
                throw Error(Errc::NotAMatching,
                            "color " + std::to_string(by_second[i].second) +
                                " matched twice on edge " + std::to_string(u) + "-" +
                                std::to_string(v));
        }
        if (specified[e]++)
            throw Error(Errc::InvalidArgument,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " specified twice");
        c.matchings[e] = std::move(m);
    }
    return c;
}

namespace detail {
// splitmix64: tiny deterministic generator, identical across platforms.
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next()
    {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound)
    {
        std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold)
                return r % bound;
        }
    }
};
} // namespace detail

// Full-permutation cover with lists 1..k: every edge gets an independently
// drawn uniform permutation matching.  Deterministic in the seed.
inline Cover random_permutation_cover(const Graph& g, int k, std::uint64_t seed)
{
    Cover c = identity_cover(g, k);
    detail::SplitMix64 rng(seed);
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<int> pi(k);
        for (int i = 0; i < k; ++i)
            pi[i] = i + 1;
        for (int i = k - 1; i > 0; --i) {
            int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
            std::swap(pi[i], pi[j]);
        }
        auto& m = c.matchings[e];
        m.clear();
        for (int i = 0; i < k; ++i)
            m.emplace_back(i + 1, pi[i]);
        std::sort(m.begin(), m.end());
    }
    return c;
}

inline bool verify_transversal(const Cover& c, const Transversal& t)
{
    if (static_cast<int>(t.colors.size()) != c.base.n)
        return false;
    for (int v = 0; v < c.base.n; ++v)
        if (!detail::list_has(c.lists[v], t.colors[v]))
            return false;
    for (int e = 0; e < c.base.edge_count(); ++e) {
        auto [u, v] = c.base.edges[e];
        std::pair<int, int> p{t.colors[u], t.colors[v]};
        if (std::binary_search(c.matchings[e].begin(), c.matchings[e].end(), p))
            return false;
    }
    return true;
}

struct NormalizedCover {
    Cover cover;
    // relabel[v][c-1] = new color standing for old color c at v
    std::vector<std::vector<int>> relabel;
};

// Recolor each vertex's list so that every tree edge carries the identity
// matching.  `parent` describes the spanning tree (parent[root] = -1).
// Requires lists 1..k everywhere and full permutation matchings on every
// edge; transversals correspond one-to-one under the relabeling.
inline NormalizedCover normalize_cover(const Cover& c, const std::vector<int>& parent)
{
    const Graph& g = c.base;
    if (!is_connected(g))
        throw Error(Errc::DisconnectedBase, "normalization needs a connected base");
    int k = 0;
    if (!c.uniform_k(k))
        throw Error(Errc::NotPermutationCover, "lists are not uniform");
    for (int v = 0; v < g.n; ++v)
        for (int i = 0; i < k; ++i)
            if (c.lists[v][i] != i + 1)
                throw Error(Errc::NotPermutationCover,
                            "list at vertex " + std::to_string(v) +
                                " is not 1.." + std::to_string(k));
    // forward[e][cu-1] = cv for edge (u,v), u < v
    std::vector<std::vector<int>> forward(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (static_cast<int>(c.matchings[e].size()) != k)
            throw Error(Errc::NotPermutationCover,
                        "matching on edge " + std::to_string(g.edges[e].first) + "-" +
                            std::to_string(g.edges[e].second) + " is not full");
        std::vector<int> fwd(k, 0), seen(k, 0);
        for (auto [cu, cv] : c.matchings[e]) {
            fwd[cu - 1] = cv;
            if (seen[cv - 1]++)
                throw Error(Errc::NotPermutationCover, "matching is not a bijection");
        }
        forward[e] = std::move(fwd);
    }

    if (static_cast<int>(parent.size()) != g.n)
        throw Error(Errc::InvalidArgument, "parent vector size mismatch");
    std::vector<std::vector<int>> kids(g.n);
    std::vector<int> order; // parents before their children
    for (int v = 0; v < g.n; ++v) {
        if (parent[v] < 0) {
            order.push_back(v);
            continue;
        }
        check_vertex(g, parent[v]);
        if (!g.has_edge(parent[v], v))
            throw Error(Errc::InvalidArgument,
                        "tree edge " + std::to_string(parent[v]) + "-" +
                            std::to_string(v) + " is not in the base graph");
        kids[parent[v]].push_back(v);
    }
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int w : kids[order[head]])
            order.push_back(w);
    if (static_cast<int>(order.size()) != g.n)
        throw Error(Errc::InvalidArgument, "parent links do not form a spanning tree");

    std::vector<std::vector<int>> sigma(g.n); // sigma[v][old-1] = new
    for (int v : order) {
        if (parent[v] < 0) {
            sigma[v].resize(k);
            for (int i = 0; i < k; ++i)
                sigma[v][i] = i + 1;
            continue;
        }
        int p = parent[v];
        int e = g.edge_id(p, v);
        // pi maps p-colors to v-colors along the tree edge
        std::vector<int> pi(k);
        if (g.edges[e].first == p) {
            pi = forward[e];
        } else {
            for (int i = 0; i < k; ++i)
                pi[forward[e][i] - 1] = i + 1;
        }
        // want new matching identity: sigma_v(pi(c)) == sigma_p(c)
        sigma[v].resize(k);
        for (int cp = 1; cp <= k; ++cp)
            sigma[v][pi[cp - 1] - 1] = sigma[p][cp - 1];
    }

    NormalizedCover out{Cover(g), sigma};
    out.cover.lists = c.lists;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        auto& m = out.cover.matchings[e];
        for (int cu = 1; cu <= k; ++cu)
            m.emplace_back(sigma[u][cu - 1], sigma[v][forward[e][cu - 1] - 1]);
        std::sort(m.begin(), m.end());
    }
    return out;
}

inline NormalizedCover normalize_cover(const Cover& c)
{
    return normalize_cover(c, bfs_parents(c.base));
}

inline Transversal map_transversal(const NormalizedCover& nc, const Transversal& t)
{
    Transversal out;
    out.colors.resize(t.colors.size(), 0);
    for (std::size_t v = 0; v < t.colors.size(); ++v)
        if (t.colors[v] > 0)
            out.colors[v] = nc.relabel[v][t.colors[v] - 1];
    return out;
}

} // namespace dpc
