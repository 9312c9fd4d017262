#pragma once

#include "dpc/cycles.hpp"
#include "dpc/errors.hpp"
#include "dpc/graph.hpp"
#include "dpc/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dpc {

// Distinct triangles sharing at least one edge, as index pairs into the
// returned triangle list order of enumerate_cycles(g, 3).
inline std::vector<std::pair<Cycle, Cycle>> adjacent_triangle_pairs(const Graph& g)
{
    auto tris = enumerate_cycles(g, 3);
    std::vector<std::pair<Cycle, Cycle>> out;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        auto ei = tris[i].edges();
        std::sort(ei.begin(), ei.end());
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            for (auto e : tris[j].edges()) {
                if (std::binary_search(ei.begin(), ei.end(), e)) {
                    out.emplace_back(tris[i], tris[j]);
                    break;
                }
            }
        }
    }
    return out;
}

// Least vertex-to-vertex distance between two distinct triangles; nullopt
// when fewer than two triangles exist.  Sharing a vertex gives 0.
inline std::optional<int> triangle_distance(const Graph& g)
{
    auto tris = enumerate_cycles(g, 3);
    if (tris.size() < 2)
        return std::nullopt;
    // multi-source BFS per triangle would do; sizes are small, be direct
    std::vector<std::vector<int>> dist(g.n);
    auto bfs_from = [&](int s) -> const std::vector<int>& {
        if (!dist[s].empty())
            return dist[s];
        auto& d = dist[s];
        d.assign(g.n, -1);
        d[s] = 0;
        std::vector<int> q{s};
        for (std::size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (int w : g.adj[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
        }
        return d;
    };
    int best = -1;
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
            for (int x : tris[i].vertices) {
                const auto& d = bfs_from(x);
                for (int y : tris[j].vertices)
                    if (d[y] >= 0 && (best < 0 || d[y] < best))
                        best = d[y];
            }
    if (best < 0)
        return std::nullopt; // triangles in different components
    return best;
}

struct HypothesisReport {
    char theorem = 'A';
    bool satisfied = true;
    std::vector<Cycle> forbidden_cycles;           // cycles of an excluded length
    std::vector<std::pair<Cycle, Cycle>> close_triangles; // triangle pairs too near
    std::optional<int> triangle_dist;
};

// Theorem A: no two triangles share an edge; no cycles of length 5, 6 or 9.
// Theorem B: triangles pairwise at distance >= 2; no cycles of length 5, 6 or 8.
// Theorem C: triangles pairwise at distance >= 2; no cycles of length 4, 5 or 7.
inline HypothesisReport check_hypotheses(const Graph& g, char theorem)
{
    if (theorem != 'A' && theorem != 'B' && theorem != 'C')
        throw Error(Errc::InvalidArgument, "theorem must be A, B or C");
    HypothesisReport rep;
    rep.theorem = theorem;
    std::set<int> banned = (theorem == 'A')   ? std::set<int>{5, 6, 9}
                           : (theorem == 'B') ? std::set<int>{5, 6, 8}
                                             : std::set<int>{4, 5, 7};
    int probe = *banned.rbegin();
    for (const auto& cyc : enumerate_cycles(g, probe))
        if (banned.count(cyc.length()))
            rep.forbidden_cycles.push_back(cyc);

    if (theorem == 'A') {
        rep.close_triangles = adjacent_triangle_pairs(g);
    } else {
        auto tris = enumerate_cycles(g, 3);
        rep.triangle_dist = triangle_distance(g);
        if (rep.triangle_dist && *rep.triangle_dist < 2) {
            for (std::size_t i = 0; i < tris.size(); ++i)
                for (std::size_t j = i + 1; j < tris.size(); ++j) {
                    bool near = false;
                    for (int x : tris[i].vertices) {
                        for (int y : tris[j].vertices)
                            if (x == y || g.has_edge(x, y)) {
                                near = true;
                                break;
                            }
                        if (near)
                            break;
                    }
                    if (near)
                        rep.close_triangles.emplace_back(tris[i], tris[j]);
                }
        }
    }
    rep.satisfied = rep.forbidden_cycles.empty() && rep.close_triangles.empty();
    return rep;
}

inline HypothesisReport check_hypotheses(const PlaneGraph& g, char theorem)
{
    return check_hypotheses(g.graph(), theorem);
}

inline int min_degree(const Graph& g)
{
    if (g.n == 0)
        throw Error(Errc::EmptyGraph, "minimum degree of the empty graph");
    int md = g.degree(0);
    for (int v = 1; v < g.n; ++v)
        md = std::min(md, g.degree(v));
    return md;
}

// Repeatedly remove a vertex of least current degree (ties: lowest id).
// Returns (degeneracy, removal order).  Every vertex has at most
// `degeneracy` neighbors later in the order.
inline std::pair<int, std::vector<int>> degeneracy_ordering(const Graph& g)
{
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v)
        deg[v] = g.degree(v);
    std::vector<char> gone(g.n, 0);
    std::vector<int> order;
    int degeneracy = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v)
            if (!gone[v] && (pick < 0 || deg[v] < deg[pick]))
                pick = v;
        degeneracy = std::max(degeneracy, deg[pick]);
        gone[pick] = 1;
        order.push_back(pick);
        for (int u : g.adj[pick])
            if (!gone[u])
                --deg[u];
    }
    return {degeneracy, order};
}

struct Block {
    std::vector<int> vertices; // ascending, original ids
    bool is_cycle = false;
    bool is_complete = false;
};

namespace detail {

struct BiconnectedFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    explicit BiconnectedFinder(const Graph& gg)
        : g(gg), disc(gg.n, -1), low(gg.n, 0)
    {
        for (int v = 0; v < g.n; ++v)
            if (disc[v] < 0)
                dfs(v, -1);
    }

    void dfs(int u, int parent)
    {
        disc[u] = low[u] = timer++;
        for (int w : g.adj[u]) {
            if (w == parent) {
                parent = -1; // skip one parent edge only (no parallel edges)
                continue;
            }
            if (disc[w] < 0) {
                estack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<std::pair<int, int>> blk;
                    for (;;) {
                        auto e = estack.back();
                        estack.pop_back();
                        blk.push_back(e);
                        if (e == std::make_pair(u, w))
                            break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[u]) {
                estack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

} // namespace detail

inline std::vector<Block> biconnected_blocks(const Graph& g)
{
    detail::BiconnectedFinder finder(g);
    std::vector<Block> out;
    for (auto& blk : finder.blocks) {
        std::set<int> vs;
        for (auto [a, b] : blk) {
            vs.insert(a);
            vs.insert(b);
        }
        Block b;
        b.vertices.assign(vs.begin(), vs.end());
        int nb = static_cast<int>(b.vertices.size());
        int ne = static_cast<int>(blk.size());
        b.is_complete = (ne == nb * (nb - 1) / 2);
        if (ne == nb && nb >= 3) {
            bool all2 = true;
            std::map<int, int> d;
            for (auto [a, bb] : blk) {
                ++d[a];
                ++d[bb];
            }
            for (auto [v, dd] : d)
                if (dd != 2)
                    all2 = false;
            b.is_cycle = all2;
        }
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    return out;
}

// Blocks of the subgraph induced by degree-k vertices (degrees in g) that are
// neither cycles nor complete graphs.
inline std::vector<Block> audit_blocks(const Graph& g, int k)
{
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == k)
            keep.push_back(v);
    std::vector<int> vmap;
    Graph h = induced_subgraph(g, keep, &vmap);
    std::vector<Block> bad;
    for (auto& blk : biconnected_blocks(h)) {
        if (blk.is_cycle || blk.is_complete)
            continue;
        for (int& v : blk.vertices)
            v = vmap[v];
        bad.push_back(std::move(blk));
    }
    return bad;
}

// Edge uv controls face `target`: target is a side of uv of length <= 4 and
// the other side has length >= 7.
inline bool controls(const PlaneGraph& g, int u, int v, int target_face)
{
    if (target_face < 0 || target_face >= g.face_count())
        throw Error(Errc::InvalidArgument, "face id out of range");
    int e = g.graph().edge_id(u, v);
    if (e < 0)
        throw Error(Errc::UnknownEdge, std::to_string(u) + "-" + std::to_string(v));
    const auto& sides = g.edge_faces(e);
    if (sides[0] != target_face && sides[1] != target_face)
        return false;
    if (g.faces()[target_face].length() > 4)
        return false;
    int other = (sides[0] == target_face) ? sides[1] : sides[0];
    if (sides[0] == target_face && sides[1] == target_face)
        other = target_face;
    return g.faces()[other].length() >= 7;
}

// Edge uv controls the cycle `target`: the cycle passes through uv, has
// length <= 4, and uv also lies on some cycle of length >= 7.
inline bool controls(const PlaneGraph& g, int u, int v, const Cycle& target)
{
    const Graph& gr = g.graph();
    int e = gr.edge_id(u, v);
    if (e < 0)
        throw Error(Errc::UnknownEdge, std::to_string(u) + "-" + std::to_string(v));
    if (!is_cycle_of(gr, target.vertices))
        throw Error(Errc::InvalidArgument, "target is not a cycle of the graph");
    if (target.length() > 4 || !target.contains_edge(u, v))
        return false;
    return lies_on_long_cycle(gr, u, v, 7);
}

// Ring configuration query: a cycle v_1..v_m whose last vertex is a
// 3-vertex, plus a controlled 4^- cycle for the closing edge and for every
// edge v_i v_{i+1} whose tail has degree 4.
struct ReducibleConfigQuery {
    std::vector<int> cycle; // v_1 .. v_m
    // (u,v) (any orientation) -> controlled cycle for that edge
    std::vector<std::pair<std::pair<int, int>, Cycle>> controlled;
};

namespace detail {

inline const Cycle* find_controlled(const ReducibleConfigQuery& q, int u, int v)
{
    for (const auto& [uv, cyc] : q.controlled) {
        if ((uv.first == u && uv.second == v) || (uv.first == v && uv.second == u))
            return &cyc;
    }
    return nullptr;
}

} // namespace detail

// Matches the reducible ring configuration.  Checks, in order:
//   (i)   every selected ring edge controls its listed 4^- cycle,
//   (ii)  ring vertices and the off-ring vertices of all listed cycles are
//         pairwise distinct,
//   (iii) ring vertices have degree at most 4,
//   (iv)  off-ring vertices of listed cycles have degree exactly 3,
//   (v)   the apex next to v_1 on the closing cycle has a neighbor outside
//         the ring and all listed cycles.
// Standing hypothesis: no two 4^- cycles of g share an edge.
inline bool match_reducible_config(const PlaneGraph& pg, const ReducibleConfigQuery& q,
                                   std::string* why = nullptr)
{
    const Graph& g = pg.graph();
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };

    // standing hypothesis
    auto small = enumerate_cycles(g, 4);
    for (std::size_t i = 0; i < small.size(); ++i) {
        auto ei = small[i].edges();
        std::sort(ei.begin(), ei.end());
        for (std::size_t j = i + 1; j < small.size(); ++j)
            for (auto e : small[j].edges())
                if (std::binary_search(ei.begin(), ei.end(), e))
                    throw Error(Errc::AdjacentSmallCycles,
                                "two cycles of length <= 4 share edge " +
                                    std::to_string(e.first) + "-" +
                                    std::to_string(e.second));
    }

    int m = static_cast<int>(q.cycle.size());
    if (!is_cycle_of(g, q.cycle))
        throw Error(Errc::MalformedQuery, "query ring is not a cycle of the graph");
    int v1 = q.cycle.front(), vm = q.cycle.back();
    if (g.degree(vm) != 3)
        throw Error(Errc::MalformedQuery,
                    "ring end " + std::to_string(vm) + " must be a 3-vertex");

    const Cycle* c0 = detail::find_controlled(q, vm, v1);
    if (!c0)
        throw Error(Errc::MalformedQuery, "closing edge has no controlled cycle");
    if (!is_cycle_of(g, c0->vertices) || c0->length() > 4 ||
        !c0->contains_edge(vm, v1))
        throw Error(Errc::MalformedQuery,
                    "closing edge cycle must be a 4^- cycle through it");
    // orient c0 as vm, v1, u (, w)
    std::vector<int> oriented = c0->vertices;
    {
        auto it = std::find(oriented.begin(), oriented.end(), vm);
        std::rotate(oriented.begin(), it, oriented.end());
        if (oriented[1] != v1)
            std::reverse(oriented.begin() + 1, oriented.end());
        if (oriented[1] != v1)
            throw Error(Errc::MalformedQuery, "closing cycle does not follow edge");
    }
    int apex = oriented[2]; // neighbor of v_1 on the closing cycle
    if (!controls(pg, vm, v1, *c0))
        throw Error(Errc::MalformedQuery, "closing edge does not control its cycle");

    // E+: edges v_i v_{i+1} with deg(v_i) = 4, plus the closing edge
    std::vector<std::pair<int, int>> eplus;
    for (int i = 0; i + 1 < m; ++i)
        if (g.degree(q.cycle[i]) == 4)
            eplus.emplace_back(q.cycle[i], q.cycle[i + 1]);
    eplus.emplace_back(vm, v1);

    std::vector<const Cycle*> used_cycles;
    for (auto [a, b] : eplus) {
        const Cycle* cc = detail::find_controlled(q, a, b);
        if (!cc)
            return fail("(i): edge " + std::to_string(a) + "-" + std::to_string(b) +
                        " has no controlled cycle");
        if (!is_cycle_of(g, cc->vertices) || !controls(pg, a, b, *cc))
            return fail("(i): edge " + std::to_string(a) + "-" + std::to_string(b) +
                        " does not control its cycle");
        used_cycles.push_back(cc);
    }

    std::vector<char> on_ring(g.n, 0);
    for (int v : q.cycle)
        on_ring[v] = 1;
    std::set<int> seen(q.cycle.begin(), q.cycle.end());
    std::vector<int> off_ring;
    for (const Cycle* cc : used_cycles)
        for (int v : cc->vertices) {
            if (on_ring[v])
                continue;
            if (!seen.insert(v).second)
                return fail("(ii): vertex " + std::to_string(v) + " repeats");
            off_ring.push_back(v);
        }
    // a listed cycle touching the ring anywhere but its own edge's endpoints
    for (std::size_t i = 0; i < used_cycles.size(); ++i) {
        int ring_touch = 0;
        for (int v : used_cycles[i]->vertices)
            if (on_ring[v])
                ++ring_touch;
        if (ring_touch != 2)
            return fail("(ii): controlled cycle meets the ring beyond its edge");
    }

    for (int v : q.cycle)
        if (g.degree(v) > 4)
            return fail("(iii): ring vertex " + std::to_string(v) + " has degree " +
                        std::to_string(g.degree(v)));

    for (int v : off_ring)
        if (g.degree(v) != 3)
            return fail("(iv): vertex " + std::to_string(v) + " has degree " +
                        std::to_string(g.degree(v)));

    for (int u : g.adj[apex]) {
        if (on_ring[u])
            continue;
        bool on_listed = false;
        for (const Cycle* cc : used_cycles)
            if (cc->contains_vertex(u)) {
                on_listed = true;
                break;
            }
        if (!on_listed) {
            if (why)
                why->clear();
            return true;
        }
    }
    return fail("(v): apex " + std::to_string(apex) +
                " has no neighbor outside the configuration");
}

} // namespace dpc
