#pragma once

#include "dpc/cover.hpp"
#include "dpc/errors.hpp"
#include "dpc/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpc {

// Extend a partial transversal over a chain v_1..v_t whose other endpoints
// close up via the edge v_1 v_t.  The rest of the graph (G') is already
// colored.  Preconditions, checked in order:
//   (1) v_1 has strictly fewer G'-neighbors than v_t,
//   (2) deg(v_t) <= k and the closing edge v_1 v_t exists,
//   (3) each middle v_i has at most k-1 neighbors outside {v_{i+1},...,v_t}.
struct GreedyExtensionQuery {
    Cover cover;
    std::vector<int> chain;   // v_1 .. v_t, t >= 2
    Transversal partial;      // colors on all vertices off the chain, 0 on it
};

namespace detail {

inline int matched_color_at(const Cover& c, int e, int from, int color_at_from)
{
    auto [a, b] = c.base.edges[e];
    if (from == a) {
        for (auto [ca, cb] : c.matchings[e])
            if (ca == color_at_from)
                return cb;
    } else {
        for (auto [ca, cb] : c.matchings[e])
            if (cb == color_at_from)
                return ca;
    }
    return 0;
}

} // namespace detail

inline Transversal extend_coloring_greedy(const GreedyExtensionQuery& q, int k)
{
    const Cover& c = q.cover;
    const Graph& g = c.base;

    int uniform = 0;
    if (!c.uniform_k(uniform) || uniform < 1)
        throw Error(Errc::MalformedQuery, "cover lists must share one size");
    if (k != uniform)
        throw Error(Errc::MalformedQuery, "k does not match the cover's list size");

    int t = static_cast<int>(q.chain.size());
    if (t < 2)
        throw Error(Errc::MalformedQuery, "chain needs at least two vertices");
    std::vector<char> on_chain(g.n, 0);
    for (int v : q.chain) {
        check_vertex(g, v);
        if (on_chain[v]++)
            throw Error(Errc::MalformedQuery,
                        "chain repeats vertex " + std::to_string(v));
    }
    for (int i = 0; i + 1 < t; ++i)
        if (!g.has_edge(q.chain[i], q.chain[i + 1]))
            throw Error(Errc::MalformedQuery,
                        "chain vertices " + std::to_string(q.chain[i]) + " and " +
                            std::to_string(q.chain[i + 1]) + " not adjacent");

    if (static_cast<int>(q.partial.colors.size()) != g.n)
        throw Error(Errc::MalformedQuery, "partial coloring size mismatch");
    for (int v = 0; v < g.n; ++v) {
        int col = q.partial.colors[v];
        if (on_chain[v]) {
            if (col != 0)
                throw Error(Errc::MalformedQuery,
                            "chain vertex " + std::to_string(v) + " already colored");
        } else {
            if (col == 0)
                throw Error(Errc::MalformedQuery,
                            "off-chain vertex " + std::to_string(v) + " uncolored");
            if (!detail::list_has(c.lists[v], col))
                throw Error(Errc::MalformedQuery,
                            "color at vertex " + std::to_string(v) + " not in its list");
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        if (on_chain[a] || on_chain[b])
            continue;
        std::pair<int, int> p{q.partial.colors[a], q.partial.colors[b]};
        if (std::binary_search(c.matchings[e].begin(), c.matchings[e].end(), p))
            throw Error(Errc::MalformedQuery,
                        "partial coloring conflicts on edge " + std::to_string(a) +
                            "-" + std::to_string(b));
    }

    int v1 = q.chain.front(), vt = q.chain.back();
    int a_cnt = 0, b_cnt = 0;
    for (int u : g.adj[v1])
        if (!on_chain[u])
            ++a_cnt;
    for (int u : g.adj[vt])
        if (!on_chain[u])
            ++b_cnt;
    if (a_cnt >= b_cnt)
        throw PreconditionError(1, v1,
                                "endpoint " + std::to_string(v1) + " has " +
                                    std::to_string(a_cnt) +
                                    " outside neighbors, needs fewer than " +
                                    std::to_string(b_cnt));
    if (g.degree(vt) > k)
        throw PreconditionError(2, vt,
                                "endpoint " + std::to_string(vt) + " has degree " +
                                    std::to_string(g.degree(vt)) + " > " +
                                    std::to_string(k));
    if (!g.has_edge(v1, vt))
        throw PreconditionError(2, vt, "closing edge " + std::to_string(v1) + "-" +
                                           std::to_string(vt) + " missing");
    std::vector<char> late(g.n, 0); // v_{i+1}..v_t at the time of v_i
    for (int i = 1; i < t; ++i)
        late[q.chain[i]] = 1;
    for (int i = 1; i + 1 < t; ++i) {
        int vi = q.chain[i];
        late[vi] = 0;
        int early = 0;
        for (int u : g.adj[vi])
            if (!late[u])
                ++early;
        if (early > k - 1)
            throw PreconditionError(3, vi,
                                    "middle vertex " + std::to_string(vi) + " sees " +
                                        std::to_string(early) +
                                        " earlier neighbors, limit " +
                                        std::to_string(k - 1));
    }

    Transversal t_out = q.partial;
    auto blocked_by_colored = [&](int v) {
        std::set<int> blocked;
        for (int u : g.adj[v]) {
            if (t_out.colors[u] == 0)
                continue;
            int e = g.edge_id(u, v);
            int m = detail::matched_color_at(c, e, u, t_out.colors[u]);
            if (m != 0)
                blocked.insert(m);
        }
        return blocked;
    };

    // v_1: prefer a color whose matched partner at v_t is blocked there anyway
    std::set<int> a1 = blocked_by_colored(v1);
    std::vector<int> cands;
    for (int col : c.lists[v1])
        if (!a1.count(col))
            cands.push_back(col);
    if (cands.empty())
        throw std::logic_error("chain start out of colors despite preconditions");
    std::set<int> bt = blocked_by_colored(vt);
    int e1t = g.edge_id(v1, vt);
    int pick = 0;
    for (int col : cands) {
        int psi = detail::matched_color_at(c, e1t, v1, col);
        if (psi == 0 || bt.count(psi)) {
            pick = col;
            break;
        }
    }
    if (pick == 0)
        pick = cands.front();
    t_out.colors[v1] = pick;

    for (int i = 1; i + 1 < t; ++i) {
        int vi = q.chain[i];
        std::set<int> blocked = blocked_by_colored(vi);
        int chosen = 0;
        for (int col : c.lists[vi])
            if (!blocked.count(col)) {
                chosen = col;
                break;
            }
        if (chosen == 0)
            throw std::logic_error("middle vertex out of colors despite preconditions");
        t_out.colors[vi] = chosen;
    }

    std::set<int> blocked_t = blocked_by_colored(vt);
    int last = 0;
    for (int col : c.lists[vt])
        if (!blocked_t.count(col)) {
            last = col;
            break;
        }
    if (last == 0)
        throw std::logic_error("chain end out of colors despite preconditions");
    t_out.colors[vt] = last;
    return t_out;
}

inline Transversal extend_coloring_greedy(const GreedyExtensionQuery& q)
{
    int k = 0;
    q.cover.uniform_k(k);
    return extend_coloring_greedy(q, k);
}

} // namespace dpc
