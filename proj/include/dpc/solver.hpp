#pragma once

#include "dpc/cover.hpp"
#include "dpc/errors.hpp"
#include "dpc/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace dpc {

inline std::uint64_t default_budget()
{
    if (const char* env = std::getenv("DPD_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<std::uint64_t>(v);
    }
    return 100'000'000ULL;
}

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
};

struct SolveResult {
    bool found = false;
    Transversal assignment;
    SolveStats stats;
};

namespace detail {

// Index-space view of a cover: colors are replaced by their list positions;
// per directed neighbor a table maps my index to the matched index over there.
struct SolverTables {
    int n;
    std::vector<int> k;                        // list size per vertex
    std::vector<std::vector<int>> nbr;         // neighbor ids
    std::vector<std::vector<const int*>> tbl;  // tbl[v][j][idx_v] = matched idx at nbr, -1 none
    std::vector<std::vector<int>> storage;

    explicit SolverTables(const Cover& c)
    {
        const Graph& g = c.base;
        n = g.n;
        k.resize(n);
        for (int v = 0; v < n; ++v) {
            k[v] = static_cast<int>(c.lists[v].size());
            if (k[v] > 31)
                throw Error(Errc::InvalidArgument, "lists longer than 31 unsupported");
        }
        nbr.resize(n);
        tbl.resize(n);
        // reserve keeps .data() pointers stable across the pushes below
        storage.reserve(static_cast<std::size_t>(g.edge_count()) * 2);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edges[e];
            std::vector<int> fwd(k[a], -1), rev(k[b], -1);
            for (auto [ca, cb] : c.matchings[e]) {
                int ia = index_of(c.lists[a], ca);
                int ib = index_of(c.lists[b], cb);
                fwd[ia] = ib;
                rev[ib] = ia;
            }
            storage.push_back(std::move(fwd));
            const int* fp = storage.back().data();
            storage.push_back(std::move(rev));
            const int* rp = storage.back().data();
            nbr[a].push_back(b);
            tbl[a].push_back(fp);
            nbr[b].push_back(a);
            tbl[b].push_back(rp);
        }
    }

    static int index_of(const std::vector<int>& list, int c)
    {
        return static_cast<int>(std::lower_bound(list.begin(), list.end(), c) -
                                list.begin());
    }
};

// Chronological backtracking over vertices 0..n-1, color indices ascending,
// with forward pruning of matched colors at unassigned neighbors.
struct BacktrackSolver {
    const SolverTables& t;
    std::uint64_t budget;
    SolveStats stats;
    std::vector<int> assign;            // color index or -1
    std::vector<std::uint32_t> avail;   // bitmask of open color indices
    std::vector<std::pair<int, int>> trail; // (vertex, index) cleared bits

    BacktrackSolver(const SolverTables& tables, std::uint64_t node_budget)
        : t(tables), budget(node_budget), assign(t.n, -1), avail(t.n)
    {
        for (int v = 0; v < t.n; ++v)
            avail[v] = (t.k[v] >= 32) ? ~0u : ((1u << t.k[v]) - 1);
    }

    bool place(int v, int idx, std::size_t& mark)
    {
        mark = trail.size();
        assign[v] = idx;
        for (std::size_t j = 0; j < t.nbr[v].size(); ++j) {
            int u = t.nbr[v][j];
            if (assign[u] >= 0)
                continue;
            int m = t.tbl[v][j][idx];
            if (m < 0)
                continue;
            std::uint32_t bit = 1u << m;
            if (avail[u] & bit) {
                avail[u] &= ~bit;
                trail.emplace_back(u, m);
                if (avail[u] == 0)
                    return false;
            }
        }
        return true;
    }

    void unwind(int v, std::size_t mark)
    {
        while (trail.size() > mark) {
            auto [u, m] = trail.back();
            trail.pop_back();
            avail[u] |= 1u << m;
        }
        assign[v] = -1;
    }

    bool solve(int v)
    {
        if (v == t.n)
            return true;
        for (int idx = 0; idx < t.k[v]; ++idx) {
            if (!(avail[v] & (1u << idx)))
                continue;
            if (++stats.nodes > budget)
                throw Error(Errc::BudgetExceeded,
                            "node budget " + std::to_string(budget) + " exhausted");
            std::size_t mark = 0;
            if (place(v, idx, mark)) {
                if (solve(v + 1))
                    return true;
            }
            unwind(v, mark);
        }
        ++stats.backtracks;
        return false;
    }
};

} // namespace detail

// Search for a transversal of the cover.  Throws BudgetExceeded when the
// search tree outgrows the node budget.
inline SolveResult find_m_coloring(const Cover& c,
                                   std::uint64_t budget = default_budget())
{
    detail::SolverTables tables(c);
    detail::BacktrackSolver solver(tables, budget);
    SolveResult r;
    r.found = solver.solve(0);
    r.stats = solver.stats;
    if (r.found) {
        r.assignment.colors.resize(c.base.n);
        for (int v = 0; v < c.base.n; ++v)
            r.assignment.colors[v] = c.lists[v][solver.assign[v]];
    }
    return r;
}

// Color vertices in the given order, always taking the first list color not
// excluded by an already-colored neighbor.  Succeeds whenever every vertex
// sees fewer colored neighbors than list colors at its turn.
inline std::optional<Transversal> greedy_transversal(const Cover& c,
                                                     const std::vector<int>& order)
{
    const Graph& g = c.base;
    if (static_cast<int>(order.size()) != g.n)
        throw Error(Errc::InvalidArgument, "order size != vertex count");
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
        check_vertex(g, v);
        if (seen[v]++)
            throw Error(Errc::InvalidArgument, "order repeats vertex " + std::to_string(v));
    }
    Transversal t;
    t.colors.assign(g.n, 0);
    for (int v : order) {
        int chosen = 0;
        for (int cv : c.lists[v]) {
            bool ok = true;
            for (int u : g.adj[v]) {
                if (t.colors[u] == 0)
                    continue;
                int e = g.edge_id(u, v);
                std::pair<int, int> p = (g.edges[e].first == u)
                                            ? std::pair<int, int>{t.colors[u], cv}
                                            : std::pair<int, int>{cv, t.colors[u]};
                if (std::binary_search(c.matchings[e].begin(), c.matchings[e].end(), p)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = cv;
                break;
            }
        }
        if (chosen == 0)
            return std::nullopt;
        t.colors[v] = chosen;
    }
    return t;
}

struct DpSolveOptions {
    std::uint64_t budget = default_budget();
    int threads = 1;
};

struct DpCheckResult {
    bool colorable = true;
    std::uint64_t covers_checked = 0;
    std::uint64_t nodes = 0;
    std::optional<Cover> witness; // a cover with no transversal, when found
};

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int k)
{
    std::vector<int> pi(k);
    for (int i = 0; i < k; ++i)
        pi[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

struct ComponentEnum {
    Graph sub;
    std::vector<int> vmap;          // sub id -> original id
    std::vector<int> nontree;       // edge ids of sub, ascending
    std::vector<char> is_tree;      // per sub edge

    ComponentEnum(const Graph& g, const std::vector<int>& members)
    {
        sub = induced_subgraph(g, members, &vmap);
        std::vector<int> parent = bfs_parents(sub);
        is_tree.assign(sub.edge_count(), 0);
        for (int v = 0; v < sub.n; ++v)
            if (parent[v] >= 0)
                is_tree[sub.edge_id(parent[v], v)] = 1;
        for (int e = 0; e < sub.edge_count(); ++e)
            if (!is_tree[e])
                nontree.push_back(e);
    }

    Cover cover_for(int k, const std::vector<std::vector<int>>& perms,
                    const std::vector<int>& choice) const
    {
        Cover c = identity_cover(sub, k);
        for (std::size_t i = 0; i < nontree.size(); ++i) {
            auto& m = c.matchings[nontree[i]];
            m.clear();
            const auto& pi = perms[choice[i]];
            for (int cu = 1; cu <= k; ++cu)
                m.emplace_back(cu, pi[cu - 1]);
        }
        return c;
    }
};

// Sequential scan of one slice of the cover space: choices whose first digit
// lies in `first_digits`.  Later digits run through the full odometer.
struct SliceScan {
    const ComponentEnum& ce;
    int k;
    const std::vector<std::vector<int>>& perms;
    std::vector<int> first_digits;

    std::uint64_t covers = 0;
    std::uint64_t nodes = 0;
    bool found_falsifier = false;
    std::vector<int> falsifier_choice;

    void run(std::atomic<bool>& stop, std::atomic<std::uint64_t>& global_nodes,
             std::uint64_t budget, std::atomic<bool>& budget_hit)
    {
        std::size_t digits = ce.nontree.size();
        std::vector<int> choice(digits, 0);
        if (digits == 0) {
            scan_one(choice, stop, global_nodes, budget, budget_hit);
            return;
        }
        for (int fd : first_digits) {
            choice.assign(digits, 0);
            choice[0] = fd;
            for (;;) {
                if (stop.load(std::memory_order_relaxed))
                    return;
                if (!scan_one(choice, stop, global_nodes, budget, budget_hit))
                    return;
                // advance digits 1.. (digit 0 fixed per slice)
                std::size_t d = digits - 1;
                for (;;) {
                    if (d == 0)
                        goto next_first;
                    if (++choice[d] < static_cast<int>(perms.size()))
                        break;
                    choice[d] = 0;
                    --d;
                }
            }
        next_first:;
        }
    }

    bool scan_one(const std::vector<int>& choice, std::atomic<bool>& stop,
                  std::atomic<std::uint64_t>& global_nodes, std::uint64_t budget,
                  std::atomic<bool>& budget_hit)
    {
        Cover c = ce.cover_for(k, perms, choice);
        std::uint64_t already = global_nodes.load(std::memory_order_relaxed);
        if (already >= budget) {
            budget_hit.store(true);
            stop.store(true);
            return false;
        }
        SolveResult r;
        try {
            r = find_m_coloring(c, budget - already);
        } catch (const Error& e) {
            if (e.code == Errc::BudgetExceeded) {
                budget_hit.store(true);
                stop.store(true);
                return false;
            }
            throw;
        }
        ++covers;
        nodes += r.stats.nodes;
        global_nodes.fetch_add(r.stats.nodes, std::memory_order_relaxed);
        if (!r.found) {
            found_falsifier = true;
            falsifier_choice = choice;
            stop.store(true);
            return false;
        }
        return true;
    }
};

} // namespace detail

// Exhaustively checks all normalized covers (identity on a BFS tree, every
// permutation on each remaining edge).  Disconnected graphs are checked
// component by component; covers_checked sums over components.
inline DpCheckResult is_dp_k_colorable(const Graph& g, int k,
                                       const DpSolveOptions& opts = {})
{
    if (k < 1)
        throw Error(Errc::InvalidArgument, "k must be >= 1");
    DpCheckResult result;
    if (g.n == 0)
        return result;
    auto perms = detail::all_permutations(k);
    auto comp = component_labels(g);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;

    for (int ci = 0; ci < ncomp && result.colorable; ++ci) {
        std::vector<int> members;
        for (int v = 0; v < g.n; ++v)
            if (comp[v] == ci)
                members.push_back(v);
        detail::ComponentEnum ce(g, members);

        int nthreads = std::max(1, opts.threads);
        if (ce.nontree.empty() || nthreads > static_cast<int>(perms.size()))
            nthreads = std::min<int>(nthreads, ce.nontree.empty() ? 1 : perms.size());

        std::vector<detail::SliceScan> slices;
        for (int t = 0; t < nthreads; ++t) {
            detail::SliceScan s{ce, k, perms, {}, 0, 0, false, {}};
            if (!ce.nontree.empty())
                for (int fd = t; fd < static_cast<int>(perms.size()); fd += nthreads)
                    s.first_digits.push_back(fd);
            slices.push_back(std::move(s));
        }

        std::atomic<bool> stop{false};
        std::atomic<bool> budget_hit{false};
        std::atomic<std::uint64_t> global_nodes{result.nodes};

        if (nthreads == 1) {
            slices[0].run(stop, global_nodes, opts.budget, budget_hit);
        } else {
            std::vector<std::thread> pool;
            for (auto& s : slices)
                pool.emplace_back([&s, &stop, &global_nodes, &budget_hit, &opts] {
                    s.run(stop, global_nodes, opts.budget, budget_hit);
                });
            for (auto& th : pool)
                th.join();
        }

        const detail::SliceScan* falsifier = nullptr;
        for (const auto& s : slices) {
            result.covers_checked += s.covers;
            result.nodes += s.nodes;
            if (s.found_falsifier &&
                (!falsifier || s.falsifier_choice < falsifier->falsifier_choice))
                falsifier = &s;
        }
        if (falsifier) {
            result.colorable = false;
            // report the falsifying cover on the original vertex set
            Cover sub_cover = ce.cover_for(k, perms, falsifier->falsifier_choice);
            Cover full = identity_cover(g, k);
            for (int e = 0; e < ce.sub.edge_count(); ++e) {
                auto [a, b] = ce.sub.edges[e];
                int oe = g.edge_id(ce.vmap[a], ce.vmap[b]);
                full.matchings[oe] = sub_cover.matchings[e];
            }
            result.witness = std::move(full);
        } else if (budget_hit.load()) {
            throw Error(Errc::BudgetExceeded,
                        "cover enumeration exceeded node budget " +
                            std::to_string(opts.budget));
        }
    }
    return result;
}

// Least k in 1..max_k for which every cover has a transversal.
inline int dp_chromatic_number(const Graph& g, int max_k,
                               const DpSolveOptions& opts = {})
{
    if (max_k < 1)
        throw Error(Errc::InvalidArgument, "max_k must be >= 1");
    for (int k = 1; k <= max_k; ++k)
        if (is_dp_k_colorable(g, k, opts).colorable)
            return k;
    throw Error(Errc::NotWithinMax,
                "no k <= " + std::to_string(max_k) + " suffices");
}

} // namespace dpc
