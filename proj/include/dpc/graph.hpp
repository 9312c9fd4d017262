#pragma once

#include "dpc/errors.hpp"

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

namespace dpc {

// Simple undirected graph. Edges are stored lexicographically with u < v;
// adjacency lists are sorted ascending, so every traversal is deterministic.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : n(vertex_count)
    {
        if (n < 0)
            throw Error(Errc::InvalidArgument, "negative vertex count");
        adj.assign(n, {});
        for (auto& [a, b] : edge_list) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw Error(Errc::InvalidVertex, "edge endpoint out of range");
            if (a == b)
                throw Error(Errc::SelfLoop, "self loop at " + std::to_string(a));
            if (a > b)
                std::swap(a, b);
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
            throw Error(Errc::DuplicateNeighbor, "parallel edge");
        edges = std::move(edge_list);
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& row : adj)
            std::sort(row.begin(), row.end());
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const
    {
        if (u < 0 || u >= n || v < 0 || v >= n)
            return false;
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    // Index into `edges`; -1 when absent.
    int edge_id(int u, int v) const
    {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v))
            return -1;
        return static_cast<int>(it - edges.begin());
    }

    int edge_count() const { return static_cast<int>(edges.size()); }
};

inline void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.n)
        throw Error(Errc::InvalidVertex, "vertex " + std::to_string(v));
}

// Component label per vertex, labels numbered by smallest contained vertex order.
inline std::vector<int> component_labels(const Graph& g)
{
    std::vector<int> comp(g.n, -1);
    int next = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1)
            continue;
        comp[s] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v])
                if (comp[w] == -1) {
                    comp[w] = next;
                    q.push(w);
                }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const Graph& g)
{
    if (g.n == 0)
        return true;
    auto comp = component_labels(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

// BFS distance; -1 when unreachable.
inline int shortest_distance(const Graph& g, int u, int v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        return 0;
    std::vector<int> dist(g.n, -1);
    dist[u] = 0;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.adj[x])
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                if (y == v)
                    return dist[y];
                q.push(y);
            }
    }
    return -1;
}

// BFS spanning forest rooted at vertex 0 (then at the smallest vertex of each
// further component). Returns parent array, -1 at roots.
inline std::vector<int> bfs_parents(const Graph& g)
{
    std::vector<int> parent(g.n, -2);
    for (int s = 0; s < g.n; ++s) {
        if (parent[s] != -2)
            continue;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v])
                if (parent[w] == -2) {
                    parent[w] = v;
                    q.push(w);
                }
        }
    }
    return parent;
}

// Induced subgraph on `keep` (ascending); out_map[i] = original id of new vertex i.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                              std::vector<int>* out_map = nullptr)
{
    std::vector<int> newid(g.n, -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        newid[keep[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges)
        if (newid[a] != -1 && newid[b] != -1)
            es.emplace_back(newid[a], newid[b]);
    if (out_map)
        *out_map = keep;
    return Graph(static_cast<int>(keep.size()), std::move(es));
}

inline Graph delete_vertex(const Graph& g, int v, std::vector<int>* out_map = nullptr)
{
    std::vector<int> keep;
    for (int i = 0; i < g.n; ++i)
        if (i != v)
            keep.push_back(i);
    return induced_subgraph(g, keep, out_map);
}

} // namespace dpc
