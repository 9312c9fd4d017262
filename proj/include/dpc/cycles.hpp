#pragma once

#include "dpc/errors.hpp"
#include "dpc/graph.hpp"
#include "dpc/plane_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace dpc {

// Simple cycle in canonical form: starts at its smallest vertex, runs in the
// direction whose second vertex is the smaller of the two neighbors.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    bool contains_vertex(int v) const
    {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    bool contains_edge(int u, int v) const
    {
        int m = length();
        for (int i = 0; i < m; ++i) {
            int a = vertices[i], b = vertices[(i + 1) % m];
            if ((a == u && b == v) || (a == v && b == u))
                return true;
        }
        return false;
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> es;
        int m = length();
        for (int i = 0; i < m; ++i) {
            int a = vertices[i], b = vertices[(i + 1) % m];
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        return es;
    }

    bool operator==(const Cycle& o) const { return vertices == o.vertices; }
};

inline Cycle canonical_cycle(std::vector<int> vs)
{
    if (vs.size() < 3)
        throw Error(Errc::InvalidArgument, "cycle shorter than 3");
    auto mn = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), mn, vs.end());
    if (vs[1] > vs.back())
        std::reverse(vs.begin() + 1, vs.end());
    return Cycle{std::move(vs)};
}

// True when the walk is a simple cycle of g.
inline bool is_cycle_of(const Graph& g, const std::vector<int>& vs)
{
    int m = static_cast<int>(vs.size());
    if (m < 3)
        return false;
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int v : vs)
        if (v < 0 || v >= g.n)
            return false;
    for (int i = 0; i < m; ++i)
        if (!g.has_edge(vs[i], vs[(i + 1) % m]))
            return false;
    return true;
}

namespace detail {
inline void cycle_dfs(const Graph& g, int root, std::vector<int>& path,
                      std::vector<char>& on_path, int max_len,
                      std::vector<Cycle>& out)
{
    int last = path.back();
    for (int w : g.adj[last]) {
        if (w == root && path.size() >= 3) {
            if (path[1] < path.back())
                out.push_back(Cycle{path});
        } else if (w > root && !on_path[w] &&
                   static_cast<int>(path.size()) < max_len) {
            path.push_back(w);
            on_path[w] = 1;
            cycle_dfs(g, root, path, on_path, max_len, out);
            on_path[w] = 0;
            path.pop_back();
        }
    }
}
} // namespace detail

// All simple cycles of length 3..max_len, canonical, sorted by (length, lex).
// The bound keeps the enumeration desk-sized.
inline std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len)
{
    if (max_len > 12)
        throw Error(Errc::MaxLenTooLarge, "max_len " + std::to_string(max_len) + " > 12");
    std::vector<Cycle> out;
    if (max_len < 3)
        return out;
    std::vector<char> on_path(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
        std::vector<int> path{root};
        on_path[root] = 1;
        detail::cycle_dfs(g, root, path, on_path, max_len, out);
        on_path[root] = 0;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

inline std::vector<Cycle> enumerate_cycles(const PlaneGraph& g, int max_len)
{
    return enumerate_cycles(g.graph(), max_len);
}

namespace detail {
inline bool long_path_dfs(const Graph& g, int cur, int target, int depth,
                          int want, std::vector<char>& used, std::uint64_t& steps)
{
    if (++steps > 50'000'000ULL)
        throw Error(Errc::BudgetExceeded, "long-cycle probe");
    for (int w : g.adj[cur]) {
        if (w == target) {
            if (depth + 1 >= want)
                return true;
            continue;
        }
        if (used[w])
            continue;
        used[w] = 1;
        if (long_path_dfs(g, w, target, depth + 1, want, used, steps))
            return true;
        used[w] = 0;
    }
    return false;
}
} // namespace detail

// Does edge uv lie on a cycle of length >= min_len?  (Path search from u to v
// of >= min_len-1 edges; the closing edge uv is excluded automatically since
// endpoints stay distinct until the end.)
inline bool lies_on_long_cycle(const Graph& g, int u, int v, int min_len)
{
    if (!g.has_edge(u, v))
        throw Error(Errc::UnknownEdge,
                    std::to_string(u) + "-" + std::to_string(v));
    if (min_len <= 2)
        return true;
    std::vector<char> used(g.n, 0);
    used[u] = 1;
    std::uint64_t steps = 0;
    return detail::long_path_dfs(g, u, v, 0, min_len - 1, used, steps);
}

} // namespace dpc
