#pragma once

#include "dpc/cover.hpp"
#include "dpc/errors.hpp"
#include "dpc/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dpc {

struct NamedGraph {
    std::string name;
    PlaneGraph pg;
};

// ---- elementary makers ----------------------------------------------------

inline PlaneGraph make_single_vertex()
{
    return PlaneGraph(1, {{}});
}

inline PlaneGraph make_single_edge()
{
    return PlaneGraph(2, {{1}, {0}});
}

inline PlaneGraph make_path(int n)
{
    if (n < 2)
        throw Error(Errc::InvalidArgument, "path needs >= 2 vertices");
    std::vector<std::vector<int>> rot(n);
    rot[0] = {1};
    rot[n - 1] = {n - 2};
    for (int v = 1; v + 1 < n; ++v)
        rot[v] = {v - 1, v + 1};
    return PlaneGraph(n, std::move(rot));
}

inline PlaneGraph make_cycle(int n)
{
    if (n < 3)
        throw Error(Errc::InvalidArgument, "cycle needs >= 3 vertices");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v)
        rot[v] = {(v + n - 1) % n, (v + 1) % n};
    return PlaneGraph(n, std::move(rot));
}

inline PlaneGraph make_star(int leaves)
{
    if (leaves < 1)
        throw Error(Errc::InvalidArgument, "star needs >= 1 leaf");
    std::vector<std::vector<int>> rot(leaves + 1);
    for (int i = 1; i <= leaves; ++i) {
        rot[0].push_back(i);
        rot[i] = {0};
    }
    return PlaneGraph(leaves + 1, std::move(rot));
}

inline PlaneGraph make_k4()
{
    return PlaneGraph(4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}});
}

inline PlaneGraph make_q3()
{
    return PlaneGraph(8, {{1, 4, 3},
                          {2, 5, 0},
                          {3, 6, 1},
                          {0, 7, 2},
                          {5, 7, 0},
                          {6, 4, 1},
                          {2, 7, 5},
                          {6, 3, 4}});
}

inline PlaneGraph make_bowtie()
{
    return PlaneGraph(5, {{1, 4, 3, 2}, {0, 2}, {1, 0}, {0, 4}, {3, 0}});
}

inline PlaneGraph make_wheel(int rim)
{
    if (rim < 3)
        throw Error(Errc::InvalidArgument, "wheel needs a rim of >= 3");
    std::vector<std::vector<int>> walks;
    for (int i = 0; i < rim; ++i)
        walks.push_back({(i + 1) % rim, i, rim});
    std::vector<int> outer(rim);
    for (int i = 0; i < rim; ++i)
        outer[i] = i;
    walks.push_back(outer);
    return plane_graph_from_faces(rim + 1, walks);
}

// Two triangles whose nearest corners are joined by a path with d edges.
inline PlaneGraph two_triangles_path(int d)
{
    if (d < 1)
        throw Error(Errc::InvalidArgument, "connecting path needs >= 1 edge");
    int n = d + 5;
    std::vector<std::vector<int>> rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1, 3};
    for (int v = 3; v < 2 + d; ++v)
        rot[v] = {v - 1, v + 1};
    int a = 2 + d, b = 3 + d, c = 4 + d;
    rot[a] = {a - 1, b, c};
    rot[b] = {c, a};
    rot[c] = {a, b};
    return PlaneGraph(n, std::move(rot));
}

// ---- modifiers -------------------------------------------------------------

// Attach a fresh leaf to v (appended at the end of v's rotation).
// Hang a new leaf off v, placed in the largest face incident to v (first
// such corner wins on ties).
inline PlaneGraph add_pendant(const PlaneGraph& g, int v)
{
    check_vertex(g.graph(), v);
    int n = g.vertex_count();
    int deg = g.graph().degree(v);
    PlaneGraph best;
    int best_len = -1;
    for (int i = 0; i < std::max(deg, 1); ++i) {
        auto rot = g.rotations;
        rot[v].insert(rot[v].begin() + i, n);
        rot.push_back({v});
        PlaneGraph cand(n + 1, std::move(rot));
        int f = cand.corner_faces(n)[0];
        int len = cand.faces()[f].length();
        if (len > best_len) {
            best_len = len;
            best = std::move(cand);
        }
    }
    return best;
}

// Replace every edge by a length-2 path; vertex n + e subdivides edge e.
inline PlaneGraph subdivide_all_edges(const PlaneGraph& g)
{
    const Graph& gr = g.graph();
    int n = gr.n, m = gr.edge_count();
    std::vector<std::vector<int>> rot(n + m);
    for (int v = 0; v < n; ++v)
        for (int u : g.rotations[v])
            rot[v].push_back(n + gr.edge_id(v, u));
    for (int e = 0; e < m; ++e)
        rot[n + e] = {gr.edges[e].first, gr.edges[e].second};
    return PlaneGraph(n + m, std::move(rot));
}

// ---- straight-line constructions -------------------------------------------

namespace detail {

// Collects vertices with integer plane coordinates and edges between them,
// then reads the rotation system off the drawing (neighbors sorted by angle).
struct GeoBuilder {
    std::map<std::pair<long, long>, int> ids;
    std::vector<std::pair<long, long>> pos;
    std::set<std::pair<int, int>> edge_set;

    int vertex(long x, long y)
    {
        auto [it, fresh] = ids.try_emplace({x, y}, static_cast<int>(pos.size()));
        if (fresh)
            pos.push_back({x, y});
        return it->second;
    }

    void edge(int u, int v)
    {
        edge_set.insert({std::min(u, v), std::max(u, v)});
    }

    PlaneGraph build() const
    {
        int n = static_cast<int>(pos.size());
        std::vector<std::vector<int>> rot(n);
        for (auto [u, v] : edge_set) {
            rot[u].push_back(v);
            rot[v].push_back(u);
        }
        for (int v = 0; v < n; ++v) {
            auto angle_less = [&](int a, int b) {
                long ax = pos[a].first - pos[v].first;
                long ay = pos[a].second - pos[v].second;
                long bx = pos[b].first - pos[v].first;
                long by = pos[b].second - pos[v].second;
                int ha = (ay < 0 || (ay == 0 && ax < 0)) ? 1 : 0;
                int hb = (by < 0 || (by == 0 && bx < 0)) ? 1 : 0;
                if (ha != hb)
                    return ha < hb;
                return ax * by - ay * bx > 0;
            };
            std::sort(rot[v].begin(), rot[v].end(), angle_less);
        }
        return PlaneGraph(n, std::move(rot));
    }
};

} // namespace detail

inline PlaneGraph make_grid(int rows, int cols)
{
    if (rows < 1 || cols < 1 || (rows == 1 && cols == 1))
        throw Error(Errc::InvalidArgument, "grid needs >= 2 vertices");
    detail::GeoBuilder geo;
    auto id = [&](int i, int j) { return geo.vertex(j, -i); };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols)
                geo.edge(id(i, j), id(i, j + 1));
            if (i + 1 < rows)
                geo.edge(id(i, j), id(i + 1, j));
        }
    return geo.build();
}

// Remove `deletions` grid edges at random, keeping the graph connected.
inline PlaneGraph grid_with_deletions(int rows, int cols, int deletions,
                                      std::uint64_t seed)
{
    detail::GeoBuilder geo;
    auto id = [&](int i, int j) { return geo.vertex(j, -i); };
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols)
                all.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < rows)
                all.push_back({id(i, j), id(i + 1, j)});
        }
    detail::SplitMix64 rng(seed);
    for (std::size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[rng.below(i)]);

    int n = rows * cols;
    std::vector<std::pair<int, int>> kept(all.begin(), all.end());
    auto connected_without = [&](std::size_t skip) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i < kept.size(); ++i)
            if (i != skip)
                es.push_back(kept[i]);
        return is_connected(Graph(n, es));
    };
    int removed = 0;
    for (std::size_t i = 0; i < kept.size() && removed < deletions;) {
        if (connected_without(i)) {
            kept.erase(kept.begin() + static_cast<long>(i));
            ++removed;
        } else {
            ++i;
        }
    }
    for (auto [u, v] : kept)
        geo.edge(u, v);
    return geo.build();
}

// Patch of unit hexagons given by axial cells (q, r); pointy-top layout with
// integer corner coordinates shared exactly between neighboring cells.
inline PlaneGraph hex_patch(const std::vector<std::pair<int, int>>& cells)
{
    if (cells.empty())
        throw Error(Errc::InvalidArgument, "hex patch needs >= 1 cell");
    detail::GeoBuilder geo;
    static const int dx[6] = {0, 1, 1, 0, -1, -1};
    static const int dy[6] = {-2, -1, 1, 2, 1, -1};
    for (auto [q, r] : cells) {
        long cx = 2L * q + r, cy = 3L * r;
        int corner[6];
        for (int k = 0; k < 6; ++k)
            corner[k] = geo.vertex(cx + dx[k], -(cy + dy[k]));
        for (int k = 0; k < 6; ++k)
            geo.edge(corner[k], corner[(k + 1) % 6]);
    }
    return geo.build();
}

inline PlaneGraph hex_preset(int cells)
{
    using P = std::pair<int, int>;
    std::vector<P> flower{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    switch (cells) {
    case 1: return hex_patch({{0, 0}});
    case 2: return hex_patch({{0, 0}, {1, 0}});
    case 3: return hex_patch({{0, 0}, {1, 0}, {0, 1}});
    case 4: return hex_patch({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    case 7: return hex_patch(flower);
    case 8: flower.push_back({2, 0}); return hex_patch(flower);
    default:
        throw Error(Errc::InvalidArgument, "no hex preset with " +
                                               std::to_string(cells) + " cells");
    }
}

// Random triangulation of a convex polygon: vertices on the parabola
// (i, i^2), triangulated by recursive random splitting.
inline PlaneGraph random_triangulation(int n, std::uint64_t seed)
{
    if (n < 3)
        throw Error(Errc::InvalidArgument, "triangulation needs >= 3 vertices");
    detail::GeoBuilder geo;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i)
        id[i] = geo.vertex(i, static_cast<long>(i) * i);
    for (int i = 0; i + 1 < n; ++i)
        geo.edge(id[i], id[i + 1]);
    geo.edge(id[0], id[n - 1]);

    detail::SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        if (hi - lo < 2)
            continue;
        int m = lo + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo - 1)));
        if (m > lo + 1)
            geo.edge(id[lo], id[m]);
        if (hi > m + 1)
            geo.edge(id[m], id[hi]);
        stack.push_back({lo, m});
        stack.push_back({m, hi});
    }
    return geo.build();
}

// ---- discharging gadget fixtures -------------------------------------------

// 10-face with ten 3-vertices, four surrounding triangles and one 4-face.
inline PlaneGraph gadget_poor10()
{
    return plane_graph_from_faces(
        16, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
             {2, 1, 10},
             {4, 3, 11},
             {6, 5, 12},
             {8, 7, 13},
             {0, 9, 14, 15},
             {1, 0, 15, 14, 9, 8, 13, 7, 6, 12, 5, 4, 11, 3, 2, 10}});
}

// 10-face with ten 3-vertices and five surrounding triangles; its two long
// neighbor faces are 10-faces with the special degree signature.
inline PlaneGraph gadget_bad10()
{
    return plane_graph_from_faces(
        35,
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
         {1, 0, 10},
         {3, 2, 11},
         {5, 4, 12},
         {7, 6, 13},
         {9, 8, 14},
         {11, 2, 1, 10, 20, 19, 18, 17, 16, 15},
         {20, 10, 21},
         {11, 15, 22},
         {16, 17, 23},
         {18, 19, 24},
         {13, 6, 5, 12, 30, 29, 28, 27, 26, 25},
         {30, 12, 31},
         {13, 25, 32},
         {26, 27, 33},
         {28, 29, 34},
         {0, 9, 14, 8, 7, 13, 32, 25, 26, 33, 27, 28, 34, 29, 30, 31,
          12, 4, 3, 11, 22, 15, 16, 23, 17, 18, 24, 19, 20, 21, 10}});
}

// (3,3,3,3,3,4,3,3,4,3)-face adjacent to six triangles.
inline PlaneGraph gadget_special10()
{
    return plane_graph_from_faces(
        16, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
             {1, 0, 10},
             {2, 1, 11},
             {4, 3, 12},
             {6, 5, 13},
             {8, 7, 14},
             {9, 8, 15},
             {0, 9, 15, 8, 14, 7, 6, 13, 5, 4, 12, 3, 2, 11, 1, 10}});
}

// Same signature as the special 10-face but five triangles plus one 4-face.
inline PlaneGraph gadget_semispecial10()
{
    return plane_graph_from_faces(
        17, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
             {1, 0, 10},
             {4, 3, 11},
             {6, 5, 12},
             {8, 7, 13},
             {9, 8, 14},
             {2, 1, 15, 16},
             {0, 9, 14, 8, 13, 7, 6, 12, 5, 4, 11, 3, 2, 16, 15, 1, 10}});
}

// 7-face with six semi-weak 3-vertices and one poor 4-vertex, ringed by four
// 4-faces whose outer corners carry pendant edges to pin their degrees.
inline PlaneGraph gadget_special7()
{
    PlaneGraph base = plane_graph_from_faces(
        15, {{0, 1, 2, 3, 4, 5, 6},
             {1, 0, 7, 8},
             {3, 2, 9, 10},
             {5, 4, 11, 12},
             {0, 6, 13, 14},
             {2, 1, 8, 7, 0, 14, 13, 6, 5, 12, 11, 4, 3, 10, 9}});
    for (int v : {7, 9, 11, 13})
        base = add_pendant(base, v);
    for (int v : {8, 10, 12, 14}) {
        base = add_pendant(base, v);
        base = add_pendant(base, v);
    }
    return base;
}

// 7-face with six semi-weak 3-vertices and one strong 3-vertex, ringed by
// three 4-faces.
inline PlaneGraph gadget_poor7()
{
    PlaneGraph base = plane_graph_from_faces(
        13, {{0, 1, 2, 3, 4, 5, 6},
             {1, 0, 7, 8},
             {3, 2, 9, 10},
             {5, 4, 11, 12},
             {2, 1, 8, 7, 0, 6, 5, 12, 11, 4, 3, 10, 9}});
    for (int v : {6, 7, 9, 11})
        base = add_pendant(base, v);
    for (int v : {8, 10, 12}) {
        base = add_pendant(base, v);
        base = add_pendant(base, v);
    }
    return base;
}

// 5-vertex whose five corners are two triangles and three 10^+-faces.
inline PlaneGraph gadget_five_vertex()
{
    return plane_graph_from_faces(
        22, {{0, 1, 2},
             {0, 3, 4},
             {0, 2, 6, 7, 8, 9, 10, 11, 12, 13, 3},
             {0, 4, 14, 15, 16, 17, 18, 19, 20, 21, 5},
             {0, 5, 21, 20, 19, 18, 17, 16, 15, 14, 4, 3,
              13, 12, 11, 10, 9, 8, 7, 6, 2, 1}});
}

// 8-ring v_1..v_8 = 0..7 with one 4-vertex (v_1), two controlled triangles
// (apexes 8 and 10) and pendants 9, 11 giving each apex an outside neighbor.
inline PlaneGraph gadget_reducible_ring()
{
    return plane_graph_from_faces(
        12, {{0, 1, 2, 3, 4, 5, 6, 7},
             {0, 7, 8},
             {1, 0, 10},
             {1, 10, 11, 10, 0, 8, 9, 8, 7, 6, 5, 4, 3, 2}});
}

// Variant where the closing apex keeps degree 3 but its third edge is a
// chord back to the ring, trapping it inside the configuration.
inline PlaneGraph gadget_reducible_ring_trapped()
{
    return plane_graph_from_faces(
        11, {{0, 1, 2, 3, 4, 5, 6, 7},
             {0, 7, 8},
             {1, 0, 9},
             {8, 7, 6, 5, 4},
             {1, 9, 10, 9, 0, 8, 4, 3, 2}});
}

// ---- the fixture corpus ----------------------------------------------------

inline PlaneGraph make_caterpillar()
{
    return PlaneGraph(7, {{1}, {0, 4, 2}, {1, 5, 6, 3}, {2}, {1}, {2}, {2}});
}

inline std::vector<NamedGraph> builtin_corpus()
{
    std::vector<NamedGraph> out;
    auto add = [&](std::string name, PlaneGraph pg) {
        out.push_back({std::move(name), std::move(pg)});
    };

    add("k1", make_single_vertex());
    add("single-edge", make_single_edge());
    add("path-4", make_path(4));
    add("path-7", make_path(7));
    add("star-5", make_star(5));
    add("caterpillar", make_caterpillar());
    for (int n = 3; n <= 12; ++n)
        add("cycle-" + std::to_string(n), make_cycle(n));
    add("k4", make_k4());
    add("q3", make_q3());
    add("bowtie", make_bowtie());
    add("wheel-5", make_wheel(5));
    add("wheel-6", make_wheel(6));
    for (int d = 1; d <= 3; ++d)
        add("two-triangles-" + std::to_string(d), two_triangles_path(d));
    add("pentagon-pair",
        plane_graph_from_faces(8, {{0, 1, 2, 3, 4},
                                   {1, 0, 5, 6, 7},
                                   {2, 1, 7, 6, 5, 0, 4, 3}}));
    add("pentagon-triple",
        plane_graph_from_faces(11, {{0, 1, 2, 3, 4},
                                    {1, 0, 5, 6, 7},
                                    {3, 2, 8, 9, 10},
                                    {2, 1, 7, 6, 5, 0, 4, 3, 10, 9, 8}}));
    add("poor10", gadget_poor10());
    add("bad10", gadget_bad10());
    add("special10", gadget_special10());
    add("semispecial10", gadget_semispecial10());
    add("special7", gadget_special7());
    add("poor7", gadget_poor7());
    add("five-vertex", gadget_five_vertex());
    add("reducible-ring", gadget_reducible_ring());
    add("reducible-ring-deg4", add_pendant(gadget_reducible_ring(), 10));
    add("reducible-ring-trapped", gadget_reducible_ring_trapped());
    add("grid-2x3", make_grid(2, 3));
    add("grid-3x3", make_grid(3, 3));
    add("grid-3x4", make_grid(3, 4));
    add("grid-4x4", make_grid(4, 4));
    add("sub-k4", subdivide_all_edges(make_k4()));
    add("sub-grid-2x3", subdivide_all_edges(make_grid(2, 3)));
    add("sub-grid-3x3", subdivide_all_edges(make_grid(3, 3)));
    for (int h : {1, 2, 3, 4, 7, 8})
        add("hex-" + std::to_string(h), hex_preset(h));
    add("tri-6-s1", random_triangulation(6, 1));
    add("tri-9-s2", random_triangulation(9, 2));
    add("tri-12-s3", random_triangulation(12, 3));
    add("sub-tri-8-s4", subdivide_all_edges(random_triangulation(8, 4)));
    add("grid-del-4x4-s5", grid_with_deletions(4, 4, 5, 5));
    add("grid-del-5x5-s7", grid_with_deletions(5, 5, 7, 7));
    return out;
}

} // namespace dpc
