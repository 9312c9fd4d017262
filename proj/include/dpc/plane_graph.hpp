#pragma once

#include "dpc/errors.hpp"
#include "dpc/graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

namespace dpc {

// A face is the closed boundary walk of one orbit of the next-edge rule.
// Not necessarily a cycle: a cut edge appears twice (once per direction), and
// an isolated vertex owns one face with an empty walk.
struct Face {
    int id = -1;
    std::vector<int> walk; // tail vertices of the boundary's directed edges

    int length() const { return static_cast<int>(walk.size()); }
};

// Plane graph as a rotation system: rotations[v] lists the neighbors of v in
// counterclockwise order. Faces are traced with the next-edge rule: after
// directed edge (u,v) continue with (v,w) where w follows u in v's rotation.
struct PlaneGraph {
    std::vector<std::vector<int>> rotations;

    PlaneGraph() = default;

    PlaneGraph(int vertex_count, std::vector<std::vector<int>> rot)
        : rotations(std::move(rot))
    {
        if (vertex_count < 0 || static_cast<int>(rotations.size()) != vertex_count)
            throw Error(Errc::InvalidArgument, "rotation table size != vertex count");
        int n = vertex_count;
        std::vector<std::pair<int, int>> edge_list;
        for (int v = 0; v < n; ++v) {
            std::vector<int> seen = rotations[v];
            std::sort(seen.begin(), seen.end());
            for (int u : rotations[v]) {
                if (u < 0 || u >= n)
                    throw Error(Errc::InvalidVertex,
                                "neighbor " + std::to_string(u) + " of " + std::to_string(v));
                if (u == v)
                    throw Error(Errc::SelfLoop, "at vertex " + std::to_string(v));
                if (v < u)
                    edge_list.emplace_back(v, u);
            }
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                throw Error(Errc::DuplicateNeighbor,
                            "repeated neighbor at vertex " + std::to_string(v));
        }
        g_ = Graph(n, std::move(edge_list));
        for (int v = 0; v < n; ++v)
            for (int u : rotations[v])
                if (!g_.has_edge(u, v) ||
                    std::find(rotations[u].begin(), rotations[u].end(), v) == rotations[u].end())
                    throw Error(Errc::NonSymmetricAdjacency,
                                std::to_string(u) + " missing from rotation of " +
                                    std::to_string(v));
        build_positions();
        trace_all_faces();
        check_euler();
        index_incidences();
    }

    const Graph& graph() const { return g_; }
    int vertex_count() const { return g_.n; }
    int edge_count() const { return g_.edge_count(); }
    int degree(int v) const { return g_.degree(v); }
    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    // Position of neighbor u inside rotations[v].
    int rotation_index(int v, int u) const
    {
        const auto& row = pos_[v];
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(u, -1));
        if (it == row.end() || it->first != u)
            throw Error(Errc::UnknownEdge,
                        std::to_string(u) + "-" + std::to_string(v) + " not an edge");
        return it->second;
    }

    // Neighbor after u in v's rotation.
    int next_in_rotation(int v, int u) const
    {
        int i = rotation_index(v, u);
        const auto& row = rotations[v];
        return row[(i + 1) % row.size()];
    }

    // Neighbor before u in v's rotation.
    int prev_in_rotation(int v, int u) const
    {
        int i = rotation_index(v, u);
        const auto& row = rotations[v];
        return row[(i + row.size() - 1) % row.size()];
    }

    // Face owning directed edge (v, rotations[v][i]).
    int face_at(int v, int i) const { return corner_face_[v][i]; }

    int face_of_directed(int u, int v) const { return corner_face_[u][rotation_index(u, v)]; }

    // The two face slots of undirected edge id e = (u,v), u < v:
    // [0] owns (u->v), [1] owns (v->u). Equal for a cut edge.
    const std::array<int, 2>& edge_faces(int eid) const { return edge_faces_[eid]; }

    // Undirected edge ids along the face walk, one per directed edge.
    const std::vector<int>& face_edge_ids(int f) const { return face_edges_[f]; }

    // Corner faces around v in rotation order: entry i is the face of
    // directed edge (v, rotations[v][i]).
    const std::vector<int>& corner_faces(int v) const { return corner_face_[v]; }

private:
    Graph g_;
    std::vector<Face> faces_;
    std::vector<std::vector<std::pair<int, int>>> pos_; // per v: (neighbor, index) sorted
    std::vector<std::vector<int>> corner_face_;
    std::vector<std::array<int, 2>> edge_faces_;
    std::vector<std::vector<int>> face_edges_;

    void build_positions()
    {
        pos_.assign(g_.n, {});
        for (int v = 0; v < g_.n; ++v) {
            for (int i = 0; i < static_cast<int>(rotations[v].size()); ++i)
                pos_[v].emplace_back(rotations[v][i], i);
            std::sort(pos_[v].begin(), pos_[v].end());
        }
    }

    void trace_all_faces()
    {
        int n = g_.n;
        corner_face_.assign(n, {});
        for (int v = 0; v < n; ++v)
            corner_face_[v].assign(rotations[v].size(), -1);

        std::vector<std::vector<int>> raw_walks;
        std::vector<std::pair<int, int>> keys; // smallest directed edge of each walk
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < static_cast<int>(rotations[v].size()); ++i) {
                if (corner_face_[v][i] != -1)
                    continue;
                std::vector<int> walk;
                int a = v, bi = i;
                do {
                    corner_face_[a][bi] = static_cast<int>(raw_walks.size());
                    walk.push_back(a);
                    int b = rotations[a][bi];
                    int c = next_in_rotation(b, a);
                    a = b;
                    bi = rotation_index(a, c);
                } while (!(a == v && bi == i));
                // rotate the walk to start at its smallest directed edge
                int len = static_cast<int>(walk.size());
                int best = 0;
                for (int j = 1; j < len; ++j) {
                    auto de = std::make_pair(walk[j], walk[(j + 1) % len]);
                    auto bd = std::make_pair(walk[best], walk[(best + 1) % len]);
                    if (de < bd)
                        best = j;
                }
                std::rotate(walk.begin(), walk.begin() + best, walk.end());
                keys.emplace_back(walk[0], walk[1 % len]);
                raw_walks.push_back(std::move(walk));
            }
        }
        // one empty-boundary face per isolated vertex keeps Euler exact
        for (int v = 0; v < n; ++v)
            if (rotations[v].empty()) {
                keys.emplace_back(v, -1);
                raw_walks.push_back({v});
            }

        std::vector<int> order(raw_walks.size());
        for (size_t j = 0; j < order.size(); ++j)
            order[j] = static_cast<int>(j);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return keys[a] < keys[b]; });
        std::vector<int> renumber(raw_walks.size());
        faces_.resize(raw_walks.size());
        for (size_t j = 0; j < order.size(); ++j) {
            renumber[order[j]] = static_cast<int>(j);
            Face f;
            f.id = static_cast<int>(j);
            if (keys[order[j]].second != -1)
                f.walk = std::move(raw_walks[order[j]]);
            faces_[j] = std::move(f);
        }
        for (int v = 0; v < n; ++v)
            for (auto& fid : corner_face_[v])
                fid = renumber[fid];
        // isolated vertices: remember the empty face id
        for (size_t j = 0; j < order.size(); ++j)
            if (keys[order[j]].second == -1)
                isolated_face_[keys[order[j]].first] = static_cast<int>(j);
    }

    std::map<int, int> isolated_face_;

    void check_euler()
    {
        auto comp = component_labels(g_);
        int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
        std::vector<int> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
        for (int v = 0; v < g_.n; ++v)
            ++cv[comp[v]];
        for (auto [a, b] : g_.edges)
            ++ce[comp[a]];
        for (const auto& f : faces_) {
            int home = f.walk.empty() ? comp[isolated_home(f.id)] : comp[f.walk[0]];
            ++cf[home];
        }
        for (int c = 0; c < ncomp; ++c)
            if (cv[c] - ce[c] + cf[c] != 2)
                throw Error(Errc::NonPlanarEmbedding,
                            "component Euler count " +
                                std::to_string(cv[c] - ce[c] + cf[c]) + " != 2");
    }

    int isolated_home(int fid) const
    {
        for (auto [v, f] : isolated_face_)
            if (f == fid)
                return v;
        return 0;
    }

    void index_incidences()
    {
        edge_faces_.assign(g_.edge_count(), {-1, -1});
        for (int e = 0; e < g_.edge_count(); ++e) {
            auto [u, v] = g_.edges[e];
            edge_faces_[e] = {face_of_directed(u, v), face_of_directed(v, u)};
        }
        face_edges_.assign(faces_.size(), {});
        for (const auto& f : faces_) {
            auto& es = face_edges_[f.id];
            int len = f.length();
            for (int j = 0; j < len; ++j)
                es.push_back(g_.edge_id(f.walk[j], f.walk[(j + 1) % len]));
        }
    }
};

inline PlaneGraph build_plane_graph(int vertex_count, std::vector<std::vector<int>> rotations)
{
    return PlaneGraph(vertex_count, std::move(rotations));
}

inline std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

// Faces are adjacent when they share at least one undirected edge.
// A face is never adjacent to itself.
inline bool faces_adjacent(const PlaneGraph& g, int f, int h)
{
    if (f < 0 || f >= g.face_count() || h < 0 || h >= g.face_count())
        throw Error(Errc::InvalidArgument, "face id out of range");
    if (f == h)
        return false;
    for (int e : g.face_edge_ids(f)) {
        auto sides = g.edge_faces(e);
        if (sides[0] == h || sides[1] == h)
            return true;
    }
    return false;
}

// Assembles the rotation system of the embedding whose face walks are given.
// Every directed edge must occur exactly once across all walks; each isolated
// vertex is listed implicitly by leaving it out. Fails through the
// PlaneGraph constructor if the walks are not a valid sphere embedding.
inline PlaneGraph plane_graph_from_faces(int vertex_count,
                                         const std::vector<std::vector<int>>& walks)
{
    // successor[v]: a -> b for each walk fragment (a, v, b)
    std::vector<std::map<int, int>> succ(vertex_count);
    for (const auto& w : walks) {
        int len = static_cast<int>(w.size());
        if (len < 2)
            throw Error(Errc::InvalidArgument, "face walk shorter than 2");
        for (int j = 0; j < len; ++j) {
            int a = w[j], v = w[(j + 1) % len], b = w[(j + 2) % len];
            if (a < 0 || a >= vertex_count || v < 0 || v >= vertex_count)
                throw Error(Errc::InvalidVertex, "walk vertex out of range");
            if (succ[v].count(a))
                throw Error(Errc::InvalidArgument,
                            "directed edge (" + std::to_string(a) + "," + std::to_string(v) +
                                ") on two walks");
            succ[v][a] = b;
        }
    }
    std::vector<std::vector<int>> rot(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        if (succ[v].empty())
            continue;
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            rot[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end())
                throw Error(Errc::InvalidArgument,
                            "walks leave rotation of " + std::to_string(v) + " incomplete");
            cur = it->second;
            if (rot[v].size() > succ[v].size())
                throw Error(Errc::InvalidArgument,
                            "walks split rotation of " + std::to_string(v));
        } while (cur != start);
        if (rot[v].size() != succ[v].size())
            throw Error(Errc::InvalidArgument,
                        "walks split rotation of " + std::to_string(v));
    }
    return PlaneGraph(vertex_count, std::move(rot));
}

} // namespace dpc
