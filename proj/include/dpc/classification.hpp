#pragma once

#include "dpc/errors.hpp"
#include "dpc/graph.hpp"
#include "dpc/plane_graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace dpc {

enum class ThreeClass { NotThree, Weak, SemiWeak, Strong };
enum class Wealth { Rich, SemiRich, Poor };
enum class TenClass { NotTen, Plain, Poor, Bad, Special, SemiSpecial };
enum class SevenClass { NotSeven, Plain, Special, Poor };

inline const char* to_string(ThreeClass c)
{
    switch (c) {
    case ThreeClass::Weak: return "weak";
    case ThreeClass::SemiWeak: return "semi-weak";
    case ThreeClass::Strong: return "strong";
    default: return "-";
    }
}

inline const char* to_string(Wealth w)
{
    switch (w) {
    case Wealth::Rich: return "rich";
    case Wealth::SemiRich: return "semi-rich";
    default: return "poor";
    }
}

inline const char* to_string(TenClass c)
{
    switch (c) {
    case TenClass::Plain: return "plain";
    case TenClass::Poor: return "poor";
    case TenClass::Bad: return "bad";
    case TenClass::Special: return "special";
    case TenClass::SemiSpecial: return "semi-special";
    default: return "-";
    }
}

inline const char* to_string(SevenClass c)
{
    switch (c) {
    case SevenClass::Plain: return "plain";
    case SevenClass::Special: return "special";
    case SevenClass::Poor: return "poor";
    default: return "-";
    }
}

// Degree pattern entry: value plus whether it is exact or a lower bound.
struct DegPat {
    int value;
    bool exact;
};

// Cyclic match of a degree sequence against a pattern, both orientations.
inline bool matches_pattern(const std::vector<int>& degs,
                            const std::vector<DegPat>& pat)
{
    int n = static_cast<int>(degs.size());
    if (n != static_cast<int>(pat.size()))
        return false;
    for (int dir : {1, -1})
        for (int off = 0; off < n; ++off) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int d = degs[((i * dir + off) % n + n) % n];
                ok = pat[i].exact ? (d == pat[i].value) : (d >= pat[i].value);
            }
            if (ok)
                return true;
        }
    return false;
}

inline const std::vector<DegPat>& quad_pattern_33()
{
    static const std::vector<DegPat> p{{3, true}, {3, true}, {3, false}, {4, false}};
    return p;
}

inline const std::vector<DegPat>& quad_pattern_34a()
{
    static const std::vector<DegPat> p{{3, true}, {4, true}, {3, false}, {4, false}};
    return p;
}

inline const std::vector<DegPat>& quad_pattern_34b()
{
    static const std::vector<DegPat> p{{3, true}, {4, true}, {4, false}, {3, false}};
    return p;
}

struct Classification {
    char ruleset = 'A';
    std::vector<ThreeClass> three_class;      // per vertex
    std::vector<std::vector<Wealth>> wealth;  // per face, per boundary position
    std::vector<std::vector<int>> signature;  // per face, boundary degrees
    std::vector<char> regular;                // per face: all boundary degrees equal
    std::vector<TenClass> ten_class;          // per face (ruleset A)
    std::vector<SevenClass> seven_class;      // per face (ruleset B)
    std::vector<char> bad_edge;               // per edge id (ruleset A)
    std::vector<char> bad_vertex;             // per vertex (ruleset A)
    std::vector<int> t_count;                 // per face: distinct bad boundary edges
    std::vector<std::string> flags;
};

namespace detail {

inline int other_face(const PlaneGraph& g, int eid, int f)
{
    const auto& s = g.edge_faces(eid);
    if (s[0] == f && s[1] == f)
        return f;
    return s[0] == f ? s[1] : s[0];
}

// Does this edge control some 4^- face: one side of length >= 7, the other
// of length <= 4.
inline bool edge_controls_small_face(const PlaneGraph& g, int eid)
{
    const auto& s = g.edge_faces(eid);
    int l0 = g.faces()[s[0]].length();
    int l1 = g.faces()[s[1]].length();
    return (l0 >= 7 && l1 <= 4) || (l1 >= 7 && l0 <= 4);
}

// Distinct faces adjacent to f (sharing an edge), excluding f itself.
inline std::vector<int> adjacent_faces(const PlaneGraph& g, int f)
{
    std::set<int> out;
    for (int eid : g.face_edge_ids(f)) {
        int h = other_face(g, eid, f);
        if (h != f)
            out.insert(h);
    }
    return {out.begin(), out.end()};
}

// Shared edge ids between two distinct faces, ascending.
inline std::vector<int> shared_edges(const PlaneGraph& g, int f, int h)
{
    std::set<int> ef;
    for (int eid : g.face_edge_ids(f))
        ef.insert(eid);
    std::set<int> out;
    for (int eid : g.face_edge_ids(h))
        if (ef.count(eid))
            out.insert(eid);
    return {out.begin(), out.end()};
}

} // namespace detail

inline Classification classify(const PlaneGraph& g, char ruleset)
{
    if (ruleset != 'A' && ruleset != 'B' && ruleset != 'C')
        throw Error(Errc::InvalidArgument, "ruleset must be A, B or C");
    if (g.vertex_count() == 0)
        throw Error(Errc::EmptyGraph, "classification of the empty graph");
    if (!is_connected(g.graph()))
        throw Error(Errc::DisconnectedInput, "classification needs a connected graph");

    Classification cls;
    cls.ruleset = ruleset;
    int n = g.vertex_count();
    int nf = g.face_count();

    // 3-vertex classes from corner face lengths
    cls.three_class.assign(n, ThreeClass::NotThree);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 3)
            continue;
        bool has3 = false, has4 = false;
        for (int i = 0; i < 3; ++i) {
            int len = g.faces()[g.face_at(v, i)].length();
            if (len == 3)
                has3 = true;
            if (len == 4)
                has4 = true;
        }
        if (has3 && has4)
            cls.flags.push_back("3-vertex " + std::to_string(v) +
                                " touches both a 3-face and a 4-face; classed weak");
        cls.three_class[v] = has3   ? ThreeClass::Weak
                             : has4 ? ThreeClass::SemiWeak
                                    : ThreeClass::Strong;
    }

    // signatures and per-corner wealth
    cls.signature.resize(nf);
    cls.regular.assign(nf, 1);
    cls.wealth.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const auto& walk = g.faces()[f].walk;
        int len = static_cast<int>(walk.size());
        cls.signature[f].resize(len);
        cls.wealth[f].assign(len, Wealth::Rich);
        auto eids = g.face_edge_ids(f);
        for (int j = 0; j < len; ++j) {
            int v = walk[j];
            cls.signature[f][j] = g.degree(v);
            int e_in = eids[(j - 1 + len) % len]; // edge arriving at v
            int e_out = eids[j];                  // edge leaving v
            int ctrl = (detail::edge_controls_small_face(g, e_in) ? 1 : 0) +
                       (detail::edge_controls_small_face(g, e_out) ? 1 : 0);
            cls.wealth[f][j] = (ctrl == 0)   ? Wealth::Rich
                               : (ctrl == 1) ? Wealth::SemiRich
                                             : Wealth::Poor;
        }
        for (int j = 1; j < len; ++j)
            if (cls.signature[f][j] != cls.signature[f][0])
                cls.regular[f] = 0;
    }

    cls.ten_class.assign(nf, TenClass::NotTen);
    cls.seven_class.assign(nf, SevenClass::NotSeven);
    cls.bad_edge.assign(g.edge_count(), 0);
    cls.bad_vertex.assign(n, 0);
    cls.t_count.assign(nf, 0);

    if (ruleset == 'A') {
        static const std::vector<DegPat> special_sig{
            {3, true}, {3, true}, {3, true}, {3, true}, {3, true},
            {4, true}, {3, true}, {3, true}, {4, true}, {3, true}};
        for (int f = 0; f < nf; ++f) {
            if (g.faces()[f].length() != 10)
                continue;
            int adj3 = 0, adj4 = 0;
            for (int h : detail::adjacent_faces(g, f)) {
                int len = g.faces()[h].length();
                if (len == 3)
                    ++adj3;
                if (len == 4)
                    ++adj4;
            }
            bool all_three = std::all_of(cls.signature[f].begin(),
                                         cls.signature[f].end(),
                                         [](int d) { return d == 3; });
            bool sig_special = matches_pattern(cls.signature[f], special_sig);
            TenClass tc = TenClass::Plain;
            if (all_three && adj3 == 4 && adj4 == 1)
                tc = TenClass::Poor;
            else if (all_three && adj3 == 5)
                tc = TenClass::Bad;
            else if (sig_special && adj3 == 6)
                tc = TenClass::Special;
            else if (sig_special && adj3 == 5 && adj4 == 1)
                tc = TenClass::SemiSpecial;
            cls.ten_class[f] = tc;
        }
        for (int f = 0; f < nf; ++f) {
            if (cls.ten_class[f] != TenClass::Bad)
                continue;
            for (int eid : g.face_edge_ids(f))
                cls.bad_edge[eid] = 1;
            for (int v : g.faces()[f].walk)
                if (g.degree(v) == 3)
                    cls.bad_vertex[v] = 1;
        }
        for (int f = 0; f < nf; ++f) {
            if (g.faces()[f].length() < 10 || cls.ten_class[f] == TenClass::Bad)
                continue;
            std::set<int> seen;
            for (int eid : g.face_edge_ids(f))
                if (cls.bad_edge[eid])
                    seen.insert(eid);
            cls.t_count[f] = static_cast<int>(seen.size());
        }
        for (int f = 0; f < nf; ++f) {
            if (cls.ten_class[f] != TenClass::Bad)
                continue;
            for (int h : detail::adjacent_faces(g, f))
                if (h > f && cls.ten_class[h] == TenClass::Bad)
                    cls.flags.push_back("bad faces " + std::to_string(f) + " and " +
                                        std::to_string(h) + " are adjacent");
        }
    }

    if (ruleset == 'B') {
        for (int f = 0; f < nf; ++f) {
            if (g.faces()[f].length() != 7)
                continue;
            const auto& walk = g.faces()[f].walk;
            int semiweak3 = 0, strong3 = 0, poor4 = 0, other = 0;
            for (int j = 0; j < 7; ++j) {
                int v = walk[j];
                if (cls.three_class[v] == ThreeClass::SemiWeak)
                    ++semiweak3;
                else if (cls.three_class[v] == ThreeClass::Strong)
                    ++strong3;
                else if (g.degree(v) == 4 && cls.wealth[f][j] == Wealth::Poor)
                    ++poor4;
                else
                    ++other;
            }
            SevenClass sc = SevenClass::Plain;
            if (semiweak3 == 6 && poor4 == 1)
                sc = SevenClass::Special;
            else if (semiweak3 == 6 && strong3 == 1)
                sc = SevenClass::Poor;
            cls.seven_class[f] = sc;
        }
    }

    return cls;
}

// Pairs of distinct adjacent faces both of length <= max_len, each pair once
// with the smaller face id first. Cut edges border one face and never
// contribute a pair.
inline std::vector<std::pair<int, int>>
adjacent_small_face_pairs(const PlaneGraph& g, int max_len = 6)
{
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto sides = g.edge_faces(e);
        int f = sides[0], h = sides[1];
        if (f == h)
            continue;
        if (g.faces()[f].length() > max_len || g.faces()[h].length() > max_len)
            continue;
        seen.insert({std::min(f, h), std::max(f, h)});
    }
    return {seen.begin(), seen.end()};
}

} // namespace dpc
