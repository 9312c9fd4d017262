#pragma once

#include "dpc/classification.hpp"
#include "dpc/errors.hpp"
#include "dpc/graph.hpp"
#include "dpc/plane_graph.hpp"
#include "dpc/rational.hpp"
#include "dpc/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace dpc {

struct ChargedElement {
    char kind; // 'v' or 'f'
    int id;

    bool operator==(const ChargedElement& o) const
    {
        return kind == o.kind && id == o.id;
    }
};

inline std::string to_string(const ChargedElement& e)
{
    return std::string(1, e.kind) + std::to_string(e.id);
}

struct Transfer {
    ChargedElement from, to;
    Rational amount;
    std::string rule;
    int via_edge = -1; // edge id when the transfer is routed through one
};

struct ChargeLedger {
    std::vector<Rational> vertex_initial, face_initial;
    std::vector<Rational> vertex_final, face_final;
    std::vector<Transfer> transfers;

    Rational total_initial() const
    {
        Rational s = 0;
        for (const auto& x : vertex_initial)
            s += x;
        for (const auto& x : face_initial)
            s += x;
        return s;
    }

    Rational total_final() const
    {
        Rational s = 0;
        for (const auto& x : vertex_final)
            s += x;
        for (const auto& x : face_final)
            s += x;
        return s;
    }

    Rational& at(const ChargedElement& e)
    {
        return e.kind == 'v' ? vertex_final[e.id] : face_final[e.id];
    }

    void move(ChargedElement from, ChargedElement to, const Rational& amount,
              std::string rule, int via_edge = -1)
    {
        at(from) -= amount;
        at(to) += amount;
        transfers.push_back(Transfer{from, to, amount, std::move(rule), via_edge});
    }
};

// Vertex charge d(v) - 6, face charge 2 d(f) - 6; a connected plane graph
// always totals -12.
inline ChargeLedger initial_charges(const PlaneGraph& g)
{
    if (g.vertex_count() == 0)
        throw Error(Errc::EmptyGraph, "charges of the empty graph");
    if (!is_connected(g.graph()))
        throw Error(Errc::DisconnectedInput, "charging needs a connected graph");
    ChargeLedger led;
    led.vertex_initial.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        led.vertex_initial[v] = Rational(g.degree(v) - 6);
    led.face_initial.resize(g.face_count());
    for (int f = 0; f < g.face_count(); ++f)
        led.face_initial[f] = Rational(2 * g.faces()[f].length() - 6);
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;
    return led;
}

struct DischargeResult {
    Classification cls;
    ChargeLedger ledger;
};

namespace detail {

struct FaceCtx {
    int f;
    int len;
    const std::vector<int>* walk;
    std::vector<int> eids;
};

inline FaceCtx face_ctx(const PlaneGraph& g, int f)
{
    FaceCtx c;
    c.f = f;
    c.len = g.faces()[f].length();
    c.walk = &g.faces()[f].walk;
    c.eids = g.face_edge_ids(f);
    return c;
}

// The two corner faces at vertex v other than the one owning directed edge
// (v, next): for a 3-vertex these are its remaining corners.
inline std::pair<int, int> other_corners3(const PlaneGraph& g, int v, int next)
{
    int i = g.rotation_index(v, next);
    int f1 = g.face_at(v, (i + 1) % 3);
    int f2 = g.face_at(v, (i + 2) % 3);
    return {f1, f2};
}

inline int distinct_small_corner_faces(const PlaneGraph& g, int v)
{
    std::set<int> small;
    for (int f : g.corner_faces(v)) {
        int len = g.faces()[f].length();
        if (len >= 2 && len <= 4)
            small.insert(f);
    }
    return static_cast<int>(small.size());
}

inline void ruleset_a(const PlaneGraph& g, const Classification& cls,
                      ChargeLedger& led, std::vector<std::string>& flags)
{
    int nf = g.face_count();
    // R1: 4-faces pay each incident 3-vertex
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len != 4)
            continue;
        for (int v : *fc.walk)
            if (g.degree(v) == 3)
                led.move({'f', f}, {'v', v}, frac(1, 2), "R1");
    }
    // R2: 6-faces pay every incidence
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len != 6)
            continue;
        for (int v : *fc.walk)
            led.move({'f', f}, {'v', v}, Rational(1), "R2");
    }
    // R3: 7-faces pay semi-rich 3-vertices extra
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len != 7)
            continue;
        for (int j = 0; j < fc.len; ++j) {
            int v = (*fc.walk)[j];
            bool semi3 = g.degree(v) == 3 && cls.wealth[f][j] == Wealth::SemiRich;
            led.move({'f', f}, {'v', v}, semi3 ? frac(3, 2) : Rational(1), "R3");
        }
    }
    // R4, R5: 8- and 9-faces pay flat rates
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len == 8)
            for (int v : *fc.walk)
                led.move({'f', f}, {'v', v}, frac(5, 4), "R4");
        else if (fc.len == 9)
            for (int v : *fc.walk)
                led.move({'f', f}, {'v', v}, frac(4, 3), "R5");
    }
    // R6-R8: 10+ faces pay 3-, 4- and 5-vertices
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len < 10)
            continue;
        for (int j = 0; j < fc.len; ++j) {
            int v = (*fc.walk)[j];
            int next = (*fc.walk)[(j + 1) % fc.len];
            int d = g.degree(v);
            if (d == 3) {
                auto [c1, c2] = other_corners3(g, v, next);
                int l1 = g.faces()[c1].length();
                int l2 = g.faces()[c2].length();
                if (l1 >= 5 && l2 >= 5) {
                    led.move({'f', f}, {'v', v}, Rational(1), "R6a");
                } else if (l1 == 4 || l2 == 4) {
                    led.move({'f', f}, {'v', v}, frac(5, 4), "R6b");
                } else {
                    // A bad vertex settles its two long corners at once: the
                    // bad face owes 4/3 and the face across the triangle owes
                    // 5/3 in place of the usual 3/2. Each face pays its own
                    // share when its loop reaches the vertex; with adjacent
                    // bad faces (already flagged) both shares apply.
                    bool paid = false;
                    if (cls.ten_class[f] == TenClass::Bad &&
                        ((l1 == 3 && cls.ten_class[c2] != TenClass::Special) ||
                         (l2 == 3 && cls.ten_class[c1] != TenClass::Special))) {
                        led.move({'f', f}, {'v', v}, frac(4, 3), "R6c");
                        paid = true;
                    }
                    if (cls.ten_class[f] != TenClass::Special &&
                        ((l1 == 3 && cls.ten_class[c2] == TenClass::Bad) ||
                         (l2 == 3 && cls.ten_class[c1] == TenClass::Bad))) {
                        led.move({'f', f}, {'v', v}, frac(5, 3), "R6c");
                        paid = true;
                    }
                    if (!paid)
                        led.move({'f', f}, {'v', v}, frac(3, 2), "R6d");
                }
            } else if (d == 4) {
                Wealth w = cls.wealth[f][j];
                led.move({'f', f}, {'v', v},
                         (w == Wealth::SemiRich) ? frac(1, 2) : Rational(1),
                         (w == Wealth::SemiRich) ? "R7b" : "R7a");
            } else if (d == 5) {
                int small = distinct_small_corner_faces(g, v);
                if (small >= 2)
                    led.move({'f', f}, {'v', v}, frac(1, 3), "R8a");
                else if (small == 1)
                    led.move({'f', f}, {'v', v}, frac(1, 4), "R8b");
                else
                    led.move({'f', f}, {'v', v}, frac(1, 5), "R8c");
            }
        }
    }
    // R9: (3,3,3+,4+)-faces support adjacent poor faces
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len != 4 || !matches_pattern(cls.signature[f], quad_pattern_33()))
            continue;
        for (int h : adjacent_faces(g, f)) {
            if (cls.ten_class[h] != TenClass::Poor)
                continue;
            auto se = shared_edges(g, f, h);
            if (se.size() > 1)
                flags.push_back("faces " + std::to_string(f) + " and " +
                                std::to_string(h) +
                                " share several edges; one R9 transfer");
            led.move({'f', f}, {'f', h}, frac(1, 2), "R9", se.front());
        }
    }
    // R10: (3,4,3+,4+)- and (3,4,4+,3+)-faces support semi-special faces
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len != 4)
            continue;
        if (!matches_pattern(cls.signature[f], quad_pattern_34a()) &&
            !matches_pattern(cls.signature[f], quad_pattern_34b()))
            continue;
        for (int h : adjacent_faces(g, f)) {
            if (cls.ten_class[h] != TenClass::SemiSpecial)
                continue;
            auto se = shared_edges(g, f, h);
            if (se.size() > 1)
                flags.push_back("faces " + std::to_string(f) + " and " +
                                std::to_string(h) +
                                " share several edges; one R10 transfer");
            led.move({'f', f}, {'f', h}, frac(1, 4), "R10", se.front());
        }
    }
}

inline void ruleset_b(const PlaneGraph& g, const Classification& cls,
                      ChargeLedger& led, std::vector<std::string>& flags)
{
    int nf = g.face_count();
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len != 4)
            continue;
        for (int v : *fc.walk)
            if (g.degree(v) == 3)
                led.move({'f', f}, {'v', v}, frac(1, 2), "R1");
    }
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len < 7)
            continue;
        for (int j = 0; j < fc.len; ++j) {
            int v = (*fc.walk)[j];
            int d = g.degree(v);
            if (d == 3) {
                switch (cls.three_class[v]) {
                case ThreeClass::Weak:
                    led.move({'f', f}, {'v', v}, frac(3, 2), "R2");
                    break;
                case ThreeClass::SemiWeak:
                    led.move({'f', f}, {'v', v}, frac(5, 4), "R2");
                    break;
                default:
                    led.move({'f', f}, {'v', v}, Rational(1), "R2");
                }
            } else if (d == 4) {
                Wealth w = cls.wealth[f][j];
                Rational amt = (w == Wealth::Poor)       ? Rational(1)
                               : (w == Wealth::SemiRich) ? frac(3, 4)
                                                         : frac(1, 2);
                led.move({'f', f}, {'v', v}, amt, "R3");
            } else if (d == 5) {
                led.move({'f', f}, {'v', v}, frac(1, 3), "R4");
            }
        }
    }
    // R5: (3,3,3+,4+)-faces support adjacent poor and special 7-faces
    // through an edge with both ends of degree 3
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len != 4 || !matches_pattern(cls.signature[f], quad_pattern_33()))
            continue;
        for (int h : adjacent_faces(g, f)) {
            if (cls.seven_class[h] != SevenClass::Poor &&
                cls.seven_class[h] != SevenClass::Special)
                continue;
            std::vector<int> qualify;
            for (int eid : shared_edges(g, f, h)) {
                auto [a, b] = g.graph().edges[eid];
                if (g.degree(a) == 3 && g.degree(b) == 3)
                    qualify.push_back(eid);
            }
            if (qualify.empty())
                continue;
            if (qualify.size() > 1)
                flags.push_back("faces " + std::to_string(f) + " and " +
                                std::to_string(h) +
                                " share several (3,3)-edges; one R5 transfer");
            led.move({'f', f}, {'f', h}, frac(1, 4), "R5", qualify.front());
        }
    }
    // R6: (3,4,...)-faces support adjacent special 7-faces through a
    // (3,4)-edge
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len != 4)
            continue;
        if (!matches_pattern(cls.signature[f], quad_pattern_34a()) &&
            !matches_pattern(cls.signature[f], quad_pattern_34b()))
            continue;
        for (int h : adjacent_faces(g, f)) {
            if (cls.seven_class[h] != SevenClass::Special)
                continue;
            std::vector<int> qualify;
            for (int eid : shared_edges(g, f, h)) {
                auto [a, b] = g.graph().edges[eid];
                int da = g.degree(a), db = g.degree(b);
                if ((da == 3 && db == 4) || (da == 4 && db == 3))
                    qualify.push_back(eid);
            }
            if (qualify.empty())
                continue;
            if (qualify.size() > 1)
                flags.push_back("faces " + std::to_string(f) + " and " +
                                std::to_string(h) +
                                " share several (3,4)-edges; one R6 transfer");
            led.move({'f', f}, {'f', h}, frac(1, 4), "R6", qualify.front());
        }
    }
}

inline void ruleset_c(const PlaneGraph& g, const Classification& cls,
                      ChargeLedger& led, std::vector<std::string>&)
{
    int nf = g.face_count();
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len < 6)
            continue;
        for (int j = 0; j < fc.len; ++j) {
            int v = (*fc.walk)[j];
            int d = g.degree(v);
            if (d == 3 && cls.three_class[v] == ThreeClass::Strong)
                led.move({'f', f}, {'v', v}, Rational(1), "R1");
            else if (d == 4 && cls.wealth[f][j] == Wealth::Rich)
                led.move({'f', f}, {'v', v}, frac(1, 2), "R1");
            else if (d == 5)
                led.move({'f', f}, {'v', v}, frac(1, 4), "R1");
        }
    }
    for (int f = 0; f < nf; ++f) {
        auto fc = face_ctx(g, f);
        if (fc.len < 8)
            continue;
        for (int j = 0; j < fc.len; ++j) {
            int v = (*fc.walk)[j];
            int d = g.degree(v);
            if (d == 3 && cls.three_class[v] == ThreeClass::Weak)
                led.move({'f', f}, {'v', v}, frac(3, 2), "R2");
            else if (d == 4 && cls.wealth[f][j] == Wealth::SemiRich)
                led.move({'f', f}, {'v', v}, frac(3, 4), "R2");
        }
    }
}

} // namespace detail

inline DischargeResult apply_rules(const PlaneGraph& g, char ruleset)
{
    DischargeResult r{classify(g, ruleset), initial_charges(g)};
    if (ruleset == 'A')
        detail::ruleset_a(g, r.cls, r.ledger, r.cls.flags);
    else if (ruleset == 'B')
        detail::ruleset_b(g, r.cls, r.ledger, r.cls.flags);
    else
        detail::ruleset_c(g, r.cls, r.ledger, r.cls.flags);
    return r;
}

// Elements still negative after discharging, most negative first.
inline std::vector<std::pair<ChargedElement, Rational>>
negative_elements(const ChargeLedger& led)
{
    std::vector<std::pair<ChargedElement, Rational>> out;
    for (int v = 0; v < static_cast<int>(led.vertex_final.size()); ++v)
        if (led.vertex_final[v] < 0)
            out.push_back({{'v', v}, led.vertex_final[v]});
    for (int f = 0; f < static_cast<int>(led.face_final.size()); ++f)
        if (led.face_final[f] < 0)
            out.push_back({{'f', f}, led.face_final[f]});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second < b.second;
        if (a.first.kind != b.first.kind)
            return a.first.kind == 'v';
        return a.first.id < b.first.id;
    });
    return out;
}

struct AuditReport {
    char theorem = 'A';
    HypothesisReport hypotheses;
    int min_deg = 0;
    std::vector<Block> violating_blocks;
    int degeneracy = 0;
    std::vector<int> degeneracy_order;
    // Adjacent pairs of 6^- faces. Under hypotheses A this list must be
    // empty; elsewhere it is reported, never an error.
    std::vector<std::pair<int, int>> small_face_pairs;
    DischargeResult discharge;
    std::vector<std::pair<ChargedElement, Rational>> negatives;
};

inline AuditReport audit(const PlaneGraph& g, char theorem)
{
    if (theorem != 'A' && theorem != 'B' && theorem != 'C')
        throw Error(Errc::InvalidArgument, "theorem must be A, B or C");
    if (g.vertex_count() == 0)
        throw Error(Errc::EmptyGraph, "audit of the empty graph");
    if (!is_connected(g.graph()))
        throw Error(Errc::DisconnectedInput, "audit needs a connected graph");
    AuditReport rep;
    rep.theorem = theorem;
    rep.hypotheses = check_hypotheses(g.graph(), theorem);
    rep.min_deg = min_degree(g.graph());
    rep.violating_blocks = audit_blocks(g.graph(), 3);
    auto [deg, order] = degeneracy_ordering(g.graph());
    rep.degeneracy = deg;
    rep.degeneracy_order = std::move(order);
    rep.small_face_pairs = adjacent_small_face_pairs(g);
    rep.discharge = apply_rules(g, theorem);
    rep.negatives = negative_elements(rep.discharge.ledger);
    return rep;
}

inline std::string render_audit(const AuditReport& rep)
{
    std::ostringstream os;
    const auto& hyp = rep.hypotheses;
    os << "HYPOTHESES\n";
    os << "  theorem " << rep.theorem << ": ";
    if (rep.theorem == 'A')
        os << "no two triangles share an edge; no cycles of length 5, 6, 9\n";
    else if (rep.theorem == 'B')
        os << "triangles at distance >= 2; no cycles of length 5, 6, 8\n";
    else
        os << "triangles at distance >= 2; no cycles of length 4, 5, 7\n";
    os << "  forbidden cycles found: " << hyp.forbidden_cycles.size() << "\n";
    for (const auto& c : hyp.forbidden_cycles) {
        os << "    length " << c.length() << ":";
        for (int v : c.vertices)
            os << " " << v;
        os << "\n";
    }
    os << "  triangle conflicts: " << hyp.close_triangles.size() << "\n";
    os << "  status: " << (hyp.satisfied ? "satisfied" : "violated") << "\n";
    os << "FACES\n";
    os << "  adjacent 6- face pairs: " << rep.small_face_pairs.size() << "\n";
    for (auto [f, h] : rep.small_face_pairs)
        os << "    f" << f << " | f" << h << "\n";
    os << "MIN-DEGREE\n";
    os << "  delta = " << rep.min_deg << " (>= 3: " << (rep.min_deg >= 3 ? "yes" : "no")
       << ")\n";
    if (rep.theorem == 'C') {
        os << "  degeneracy = " << rep.degeneracy << " (<= 2: "
           << (rep.degeneracy <= 2 ? "yes" : "no") << ")\n";
    }
    os << "BLOCKS\n";
    os << "  degree-3 blocks outside {cycle, complete}: " << rep.violating_blocks.size()
       << "\n";
    for (const auto& b : rep.violating_blocks) {
        os << "   ";
        for (int v : b.vertices)
            os << " " << v;
        os << "\n";
    }
    const auto& led = rep.discharge.ledger;
    os << "CHARGES\n";
    os << "  initial total = " << to_string(led.total_initial()) << "\n";
    os << "  final total = " << to_string(led.total_final()) << "\n";
    os << "  transfers = " << led.transfers.size() << "\n";
    os << "  negative after discharge: " << rep.negatives.size() << "\n";
    for (const auto& [el, q] : rep.negatives)
        os << "    " << to_string(el) << " = " << to_string(q) << "\n";
    for (const auto& fl : rep.discharge.cls.flags)
        os << "  note: " << fl << "\n";
    return os.str();
}

} // namespace dpc
