// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion carries its wall-clock limit; charge comparisons
// are exact rational equality throughout.

#include "dpc/corpus.hpp"
#include "dpc/cycles.hpp"
#include "dpc/discharge.hpp"
#include "dpc/greedy_extension.hpp"
#include "dpc/solver.hpp"
#include "dpc/structure.hpp"

#include "oracles.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dpc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail; // first failure, or a summary when ok
};

void fail(Outcome& o, const std::string& why)
{
    if (o.ok) {
        o.ok = false;
        o.detail = why;
    }
}

// Outgoing (or incoming) transfer amounts of face f, as amount -> count.
std::map<Rational, int> face_transfers(const DischargeResult& r, int f, bool out)
{
    std::map<Rational, int> m;
    ChargedElement face{'f', f};
    for (const auto& t : r.ledger.transfers)
        if ((out ? t.from : t.to) == face)
            ++m[t.amount];
    return m;
}

int unique_face(Outcome& o, const std::vector<TenClass>& cls, TenClass want,
                const std::string& what)
{
    int found = -1;
    for (int f = 0; f < static_cast<int>(cls.size()); ++f)
        if (cls[f] == want) {
            if (found >= 0)
                fail(o, "more than one " + what);
            found = f;
        }
    if (found < 0)
        fail(o, "no " + what);
    return found < 0 ? 0 : found;
}

Outcome criterion_1()
{
    Outcome o;
    std::vector<std::pair<std::string, PlaneGraph>> pool;
    for (const auto& ng : builtin_corpus())
        pool.emplace_back(ng.name, ng.pg);
    for (int i = 0; i < 10; ++i)
        pool.emplace_back("random-tri-" + std::to_string(6 + i),
                          random_triangulation(6 + i, 101 + i));
    int checked = 0;
    for (const auto& [name, pg] : pool) {
        if (!is_connected(pg.graph())) {
            fail(o, name + " is not connected");
            continue;
        }
        if (initial_charges(pg).total_initial() != Rational(-12))
            fail(o, name + " has initial total != -12");
        ++checked;
    }
    if (checked < 50)
        fail(o, "corpus too small: " + std::to_string(checked));
    o.detail = "initial charge total is -12 on " + std::to_string(checked) +
               " connected plane graphs";
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    int pairs = 0;
    for (const auto& ng : builtin_corpus())
        for (char rs : {'A', 'B', 'C'}) {
            auto res = apply_rules(ng.pg, rs);
            if (res.ledger.total_final() != Rational(-12))
                fail(o, ng.name + " under rule set " + rs +
                            " ends at " + to_string(res.ledger.total_final()));
            ++pairs;
        }
    o.detail = "charge total stays -12 across " + std::to_string(pairs) +
               " graph/rule-set runs";
    return o;
}

Outcome criterion_3()
{
    Outcome o;

    { // special 10-face: 14 - 8*(3/2) - 2*1 = 0
        auto r = apply_rules(gadget_special10(), 'A');
        int f = unique_face(o, r.cls.ten_class, TenClass::Special, "special 10-face");
        auto out = face_transfers(r, f, true);
        if (r.ledger.face_initial[f] != Rational(14) || out[frac(3, 2)] != 8 ||
            out[Rational(1)] != 2 || out.size() != 2 ||
            !face_transfers(r, f, false).empty())
            fail(o, "special 10-face transfers are not 8x3/2 + 2x1");
        if (r.ledger.face_final[f] !=
                Rational(14) - 8 * frac(3, 2) - 2 * Rational(1) ||
            r.ledger.face_final[f] != Rational(0))
            fail(o, "special 10-face does not settle at 0");
    }
    { // bad face: 14 - 4*(3/2) - 6*(4/3) = 0
        auto r = apply_rules(gadget_bad10(), 'A');
        int f = unique_face(o, r.cls.ten_class, TenClass::Bad, "bad 10-face");
        auto out = face_transfers(r, f, true);
        if (r.ledger.face_initial[f] != Rational(14) || out[frac(3, 2)] != 4 ||
            out[frac(4, 3)] != 6 || out.size() != 2 ||
            !face_transfers(r, f, false).empty())
            fail(o, "bad face transfers are not 4x3/2 + 6x4/3");
        if (r.ledger.face_final[f] !=
                Rational(14) - 4 * frac(3, 2) - 6 * frac(4, 3) ||
            r.ledger.face_final[f] != Rational(0))
            fail(o, "bad face does not settle at 0");
    }
    { // 8-face: 10 - 8*(5/4) = 0
        auto r = apply_rules(make_cycle(8), 'A');
        for (int f = 0; f < 2; ++f) {
            auto out = face_transfers(r, f, true);
            if (r.ledger.face_initial[f] != Rational(10) ||
                out[frac(5, 4)] != 8 || out.size() != 1)
                fail(o, "8-face transfers are not 8x5/4");
            if (r.ledger.face_final[f] != Rational(10) - 8 * frac(5, 4) ||
                r.ledger.face_final[f] != Rational(0))
                fail(o, "8-face does not settle at 0");
        }
    }
    { // 9-face: 12 - 9*(4/3) = 0
        auto r = apply_rules(make_cycle(9), 'A');
        for (int f = 0; f < 2; ++f) {
            auto out = face_transfers(r, f, true);
            if (r.ledger.face_initial[f] != Rational(12) ||
                out[frac(4, 3)] != 9 || out.size() != 1)
                fail(o, "9-face transfers are not 9x4/3");
            if (r.ledger.face_final[f] != Rational(12) - 9 * frac(4, 3) ||
                r.ledger.face_final[f] != Rational(0))
                fail(o, "9-face does not settle at 0");
        }
    }
    { // poor 7-face: 8 - 1 - 6*(5/4) + 3*(1/4) = 1/4 > 0
        auto r = apply_rules(gadget_poor7(), 'B');
        int f = -1;
        for (int i = 0; i < static_cast<int>(r.cls.seven_class.size()); ++i)
            if (r.cls.seven_class[i] == SevenClass::Poor)
                f = f < 0 ? i : (fail(o, "more than one poor 7-face"), f);
        if (f < 0) {
            fail(o, "no poor 7-face");
            return o;
        }
        auto out = face_transfers(r, f, true);
        auto in = face_transfers(r, f, false);
        if (r.ledger.face_initial[f] != Rational(8) || out[Rational(1)] != 1 ||
            out[frac(5, 4)] != 6 || out.size() != 2 || in[frac(1, 4)] != 3 ||
            in.size() != 1)
            fail(o, "poor 7-face transfers are not -1 - 6x5/4 + 3x1/4");
        Rational want = Rational(8) - Rational(1) - 6 * frac(5, 4) + 3 * frac(1, 4);
        if (r.ledger.face_final[f] != want ||
            r.ledger.face_final[f] != frac(1, 4) ||
            !(r.ledger.face_final[f] > Rational(0)))
            fail(o, "poor 7-face does not settle at 1/4");
    }
    o.detail = "special 10-face, bad face, 8-face, 9-face and poor 7-face "
               "charges match their closed forms exactly";
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    auto classes = oracle::connected_classes_up_to(6);
    if (classes.size() != 143)
        fail(o, "expected 143 connected classes, got " +
                    std::to_string(classes.size()));
    std::uint64_t covers2 = 0, covers3 = 0;
    for (std::size_t gi = 0; gi < classes.size() && o.ok; ++gi) {
        const Graph& g = classes[gi];
        auto compare = [&](const Cover& c) {
            bool brute = oracle::has_transversal(c);
            auto r = find_m_coloring(c);
            if (r.found != brute)
                fail(o, "solver disagrees with brute force on class " +
                            std::to_string(gi));
            else if (r.found && !verify_transversal(c, r.assignment))
                fail(o, "solver returned an invalid transversal on class " +
                            std::to_string(gi));
            return o.ok;
        };
        oracle::for_each_permutation_cover(g, 2, [&](const Cover& c) {
            ++covers2;
            return compare(c);
        });
        for (std::uint64_t seed = 1; seed <= 10 && o.ok; ++seed) {
            ++covers3;
            if (!compare(random_permutation_cover(g, 3, seed)))
                break;
        }
    }
    o.detail = "solver matches k^V brute force on 143 graph classes (" +
               std::to_string(covers2) + " exhaustive k=2 covers, " +
               std::to_string(covers3) + " random k=3 covers)";
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    Graph k4 = make_k4().graph();
    if (dp_chromatic_number(k4, 6) != 4)
        fail(o, "K4 did not come out DP-chromatic 4");
    auto chk = is_dp_k_colorable(k4, 4);
    if (!chk.colorable || chk.covers_checked != 13824)
        fail(o, "K4 k=4 enumeration did not cover 24^3 normalized covers");
    for (int n = 3; n <= 7; ++n)
        if (dp_chromatic_number(make_cycle(n).graph(), 6) != 3)
            fail(o, "C" + std::to_string(n) + " did not come out DP-chromatic 3");
    // Unnormalized cross-check on the small cases: full enumeration of
    // (k!)^E covers.  C3..C5 settle completely; for K4 the k <= 3 failures
    // are confirmed and the k=4 side rests on the normalized enumeration
    // ((4!)^6 raw covers being out of reach).
    for (int n = 3; n <= 5; ++n) {
        Graph c = make_cycle(n).graph();
        if (oracle::dp_colorable_brute(c, 1) || oracle::dp_colorable_brute(c, 2) ||
            !oracle::dp_colorable_brute(c, 3))
            fail(o, "unnormalized enumeration disagrees on C" + std::to_string(n));
    }
    if (oracle::dp_colorable_brute(k4, 2) || oracle::dp_colorable_brute(k4, 3))
        fail(o, "unnormalized enumeration disagrees on K4 at k <= 3");
    o.detail = "K4 is DP-chromatic 4 and C3..C7 are DP-chromatic 3; "
               "unnormalized enumeration agrees on C3..C5 and on K4 up to k=3";
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    int count = 0;
    std::uint64_t covers = 0;
    for (const auto& ng : builtin_corpus()) {
        const Graph& g = ng.pg.graph();
        if (!is_connected(g))
            continue;
        if (!enumerate_cycles(g, 4).empty())
            continue; // girth <= 4
        if (g.edge_count() - g.n + 1 > 8)
            continue;
        auto r = is_dp_k_colorable(g, 3);
        if (!r.colorable)
            fail(o, ng.name + " is not DP-3-colorable");
        ++count;
        covers += r.covers_checked;
    }
    if (count < 10)
        fail(o, "too few girth >= 5 fixtures: " + std::to_string(count));
    o.detail = std::to_string(count) +
               " girth >= 5 fixtures certified DP-3-colorable (" +
               std::to_string(covers) + " covers enumerated)";
    return o;
}

Outcome criterion_7()
{
    Outcome o;
    int passers = 0;
    std::uint64_t solved = 0;
    for (const auto& ng : builtin_corpus()) {
        const Graph& g = ng.pg.graph();
        if (!check_hypotheses(g, 'C').satisfied)
            continue;
        ++passers;
        auto [dgy, peel] = degeneracy_ordering(g);
        if (dgy > 2)
            fail(o, ng.name + " has degeneracy " + std::to_string(dgy));
        if (static_cast<int>(peel.size()) != g.n)
            fail(o, ng.name + " peel order is not a permutation");
        std::vector<char> gone(g.n, 0);
        for (int v : peel) {
            if (v < 0 || v >= g.n || gone[v]) {
                fail(o, ng.name + " peel order is not a permutation");
                break;
            }
            int later = 0;
            for (int u : g.adj[v])
                if (!gone[u])
                    ++later;
            if (later > dgy) {
                fail(o, ng.name + " peel certificate fails at vertex " +
                            std::to_string(v));
                break;
            }
            gone[v] = 1;
        }
        std::vector<int> order(peel.rbegin(), peel.rend());
        for (std::uint64_t seed = 1; seed <= 1000 && o.ok; ++seed) {
            Cover c = random_permutation_cover(g, 3, seed);
            auto t = greedy_transversal(c, order);
            if (!t.has_value() || !verify_transversal(c, *t))
                fail(o, ng.name + " greedy failed on cover seed " +
                            std::to_string(seed));
            ++solved;
        }
    }
    o.detail = std::to_string(passers) +
               " graphs meet the theorem-C hypotheses; degeneracy <= 2 "
               "certified and " +
               std::to_string(solved) + " random 3-covers solved greedily";
    return o;
}

// Chain-extension templates.  Every "valid" template satisfies the three
// preconditions by construction; every "violating" one trips exactly the
// condition named.
struct ChainTemplate {
    Graph g;
    std::vector<int> chain;
    int expect_condition; // 0: must succeed
    int expect_vertex;
};

std::vector<ChainTemplate> valid_templates()
{
    std::vector<ChainTemplate> out;
    out.push_back({Graph(4, {{1, 2}, {2, 3}, {1, 3}, {0, 3}}), {1, 2, 3}, 0, -1});
    out.push_back({Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}}),
                   {1, 2, 3, 4, 0},
                   0,
                   -1});
    out.push_back({Graph(4, {{1, 2}, {2, 3}, {1, 3}, {0, 3}, {0, 2}}), {1, 2, 3}, 0, -1});
    out.push_back({Graph(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {0, 4}, {2, 5}}),
                   {1, 2, 3, 4},
                   0,
                   -1});
    out.push_back(
        {Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}}),
         {1, 2, 3, 4, 0},
         0,
         -1});
    return out;
}

std::vector<ChainTemplate> violating_templates()
{
    std::vector<ChainTemplate> out;
    // start has as many outside neighbors as the end
    out.push_back({Graph(3, {{0, 1}, {1, 2}}), {1, 2}, 1, 1});
    // end degree exceeds k
    out.push_back({Graph(5, {{1, 2}, {2, 3}, {1, 3}, {0, 3}, {4, 3}}), {1, 2, 3}, 2, 3});
    // closing edge missing
    out.push_back({Graph(4, {{1, 2}, {2, 3}, {0, 3}}), {1, 2, 3}, 2, 3});
    // middle vertex sees too many earlier neighbors
    out.push_back({Graph(6, {{1, 2}, {2, 3}, {1, 3}, {0, 3}, {2, 4}, {2, 5}}),
                   {1, 2, 3},
                   3,
                   2});
    return out;
}

// Color the off-chain vertices from their lists without conflicts.
Transversal random_partial(const ChainTemplate& t, const Cover& c, std::mt19937& rng)
{
    std::vector<char> on_chain(t.g.n, 0);
    for (int v : t.chain)
        on_chain[v] = 1;
    Transversal partial;
    partial.colors.assign(t.g.n, 0);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int v = 0; v < t.g.n; ++v) {
        if (on_chain[v])
            continue;
        for (int tries = 0; tries < 100; ++tries) {
            int col = c.lists[v][pick(rng)];
            bool clash = false;
            for (int u : t.g.adj[v]) {
                if (on_chain[u] || u >= v || partial.colors[u] == 0)
                    continue;
                int e = t.g.edge_id(u, v);
                if (detail::matched_color_at(c, e, u, partial.colors[u]) == col)
                    clash = true;
            }
            if (!clash) {
                partial.colors[v] = col;
                break;
            }
        }
    }
    return partial;
}

Outcome criterion_8()
{
    Outcome o;
    auto valid = valid_templates();
    auto bad = violating_templates();
    int extended = 0, rejected = 0;
    for (int i = 0; i < 500 && o.ok; ++i) {
        const ChainTemplate& t = valid[i % valid.size()];
        Cover c = random_permutation_cover(t.g, 3, 8000 + i);
        std::mt19937 rng(9000 + i);
        GreedyExtensionQuery q{c, t.chain, random_partial(t, c, rng)};
        try {
            Transversal full = extend_coloring_greedy(q, 3);
            if (!verify_transversal(c, full)) {
                fail(o, "extension " + std::to_string(i) + " fails verification");
                break;
            }
            for (int v = 0; v < t.g.n; ++v)
                if (q.partial.colors[v] != 0 &&
                    full.colors[v] != q.partial.colors[v])
                    fail(o, "extension " + std::to_string(i) +
                                " rewrote an off-chain color");
            ++extended;
        } catch (const std::exception& e) {
            fail(o, "extension " + std::to_string(i) + " threw: " + e.what());
        }
    }
    for (int i = 0; i < 100 && o.ok; ++i) {
        const ChainTemplate& t = bad[i % bad.size()];
        Cover c = random_permutation_cover(t.g, 3, 12000 + i);
        std::mt19937 rng(13000 + i);
        GreedyExtensionQuery q{c, t.chain, random_partial(t, c, rng)};
        try {
            extend_coloring_greedy(q, 3);
            fail(o, "violating query " + std::to_string(i) + " was accepted");
        } catch (const PreconditionError& e) {
            if (e.condition != t.expect_condition || e.vertex != t.expect_vertex)
                fail(o, "violating query " + std::to_string(i) +
                            " reported condition " + std::to_string(e.condition) +
                            " at vertex " + std::to_string(e.vertex));
            else
                ++rejected;
        } catch (const std::exception& e) {
            fail(o, "violating query " + std::to_string(i) +
                        " threw the wrong error: " + e.what());
        }
    }
    o.detail = std::to_string(extended) + " valid chain extensions verified; " +
               std::to_string(rejected) +
               " single-violation queries rejected with the right condition";
    return o;
}

Outcome criterion_9()
{
    Outcome o;
    auto classes = oracle::connected_classes_up_to(6);
    int minimal_found = 0;
    for (std::size_t gi = 0; gi < classes.size(); ++gi) {
        const Graph& g = classes[gi];
        if (is_dp_k_colorable(g, 2).colorable)
            continue;
        bool minimal = true;
        for (int v = 0; v < g.n && minimal; ++v)
            if (!is_dp_k_colorable(delete_vertex(g, v), 2).colorable)
                minimal = false;
        if (!minimal)
            continue;
        ++minimal_found;
        if (min_degree(g) < 2)
            fail(o, "minimal class " + std::to_string(gi) + " has a degree-1 vertex");
        for (const auto& b : biconnected_blocks(g)) {
            bool all2 = true;
            for (int v : b.vertices)
                if (g.degree(v) != 2)
                    all2 = false;
            if (!all2)
                continue;
            // independent cycle check: 2-regular inside the block, |E| = |V|
            std::vector<char> in_block(g.n, 0);
            for (int v : b.vertices)
                in_block[v] = 1;
            int block_edges = 0;
            bool two_regular = true;
            for (int v : b.vertices) {
                int d = 0;
                for (int u : g.adj[v])
                    if (in_block[u])
                        ++d;
                if (d != 2)
                    two_regular = false;
                block_edges += d;
            }
            block_edges /= 2;
            bool cyc = two_regular && b.vertices.size() >= 3 &&
                       block_edges == static_cast<int>(b.vertices.size());
            if (!cyc)
                fail(o, "minimal class " + std::to_string(gi) +
                            " has an all-degree-2 block that is not a cycle");
            if (cyc != b.is_cycle)
                fail(o, "block cycle flag disagrees on class " + std::to_string(gi));
        }
    }
    if (minimal_found < 1)
        fail(o, "no vertex-minimal non-DP-2-colorable graph found");
    o.detail = std::to_string(minimal_found) +
               " vertex-minimal non-DP-2-colorable graphs: min degree >= 2 and "
               "every all-degree-2 block is a cycle";
    return o;
}

} // namespace

int main()
{
    struct Entry {
        int id;
        double limit; // seconds; 0 = no pinned limit
        Outcome (*run)();
    };
    const Entry entries[] = {
        {1, 1.0, criterion_1},   {2, 10.0, criterion_2}, {3, 0.0, criterion_3},
        {4, 60.0, criterion_4},  {5, 120.0, criterion_5}, {6, 600.0, criterion_6},
        {7, 60.0, criterion_7},  {8, 30.0, criterion_8}, {9, 300.0, criterion_9},
    };
    int failures = 0;
    for (const auto& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            fail(o, std::string("unexpected exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        if (e.limit > 0 && secs >= e.limit)
            fail(o, "took " + std::to_string(secs) + " s, limit " +
                         std::to_string(e.limit) + " s");
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << " criterion " << e.id << ": "
             << o.detail << " [" << std::fixed << std::setprecision(2) << secs
             << "s]";
        std::cout << line.str() << "\n";
        if (!o.ok)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
