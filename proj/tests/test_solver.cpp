#include "dpc/corpus.hpp"
#include "dpc/greedy_extension.hpp"
#include "dpc/solver.hpp"
#include "dpc/structure.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace dpc;

namespace {

auto code_is(Errc c)
{
    return Catch::Matchers::Predicate<Error>(
        [c](const Error& e) { return e.code == c; });
}

auto precondition_is(int cond, int vertex)
{
    return Catch::Matchers::Predicate<PreconditionError>(
        [cond, vertex](const PreconditionError& e) {
            return e.condition == cond && e.vertex == vertex;
        });
}

} // namespace

TEST_CASE("backtracking finds transversals and exhausts honestly")
{
    Graph c5 = make_cycle(5).graph();
    SolveResult r = find_m_coloring(identity_cover(c5, 3));
    REQUIRE(r.found);
    REQUIRE(verify_transversal(identity_cover(c5, 3), r.assignment));
    REQUIRE(r.stats.nodes > 0);

    REQUIRE(!find_m_coloring(identity_cover(make_cycle(3).graph(), 2)).found);

    Graph k4 = make_k4().graph();
    REQUIRE(!find_m_coloring(identity_cover(k4, 3)).found);
    SolveResult r4 = find_m_coloring(identity_cover(k4, 4));
    REQUIRE(r4.found);
    REQUIRE(verify_transversal(identity_cover(k4, 4), r4.assignment));

    Graph k1(1, {});
    SolveResult r1 = find_m_coloring(identity_cover(k1, 1));
    REQUIRE(r1.found);
    REQUIRE(r1.assignment.colors == std::vector<int>{1});
}

TEST_CASE("solver respects arbitrary color names")
{
    Graph e(2, {{0, 1}});
    Cover c = build_cover(e, {{2, 5}, {3, 7}}, {{{0, 1}, {{2, 3}, {5, 7}}}});
    SolveResult r = find_m_coloring(c);
    REQUIRE(r.found);
    REQUIRE(verify_transversal(c, r.assignment));
}

TEST_CASE("solver limits")
{
    Graph k4 = make_k4().graph();
    REQUIRE_THROWS_MATCHES(find_m_coloring(identity_cover(k4, 4), 3), Error,
                           code_is(Errc::BudgetExceeded));
    Graph e(2, {{0, 1}});
    REQUIRE_THROWS_MATCHES(find_m_coloring(identity_cover(e, 32)), Error,
                           code_is(Errc::InvalidArgument));
}

TEST_CASE("identity covers reproduce proper colorability")
{
    for (const Graph& g : oracle::connected_classes_up_to(6))
        for (int k = 2; k <= 3; ++k) {
            bool proper = oracle::properly_k_colorable(g, k);
            REQUIRE(find_m_coloring(identity_cover(g, k)).found == proper);
        }
}

TEST_CASE("solver verdict matches exhaustive search on random covers")
{
    std::uint64_t seed = 100;
    for (const Graph& g : oracle::connected_classes(5))
        for (int k = 2; k <= 3; ++k) {
            Cover c = random_permutation_cover(g, k, seed++);
            SolveResult r = find_m_coloring(c);
            REQUIRE(r.found == oracle::has_transversal(c));
            if (r.found)
                REQUIRE(verify_transversal(c, r.assignment));
        }
}

TEST_CASE("one color above the degeneracy always suffices")
{
    auto corpus = builtin_corpus();
    for (const char* name : {"q3", "wheel-6", "grid-3x4", "bad10"}) {
        const PlaneGraph* pg = nullptr;
        for (const auto& ng : corpus)
            if (ng.name == name)
                pg = &ng.pg;
        REQUIRE(pg != nullptr);
        const Graph& g = pg->graph();
        int dgy = degeneracy_ordering(g).first;
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            Cover c = random_permutation_cover(g, dgy + 1, seed);
            SolveResult r = find_m_coloring(c);
            REQUIRE(r.found);
            REQUIRE(verify_transversal(c, r.assignment));
        }
    }
}

TEST_CASE("greedy transversal validates its order")
{
    Graph c4 = make_cycle(4).graph();
    Cover id = identity_cover(c4, 3);
    REQUIRE_THROWS_MATCHES(greedy_transversal(id, {0, 1, 2}), Error,
                           code_is(Errc::InvalidArgument));
    REQUIRE_THROWS_MATCHES(greedy_transversal(id, {0, 1, 2, 2}), Error,
                           code_is(Errc::InvalidArgument));
    REQUIRE_THROWS_MATCHES(greedy_transversal(id, {0, 1, 2, 4}), Error,
                           code_is(Errc::InvalidVertex));
}

TEST_CASE("greedy transversal succeeds along a reverse peel order")
{
    // every vertex sees at most (degeneracy) colored neighbors at its turn,
    // so degeneracy + 1 colors always suffice, whatever the matchings are
    auto corpus = builtin_corpus();
    for (const char* name : {"path-7", "caterpillar", "grid-3x3", "hex-4"}) {
        const PlaneGraph* pg = nullptr;
        for (const auto& ng : corpus)
            if (ng.name == name)
                pg = &ng.pg;
        REQUIRE(pg != nullptr);
        const Graph& g = pg->graph();
        auto [dgy, peel] = degeneracy_ordering(g);
        std::vector<int> order(peel.rbegin(), peel.rend());
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            Cover c = random_permutation_cover(g, dgy + 1, seed);
            auto t = greedy_transversal(c, order);
            REQUIRE(t.has_value());
            REQUIRE(verify_transversal(c, *t));
        }
    }
}

TEST_CASE("greedy transversal reports dead ends")
{
    Graph c3 = make_cycle(3).graph();
    REQUIRE(!greedy_transversal(identity_cover(c3, 2), {0, 1, 2}).has_value());

    Graph c4 = make_cycle(4).graph();
    auto t = greedy_transversal(identity_cover(c4, 2), {0, 1, 2, 3});
    REQUIRE(t.has_value());
    REQUIRE(t->colors == std::vector<int>{1, 2, 1, 2});
}

TEST_CASE("cover enumeration on trees checks a single cover")
{
    Graph p4 = make_path(4).graph();
    DpCheckResult r = is_dp_k_colorable(p4, 2);
    REQUIRE(r.colorable);
    REQUIRE(r.covers_checked == 1);
}

TEST_CASE("even cycles admit a falsifying 2-cover")
{
    Graph c4 = make_cycle(4).graph();
    DpCheckResult r = is_dp_k_colorable(c4, 2);
    REQUIRE(!r.colorable);
    REQUIRE(r.witness.has_value());
    REQUIRE(!oracle::has_transversal(*r.witness));
    REQUIRE(r.witness->base.edges == c4.edges);

    DpCheckResult r3 = is_dp_k_colorable(c4, 3);
    REQUIRE(r3.colorable);
    REQUIRE(r3.covers_checked == 6); // one non-tree edge, 3! matchings
}

TEST_CASE("odd cycles are not DP-2-colorable either")
{
    DpCheckResult r = is_dp_k_colorable(make_cycle(5).graph(), 2);
    REQUIRE(!r.colorable);
    REQUIRE(r.witness.has_value());
    REQUIRE(!oracle::has_transversal(*r.witness));
}

TEST_CASE("K4 needs four colors")
{
    Graph k4 = make_k4().graph();
    REQUIRE(!is_dp_k_colorable(k4, 3).colorable);
    DpCheckResult r = is_dp_k_colorable(k4, 4);
    REQUIRE(r.colorable);
    REQUIRE(r.covers_checked == 24ull * 24 * 24); // three non-tree edges
}

TEST_CASE("disconnected graphs are checked per component")
{
    Graph two_k3(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    DpCheckResult r = is_dp_k_colorable(two_k3, 3);
    REQUIRE(r.colorable);
    REQUIRE(r.covers_checked == 12); // six normalized covers per triangle
    REQUIRE(!is_dp_k_colorable(two_k3, 2).colorable);
}

TEST_CASE("thread count does not change the verdict")
{
    DpSolveOptions two;
    two.threads = 2;
    Graph c6 = make_cycle(6).graph();
    DpCheckResult a = is_dp_k_colorable(c6, 3);
    DpCheckResult b = is_dp_k_colorable(c6, 3, two);
    REQUIRE(a.colorable == b.colorable);
    REQUIRE(a.covers_checked == b.covers_checked);

    Graph k4 = make_k4().graph();
    REQUIRE(is_dp_k_colorable(k4, 3, two).colorable ==
            is_dp_k_colorable(k4, 3).colorable);
}

TEST_CASE("cover enumeration honors the node budget")
{
    DpSolveOptions tight;
    tight.budget = 50;
    REQUIRE_THROWS_MATCHES(is_dp_k_colorable(make_k4().graph(), 4, tight), Error,
                           code_is(Errc::BudgetExceeded));
    REQUIRE_THROWS_MATCHES(is_dp_k_colorable(make_k4().graph(), 0), Error,
                           code_is(Errc::InvalidArgument));
}

TEST_CASE("tree-identity normalization loses no covers")
{
    // exhaustive cross-check against all (k!)^E covers on sparse graphs
    std::vector<Graph> pool{make_cycle(3).graph(), make_cycle(4).graph(),
                            make_cycle(5).graph(), make_bowtie().graph(),
                            Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})};
    for (const Graph& g : pool) {
        bool brute2 = oracle::dp_colorable_brute(g, 2);
        REQUIRE(is_dp_k_colorable(g, 2).colorable == brute2);
        bool brute3 = oracle::dp_colorable_brute(g, 3);
        REQUIRE(is_dp_k_colorable(g, 3).colorable == brute3);
    }
}

TEST_CASE("DP chromatic number of basic families")
{
    DpSolveOptions opts;
    REQUIRE(dp_chromatic_number(Graph(1, {}), 4, opts) == 1);
    REQUIRE(dp_chromatic_number(make_path(4).graph(), 4, opts) == 2);
    REQUIRE(dp_chromatic_number(make_star(5).graph(), 4, opts) == 2);
    REQUIRE(dp_chromatic_number(make_cycle(5).graph(), 4, opts) == 3);
    REQUIRE(dp_chromatic_number(make_cycle(6).graph(), 4, opts) == 3);
    REQUIRE(dp_chromatic_number(make_k4().graph(), 5, opts) == 4);
    REQUIRE_THROWS_MATCHES(dp_chromatic_number(make_cycle(5).graph(), 2), Error,
                           code_is(Errc::NotWithinMax));
    REQUIRE_THROWS_MATCHES(dp_chromatic_number(make_path(3).graph(), 0), Error,
                           code_is(Errc::InvalidArgument));
}

namespace {

// triangle 1-2-3 with a pendant 0 on vertex 3; chain 1,2,3 closes via 1-3
GreedyExtensionQuery chain_query(Cover c, int off_color)
{
    GreedyExtensionQuery q{std::move(c), {1, 2, 3}, Transversal{}};
    q.partial.colors = {off_color, 0, 0, 0};
    return q;
}

Graph triangle_with_pendant()
{
    return Graph(4, {{1, 2}, {2, 3}, {1, 3}, {0, 3}});
}

} // namespace

TEST_CASE("greedy chain extension completes valid queries")
{
    Graph g = triangle_with_pendant();

    Cover id = identity_cover(g, 3);
    Transversal t = extend_coloring_greedy(chain_query(id, 1));
    REQUIRE(verify_transversal(id, t));
    REQUIRE(t.colors[0] == 1); // off-chain colors stay put

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Cover c = random_permutation_cover(g, 3, seed);
        Transversal r = extend_coloring_greedy(chain_query(c, 2), 3);
        REQUIRE(verify_transversal(c, r));
        REQUIRE(r.colors[0] == 2);
    }
}

TEST_CASE("greedy chain extension on a two-vertex chain")
{
    Graph p3 = make_path(3).graph();
    Cover id = identity_cover(p3, 2);
    GreedyExtensionQuery q{id, {2, 1}, Transversal{{{1, 0, 0}}}};
    Transversal t = extend_coloring_greedy(q);
    REQUIRE(verify_transversal(id, t));
}

TEST_CASE("greedy chain extension precondition failures")
{
    Graph p3 = make_path(3).graph();
    // endpoint order swapped: v_1 sees one outside neighbor, v_t none
    GreedyExtensionQuery q1{identity_cover(p3, 2), {1, 2},
                            Transversal{{{1, 0, 0}}}};
    REQUIRE_THROWS_MATCHES(extend_coloring_greedy(q1), PreconditionError,
                           precondition_is(1, 1));

    // chain end of degree 3 with only 2 colors
    Graph g2(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    GreedyExtensionQuery q2{identity_cover(g2, 2), {0, 2},
                            Transversal{{{0, 1, 0, 1}}}};
    REQUIRE_THROWS_MATCHES(extend_coloring_greedy(q2), PreconditionError,
                           precondition_is(2, 2));

    // missing closing edge
    Graph p4 = make_path(4).graph();
    GreedyExtensionQuery q3{identity_cover(p4, 2), {3, 2, 1},
                            Transversal{{{1, 0, 0, 0}}}};
    REQUIRE_THROWS_MATCHES(extend_coloring_greedy(q3), PreconditionError,
                           precondition_is(2, 1));

    // middle vertex with three earlier neighbors but only two spare colors
    Graph g4(6, {{1, 2}, {2, 3}, {1, 3}, {0, 3}, {2, 4}, {2, 5}});
    GreedyExtensionQuery q4{identity_cover(g4, 3), {1, 2, 3},
                            Transversal{{{1, 0, 0, 0, 2, 3}}}};
    REQUIRE_THROWS_MATCHES(extend_coloring_greedy(q4), PreconditionError,
                           precondition_is(3, 2));
}

TEST_CASE("greedy chain extension rejects malformed queries")
{
    Graph g = triangle_with_pendant();
    Cover id = identity_cover(g, 3);

    auto expect_mq = [](GreedyExtensionQuery q) {
        REQUIRE_THROWS_MATCHES(extend_coloring_greedy(q), Error,
                               code_is(Errc::MalformedQuery));
    };

    expect_mq({id, {1}, Transversal{{{1, 0, 0, 0}}}});          // chain too short
    expect_mq({id, {1, 2, 1}, Transversal{{{1, 0, 0, 0}}}});    // repeated vertex
    expect_mq({id, {0, 2}, Transversal{{{0, 1, 0, 1}}}});       // 0 and 2 not adjacent
    expect_mq({id, {1, 2, 3}, Transversal{{{1, 0, 0}}}});       // size mismatch
    expect_mq({id, {1, 2, 3}, Transversal{{{1, 2, 0, 0}}}});    // chain vertex colored
    expect_mq({id, {1, 2, 3}, Transversal{{{0, 0, 0, 0}}}});    // off-chain uncolored
    expect_mq({id, {1, 2, 3}, Transversal{{{7, 0, 0, 0}}}});    // color not in list

    // conflicting colors on an off-chain edge
    Graph h(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {0, 3}});
    GreedyExtensionQuery qc{identity_cover(h, 3), {1, 2}, Transversal{{{1, 0, 0, 1}}}};
    REQUIRE_THROWS_MATCHES(extend_coloring_greedy(qc), Error,
                           code_is(Errc::MalformedQuery));

    // explicit k disagreeing with the cover
    GreedyExtensionQuery qk{id, {1, 2, 3}, Transversal{{{1, 0, 0, 0}}}};
    REQUIRE_THROWS_MATCHES(extend_coloring_greedy(qk, 2), Error,
                           code_is(Errc::MalformedQuery));

    // lists of mixed sizes
    Cover mixed = build_cover(g, {{1, 2}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}, {});
    GreedyExtensionQuery qm{mixed, {1, 2, 3}, Transversal{{{1, 0, 0, 0}}}};
    REQUIRE_THROWS_MATCHES(extend_coloring_greedy(qm), Error,
                           code_is(Errc::MalformedQuery));
}
