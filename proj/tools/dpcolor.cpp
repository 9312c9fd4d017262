#include "dpc/corpus.hpp"
#include "dpc/cycles.hpp"
#include "dpc/discharge.hpp"
#include "dpc/io.hpp"
#include "dpc/solver.hpp"
#include "dpc/structure.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

dpc::PlaneGraph load_graph(const std::string& path, std::string* name = nullptr)
{
    dpc::GraphDocument doc = dpc::parse_graph_document(dpc::read_text_file(path));
    if (name)
        *name = doc.name.value_or("(unnamed)");
    return dpc::to_plane_graph(doc);
}

int cmd_analyze(const std::string& path)
{
    std::string name;
    dpc::PlaneGraph pg = load_graph(path, &name);
    const dpc::Graph& g = pg.graph();

    std::cout << "name: " << name << "\n";
    std::cout << "V=" << pg.vertex_count() << " E=" << pg.edge_count()
              << " F=" << pg.face_count();
    std::map<int, int> census;
    for (const auto& c : dpc::enumerate_cycles(g, 10))
        ++census[c.length()];
    if (census.empty())
        std::cout << "; no cycles up to length 10";
    for (auto [len, cnt] : census)
        std::cout << "; " << len << "-cycles: " << cnt;
    std::cout << "\n";

    std::map<int, int> deg_hist;
    for (int v = 0; v < g.n; ++v)
        ++deg_hist[g.degree(v)];
    std::cout << "degrees:";
    for (auto [d, cnt] : deg_hist)
        std::cout << " " << d << ":" << cnt;
    std::cout << "\n";

    std::map<int, int> face_hist;
    for (const auto& f : pg.faces())
        ++face_hist[f.length()];
    std::cout << "face lengths:";
    for (auto [l, cnt] : face_hist)
        std::cout << " " << l << ":" << cnt;
    std::cout << "\n";

    int triangles = census.count(3) ? census[3] : 0;
    auto dist = dpc::triangle_distance(g);
    std::cout << "triangles: " << triangles << "; dist∇: "
              << (dist ? std::to_string(*dist) : std::string("none")) << "\n";
    return kExitOk;
}

int cmd_discharge(const std::string& path, char ruleset, bool log)
{
    dpc::PlaneGraph pg = load_graph(path);
    dpc::DischargeResult res = dpc::apply_rules(pg, ruleset);
    const dpc::ChargeLedger& led = res.ledger;
    const dpc::Classification& cls = res.cls;

    std::cout << "ruleset " << ruleset << "\n";
    std::cout << "V=" << pg.vertex_count() << " E=" << pg.edge_count()
              << " F=" << pg.face_count() << "\n";

    int weak = 0, semiweak = 0, strong = 0;
    for (auto c : cls.three_class) {
        weak += c == dpc::ThreeClass::Weak;
        semiweak += c == dpc::ThreeClass::SemiWeak;
        strong += c == dpc::ThreeClass::Strong;
    }
    std::cout << "3-vertices: weak=" << weak << " semi-weak=" << semiweak
              << " strong=" << strong << "\n";
    if (ruleset == 'A') {
        std::map<dpc::TenClass, int> tens;
        for (auto c : cls.ten_class)
            if (c != dpc::TenClass::NotTen)
                ++tens[c];
        std::cout << "10-faces:";
        for (auto [c, cnt] : tens)
            std::cout << " " << dpc::to_string(c) << "=" << cnt;
        int bad_edges = 0, bad_vertices = 0;
        for (char b : cls.bad_edge)
            bad_edges += b;
        for (char b : cls.bad_vertex)
            bad_vertices += b;
        std::cout << "; bad edges=" << bad_edges << " bad vertices=" << bad_vertices
                  << "\n";
    } else if (ruleset == 'B') {
        std::map<dpc::SevenClass, int> sevens;
        for (auto c : cls.seven_class)
            if (c != dpc::SevenClass::NotSeven)
                ++sevens[c];
        std::cout << "7-faces:";
        for (auto [c, cnt] : sevens)
            std::cout << " " << dpc::to_string(c) << "=" << cnt;
        std::cout << "\n";
    }

    bool conserved = led.total_initial() == led.total_final() &&
                     led.total_initial() == dpc::Rational(-12);
    std::cout << "conservation: initial " << dpc::to_string(led.total_initial())
              << ", final " << dpc::to_string(led.total_final())
              << (conserved ? " (conserved)" : " (BROKEN)") << "\n";

    auto neg = dpc::negative_elements(led);
    std::cout << "negative elements: " << neg.size() << "\n";
    for (const auto& [el, q] : neg)
        std::cout << "  " << dpc::to_string(el) << " = " << dpc::to_string(q) << "\n";
    for (const auto& fl : cls.flags)
        std::cout << "note: " << fl << "\n";

    if (log) {
        std::cout << "transfers: " << led.transfers.size() << "\n";
        for (const auto& t : led.transfers) {
            std::cout << "  " << t.rule << ": " << dpc::to_string(t.from) << " -> "
                      << dpc::to_string(t.to) << " " << dpc::to_string(t.amount);
            if (t.via_edge >= 0)
                std::cout << " via e" << t.via_edge;
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_dp_solve(const std::string& path, int k, const std::string& cover_kind,
                 const std::string& cover_file, std::uint64_t seed,
                 std::uint64_t budget)
{
    dpc::PlaneGraph pg = load_graph(path);
    const dpc::Graph& g = pg.graph();

    dpc::Cover cover(g);
    if (cover_kind == "identity") {
        cover = dpc::identity_cover(g, k);
    } else if (cover_kind == "random") {
        cover = dpc::random_permutation_cover(g, k, seed);
    } else if (cover_kind == "file") {
        if (cover_file.empty())
            throw dpc::Error(dpc::Errc::InvalidArgument,
                             "--cover file needs --cover-file");
        cover = dpc::parse_cover_file(dpc::read_text_file(cover_file), g);
        int file_k = 0;
        if (cover.uniform_k(file_k) && file_k != k)
            throw dpc::Error(dpc::Errc::InvalidArgument,
                             "cover file has k=" + std::to_string(file_k) +
                                 ", command line has k=" + std::to_string(k));
    } else {
        throw dpc::Error(dpc::Errc::InvalidArgument,
                         "--cover must be identity, random or file");
    }

    dpc::SolveResult res =
        dpc::find_m_coloring(cover, budget ? budget : dpc::default_budget());
    if (res.found) {
        std::cout << "transversal:";
        for (int c : res.assignment.colors)
            std::cout << " " << c;
        std::cout << "\nnodes: " << res.stats.nodes << "\n";
        return kExitOk;
    }
    std::cout << "exhausted\nnodes: " << res.stats.nodes << "\n";
    return kExitFinding;
}

int cmd_check(const std::string& path, char theorem)
{
    dpc::PlaneGraph pg = load_graph(path);
    dpc::HypothesisReport rep = dpc::check_hypotheses(pg, theorem);
    std::cout << "theorem " << theorem << ": "
              << (rep.satisfied ? "satisfied" : "violated") << "\n";
    for (const auto& c : rep.forbidden_cycles) {
        std::cout << "forbidden " << c.length() << "-cycle:";
        for (int v : c.vertices)
            std::cout << " " << v;
        std::cout << "\n";
    }
    for (const auto& [a, b] : rep.close_triangles) {
        std::cout << "close triangles:";
        for (int v : a.vertices)
            std::cout << " " << v;
        std::cout << " |";
        for (int v : b.vertices)
            std::cout << " " << v;
        std::cout << "\n";
    }
    if (rep.triangle_dist)
        std::cout << "dist∇: " << *rep.triangle_dist << "\n";
    return rep.satisfied ? kExitOk : kExitFinding;
}

int cmd_degeneracy(const std::string& path)
{
    dpc::PlaneGraph pg = load_graph(path);
    auto [deg, order] = dpc::degeneracy_ordering(pg.graph());
    std::cout << "degeneracy: " << deg << "\n";
    std::cout << "peel order:";
    for (int v : order)
        std::cout << " " << v;
    std::cout << "\n";
    return kExitOk;
}

int cmd_gen(const std::string& name, bool list)
{
    auto corpus = dpc::builtin_corpus();
    if (list) {
        for (const auto& ng : corpus)
            std::cout << ng.name << " (V=" << ng.pg.vertex_count()
                      << " E=" << ng.pg.edge_count() << ")\n";
        return kExitOk;
    }
    for (const auto& ng : corpus)
        if (ng.name == name) {
            std::cout << dpc::format_graph_document(
                dpc::from_plane_graph(ng.pg, ng.name));
            return kExitOk;
        }
    std::cerr << "unknown fixture: " << name << "\n";
    return kExitInput;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"DP-coloring and discharging toolkit for plane graphs"};
    app.require_subcommand(1);

    std::string path, cover_kind = "identity", cover_file, gen_name;
    std::string ruleset = "A", theorem = "A";
    bool log = false, gen_list = false;
    int k = 3;
    std::uint64_t seed = 1, budget = 0;

    auto* analyze = app.add_subcommand("analyze", "Print graph structure summary");
    analyze->add_option("path", path, "graph document")->required();

    auto* discharge = app.add_subcommand("discharge", "Run a discharging rule set");
    discharge->add_option("path", path, "graph document")->required();
    discharge->add_option("--ruleset", ruleset, "rule set A, B or C")
        ->check(CLI::IsMember({"A", "B", "C"}));
    discharge->add_flag("--log", log, "dump every transfer");

    auto* solve = app.add_subcommand("dp-solve", "Search a transversal of a cover");
    solve->add_option("path", path, "graph document")->required();
    solve->add_option("--k", k, "list size");
    solve->add_option("--cover", cover_kind, "identity, random or file");
    solve->add_option("--cover-file", cover_file, "cover description file");
    solve->add_option("--seed", seed, "seed for random covers");
    solve->add_option("--budget", budget, "search node budget (0 = default)");

    auto* check = app.add_subcommand("check", "Check theorem hypotheses");
    check->add_option("path", path, "graph document")->required();
    check->add_option("--theorem", theorem, "theorem A, B or C")
        ->check(CLI::IsMember({"A", "B", "C"}));

    auto* degen = app.add_subcommand("degeneracy", "Min-degree peeling certificate");
    degen->add_option("path", path, "graph document")->required();

    auto* gen = app.add_subcommand("gen", "Emit a built-in fixture document");
    gen->add_option("name", gen_name, "fixture name");
    gen->add_flag("--list", gen_list, "list fixture names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(path);
        if (app.got_subcommand(discharge))
            return cmd_discharge(path, ruleset[0], log);
        if (app.got_subcommand(solve))
            return cmd_dp_solve(path, k, cover_kind, cover_file, seed, budget);
        if (app.got_subcommand(check))
            return cmd_check(path, theorem[0]);
        if (app.got_subcommand(degen))
            return cmd_degeneracy(path);
        if (app.got_subcommand(gen)) {
            if (!gen_list && gen_name.empty()) {
                std::cerr << "gen needs a fixture name or --list\n";
                return kExitInput;
            }
            return cmd_gen(gen_name, gen_list);
        }
    } catch (const dpc::Error& e) {
        if (e.code == dpc::Errc::BudgetExceeded) {
            std::cout << "budget exceeded\n";
            return kExitBudget;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
