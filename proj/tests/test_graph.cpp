#include "bratteli/arrays.hpp"
#include "bratteli/export.hpp"
#include "bratteli/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace bratteli;

namespace {

YoungDiagram Y(std::initializer_list<long long> parts) { return YoungDiagram::from_parts(parts); }

std::set<Payload> payloads(const BranchingGraph& g, unsigned n) {
    std::set<Payload> out;
    for (const auto& v : g.level(n)) out.insert(v.payload);
    return out;
}

constexpr GraphKind all_kinds[] = {GraphKind::young,           GraphKind::gamma_B, GraphKind::theta,
                                   GraphKind::lambda_principal, GraphKind::walled,  GraphKind::doubled_young};

}  // namespace

TEST_CASE("constructors reproduce the defining level sets") {
    const auto gamma = build_graph(GraphKind::gamma_B, 2);
    CHECK(payloads(gamma, 1) == std::set<Payload>{Y({}), Y({1})});
    CHECK(payloads(gamma, 2) == std::set<Payload>{Y({}), Y({1}), Y({2}), Y({1, 1})});
    CHECK(gamma.vertex_count() == 7);

    const auto theta = build_graph(GraphKind::theta, 3);
    CHECK(payloads(theta, 2) ==
          std::set<Payload>{DiagramPair{Y({}), Y({2})}, DiagramPair{Y({}), Y({1, 1})}, DiagramPair{Y({1}), Y({})}});
    std::vector<std::size_t> sizes;
    for (unsigned n = 0; n <= 3; ++n) sizes.push_back(theta.level(n).size());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 3, 4});

    const auto walled = build_graph(GraphKind::walled, 3);
    CHECK(payloads(walled, 3) == std::set<Payload>{DiagramPair{Y({2}), Y({1})}, DiagramPair{Y({1, 1}), Y({1})}});

    const auto lambda = build_graph(GraphKind::lambda_principal, 3);
    CHECK(lambda.level(3).size() == 3 + 2);

    const auto doubled = build_graph(GraphKind::doubled_young, 5);
    CHECK(payloads(doubled, 4) == std::set<Payload>{TaggedDiagram{0, Y({2})}, TaggedDiagram{0, Y({1, 1})}});
    CHECK(payloads(doubled, 5) == std::set<Payload>{TaggedDiagram{1, Y({2})}, TaggedDiagram{1, Y({1, 1})}});

    CHECK(build_graph(GraphKind::young, 0).vertex_count() == 1);
    CHECK_THROWS_AS(build_graph("young", -1), std::invalid_argument);
    CHECK_THROWS_AS(build_graph("nonsense", 2), std::invalid_argument);
}

TEST_CASE("structural invariants for every kind") {
    for (auto kind : all_kinds) {
        CAPTURE(to_string(kind));
        const auto g = build_graph(kind, 7);
        CHECK(g.level(0).size() == 1);
        for (unsigned n = 1; n <= 7; ++n)
            for (std::size_t i = 0; i < g.level(n).size(); ++i) CHECK(!g.down_edges(n, i).empty());
        // Canonical order within each level.
        for (unsigned n = 0; n <= 7; ++n) CHECK(std::is_sorted(g.level(n).begin(), g.level(n).end()));
    }
    CHECK_THROWS_AS(build_graph(GraphKind::young, 2).level(3), std::out_of_range);
}

TEST_CASE("root dimensions") {
    const auto gamma = build_graph(GraphKind::gamma_B, 4);
    CHECK(gamma.dim_root(make_vertex(2, Y({}))) == 2);
    const auto theta = build_graph(GraphKind::theta, 3);
    CHECK(theta.dim_root(make_vertex(3, DiagramPair{Y({1}), Y({1})})) == 3);
    const auto young = build_graph(GraphKind::young, 5);
    CHECK(young.dim_root(young_vertex(Y({2, 1}))) == 2);
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& v : young.level(n)) CHECK(young.dim_root(v) == dim_young(std::get<YoungDiagram>(v.payload)));
    CHECK_THROWS(young.dim_root(young_vertex(Y({7}))));
}

TEST_CASE("dim_between and explicit paths") {
    const auto young = build_graph(GraphKind::young, 4);
    CHECK(young.dim_between(young_vertex(Y({1})), young_vertex(Y({2, 1}))) == 2);
    CHECK(young.dim_between(young_vertex(Y({1, 1})), young_vertex(Y({2, 1}))) == 1);
    CHECK(young.dim_between(young_vertex(Y({2})), young_vertex(Y({2}))) == 1);
    CHECK(young.dim_between(young.root(), young_vertex(Y({2, 1}))) == 2);

    const auto gamma = build_graph(GraphKind::gamma_B, 4);
    const auto paths = gamma.enumerate_paths(gamma.root(), make_vertex(2, Y({})), 100);
    CHECK(paths.size() == 2);
    for (const auto& p : paths) {
        CHECK(p.front() == gamma.root());
        CHECK(p.back() == make_vertex(2, Y({})));
    }
    const auto theta = build_graph(GraphKind::theta, 6);
    CHECK(theta.enumerate_paths(theta.root(), make_vertex(3, DiagramPair{Y({1}), Y({1})}), 100).size() == 3);
    CHECK(young.enumerate_paths(young_vertex(Y({2})), young_vertex(Y({1, 1, 1})), 100).empty());
    CHECK_THROWS_AS(theta.enumerate_paths(theta.root(), make_vertex(6, DiagramPair{Y({2}), Y({2})}), 5),
                    PathLimitExceeded);

    // Path lists agree with DP counts for every vertex pair up to level 5.
    for (unsigned m = 0; m <= 5; ++m)
        for (const auto& u : theta.level(m))
            for (unsigned n = m; n <= 5; ++n)
                for (const auto& v : theta.level(n))
                    CHECK(BigInt(static_cast<unsigned long>(theta.enumerate_paths(u, v, 100000).size())) ==
                          theta.dim_between(u, v));
}

TEST_CASE("pascalization") {
    const auto py = pascalize(build_graph(GraphKind::young, 6));
    CHECK(py.is_pascalized());
    CHECK(py.principal() != nullptr);
    CHECK(payloads(py, 2) == std::set<Payload>{Y({}), Y({2}), Y({1, 1})});

    const auto pt = pascalize(build_graph(GraphKind::theta, 6));
    for (unsigned n = 0; n <= 6; ++n) {
        std::set<Payload> expected;
        for (unsigned m = n % 2; m <= n; m += 2)
            for (unsigned k = 0; 2 * k <= m; ++k)
                for (const auto& l : enumerate_level(k))
                    for (const auto& mu : enumerate_level(m - 2 * k)) expected.insert(DiagramPair{l, mu});
        CHECK(payloads(pt, n) == expected);
    }
}

TEST_CASE("pascalized dimensions count walks on the principal graph") {
    for (auto kind : all_kinds) {
        CAPTURE(to_string(kind));
        const unsigned N = 7;
        const auto g = build_graph(kind, N);
        const auto p = pascalize(g);
        for (unsigned n = 0; n <= N; ++n) {
            const auto walks = oracle::walk_counts(g, n);
            std::size_t nonzero = 0;
            for (const auto& v : p.level(n)) {
                const Vertex base = make_vertex(*v.origin, v.payload);
                auto it = walks.find(base);
                const BigInt expected = it == walks.end() ? BigInt(0) : it->second;
                CHECK(p.dim_root(v) == expected);
                nonzero += expected != 0;
            }
            CHECK(nonzero == walks.size());
        }
    }
}

TEST_CASE("gamma_B is the pascalization of the principal graph") {
    for (unsigned N : {4u, 8u}) {
        const auto report = check_isomorphism_gammaB(pascalize(build_graph(GraphKind::lambda_principal, N)),
                                                     build_graph(GraphKind::gamma_B, N), N);
        CHECK(report.holds);
        CHECK(report.checks > 0);
    }
    // Negative control: one corrupted edge is reported.
    auto lambda = pascalize(build_graph(GraphKind::lambda_principal, 4));
    const Vertex u = lambda.level(2)[0];
    const Vertex v = lambda.level(3)[lambda.up_edges(2, 0)[0].target];
    lambda.set_multiplicity(u, v, 2);
    const auto report = check_isomorphism_gammaB(lambda, build_graph(GraphKind::gamma_B, 4), 4);
    CHECK_FALSE(report.holds);
    REQUIRE(report.first_violation);
    CHECK(report.first_violation->find(u.label()) != std::string::npos);
}

TEST_CASE("coherence of level measures") {
    const auto young = build_graph(GraphKind::young, 5);
    std::vector<LevelMeasure> plancherel;
    for (unsigned n = 0; n <= 5; ++n) {
        LevelMeasure m{n, {}};
        for (const auto& v : young.level(n)) {
            const BigInt d = young.dim_root(v);
            m.mass[v] = make_ratio(d * d, factorial(n));
        }
        plancherel.push_back(m);
    }
    CHECK(coherence_check(young, plancherel).holds);

    // Plancherel up to level 2, then all mass on the one-row shape.
    std::vector<LevelMeasure> mixed(plancherel.begin(), plancherel.begin() + 4);
    for (auto& [v, mass] : mixed[3].mass) mass = v == young_vertex(Y({3})) ? 1 : 0;
    const auto report = coherence_check(young, mixed);
    CHECK_FALSE(report.holds);
    REQUIRE(report.first_violation);

    CHECK(coherence_check(young, std::vector<LevelMeasure>(plancherel.begin(), plancherel.begin() + 1)).holds);

    LevelMeasure bad{1, {{young_vertex(Y({1})), BigRational(1, 2)}}};
    CHECK_THROWS_AS(validate_measure(young, bad), std::invalid_argument);
    LevelMeasure negative{1, {{young_vertex(Y({1})), BigRational(-1)}}};
    CHECK_THROWS_AS(validate_measure(young, negative), std::invalid_argument);
}

TEST_CASE("ergodic ratio sequences") {
    const auto gamma = build_graph(GraphKind::gamma_B, 10);
    std::vector<Vertex> spine;
    for (unsigned n = 0; n <= 10; ++n) spine.push_back(make_vertex(n, Y({})));
    const auto root_ratios = ratio_sequence(gamma, gamma.root(), spine);
    for (const auto& r : root_ratios) CHECK(r == 1);

    const MArray m(10);
    const auto ratios = ratio_sequence(gamma, make_vertex(1, Y({})), spine);
    REQUIRE(ratios.size() == 10);
    for (unsigned n = 1; n <= 10; ++n) {
        BigRational expected(m.at(n - 1, 0), m.at(n, 0));
        expected.canonicalize();
        CHECK(ratios[n - 1] == expected);
    }

    const auto young = build_graph(GraphKind::young, 6);
    std::vector<Vertex> path{young.root()};
    for (auto parts : {std::vector<long long>{1}, {2}, {2, 1}, {3, 1}, {3, 2}, {3, 2, 1}})
        path.push_back(young_vertex(make_diagram(parts)));
    for (const auto& r : ratio_sequence(young, young_vertex(Y({1})), path)) CHECK((r >= 0 && r <= 1));

    std::vector<Vertex> broken{young.root(), young_vertex(Y({1})), young_vertex(Y({1, 1})), young_vertex(Y({3}))};
    CHECK_THROWS_AS(ratio_sequence(young, young.root(), broken), std::invalid_argument);
}

TEST_CASE("exports are deterministic and complete") {
    const auto g = build_graph(GraphKind::gamma_B, 3);
    const auto j = graph_to_json(g);
    CHECK(j == graph_to_json(build_graph(GraphKind::gamma_B, 3)));
    CHECK(j["levels"].size() == 4);
    std::size_t edges = 0;
    for (unsigned n = 0; n < 3; ++n)
        for (std::size_t i = 0; i < g.level(n).size(); ++i) edges += g.up_edges(n, i).size();
    CHECK(j["edges"].size() == edges);
    CHECK(j["levels"][2][0]["dim"] == "2");

    const auto dot = graph_to_dot(g);
    CHECK(dot.find("label=\"2:[]\"") != std::string::npos);
    CHECK(dot == graph_to_dot(build_graph(GraphKind::gamma_B, 3)));

    const auto csv = graph_dims_csv(build_graph(GraphKind::theta, 2));
    CHECK(csv == "level,payload,dim\n0,\"[[],[]]\",1\n1,\"[[],[1]]\",1\n2,\"[[],[2]]\",1\n"
                 "2,\"[[],[1,1]]\",1\n2,\"[[1],[]]\",1\n");
}
