#include "bratteli/arrays.hpp"
#include "bratteli/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bratteli;

TEST_CASE("M array values") {
    const MArray m(12);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(3, 1) == 6);
    CHECK(m.at(3, 0) == 4);
    const long expected[] = {1, 1, 2, 4, 10, 26};
    for (long n = 0; n <= 5; ++n) CHECK(m.at(n, 0) == expected[n]);
    for (long n = 0; n <= 12; ++n) {
        CHECK(m.at(n, n) == 1);
        CHECK(m.at(n, n + 1) == 0);
        CHECK(m.at(n, -1) == 0);
        for (long l = 0; l <= n; ++l) CHECK(m.at(n, l) > 0);
        CHECK(m.at(n, 0) == oracle::involutions(static_cast<unsigned>(n)));
    }
    CHECK(m.at(13, 0) == 0);
}

TEST_CASE("M(n,0) counts lazy closed walks on the Young graph") {
    const MArray m(10);
    for (unsigned n = 0; n <= 10; ++n) CHECK(m.at(n, 0) == oracle::lazy_walks(n, {}, {}));
}

TEST_CASE("gamma_B dimensions factor through M") {
    const auto g = build_graph(GraphKind::gamma_B, 10);
    const MArray m(10);
    for (unsigned n = 0; n <= 10; ++n)
        for (const auto& v : g.level(n)) {
            const auto& lambda = std::get<YoungDiagram>(v.payload);
            CHECK(g.dim_root(v) == m.at(n, lambda.size()) * dim_young(lambda));
        }
}

TEST_CASE("M property suite") {
    const auto suite = m_properties_report(50);
    CHECK(suite.holds());
    CHECK(suite.checks.size() >= 5);
    for (const auto& c : suite.checks) CHECK(c.checks > 0);
    const MArray m(5);
    // M(3,0)/M(4,0) = 2/5 < 1/2 = M(2,0)/M(3,0)
    CHECK(ratio_geq(m.at(2, 0), m.at(3, 0), m.at(3, 0), m.at(4, 0)));
    CHECK(make_ratio(m.at(3, 0), m.at(4, 0)) == BigRational(2, 5));
    // 2 * (1/2) <= 3 * (2/4)
    CHECK(make_ratio(2 * m.at(1, 0), m.at(2, 0)) <= make_ratio(3 * m.at(2, 0), m.at(3, 0)));
}

TEST_CASE("K array values and boundary") {
    const KArray k(12);
    CHECK(k.at(2, 1, 0) == 1);
    CHECK(k.at(3, 0, 1) == 4);
    CHECK(k.at(4, 1, 0) == 7);
    CHECK(k.at(4, 0, 2) == 10);
    CHECK(k.at(4, 0, 0) == 4);
    CHECK(k.at(4, 0, 0) == k.at(3, 0, 1));
    CHECK(k.at(0, 0, 0) == 1);
    CHECK(k.at(4, 0, 1) == 0);   // wrong parity
    CHECK(k.at(4, 3, 0) == 0);   // 2k + l > n
    CHECK(k.at(4, -1, 2) == 0);
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned kk = 0; 2 * kk <= n; ++kk) CHECK(k.at(n, kk, n - 2 * kk) == coupled_coefficient(kk, n - 2 * kk));
}

TEST_CASE("pascalized theta dimensions factor through K") {
    const auto p = pascalize(build_graph(GraphKind::theta, 10));
    const KArray k(10);
    for (unsigned n = 0; n <= 10; ++n)
        for (const auto& v : p.level(n)) {
            const auto& [lambda, mu] = std::get<DiagramPair>(v.payload);
            CHECK(p.dim_root(v) == k.at(n, lambda.size(), mu.size()) * dim_young(lambda) * dim_young(mu));
        }
}

TEST_CASE("conjecture sweep") {
    const auto report = conjecture_check(20);
    CHECK(report.holds);
    CHECK_FALSE(report.first_violation);
    CHECK(report.details["last_verified"] == 20);
    // n = 4, (k,l) = (0,0): 1/4 >= max(1/7, 1/10)
    const KArray k(4);
    CHECK(make_ratio(k.at(2, 0, 0), k.at(4, 0, 0)) == BigRational(1, 4));
    CHECK(make_ratio(k.at(2, 1, 0), k.at(4, 1, 0)) == BigRational(1, 7));
    CHECK(make_ratio(k.at(2, 0, 2), k.at(4, 0, 2)) == BigRational(1, 10));
    CHECK_THROWS_AS(conjecture_check(2), std::invalid_argument);
}

TEST_CASE("conjecture sweep resumes from a checkpoint") {
    const auto full = conjecture_check(24);
    nlohmann::json saved;
    auto state = ConjectureSweepState::initial();
    std::vector<unsigned> seen;
    const auto first = conjecture_check(12, state, [&](const ConjectureSweepState& s) {
        saved = to_json(s);
        seen.push_back(s.last_verified);
    });
    CHECK(seen.front() == 3);
    CHECK(seen.back() == 12);
    auto resumed = sweep_state_from_json(saved);
    CHECK(resumed.last_verified == 12);
    const auto second = conjecture_check(24, resumed);
    CHECK(second.holds);
    CHECK(first.checks + second.checks == full.checks);
    CHECK(resumed.last_verified == 24);

    auto boundary = saved;
    boundary["last_verified"] = 7;
    CHECK_THROWS_AS(sweep_state_from_json(boundary), std::invalid_argument);
    CHECK_THROWS_AS(sweep_state_from_json(nlohmann::json{{"last_verified", "x"}}), std::invalid_argument);
    // Entry (k=0,l=0) at even level 12 is interior, so only the boundary check
    // can catch corruption of a boundary entry.
    auto last = saved;
    auto& entries = last["current"]["entries"];
    entries[entries.size() - 1][2] = "999";
    CHECK_THROWS_AS(sweep_state_from_json(last), std::invalid_argument);
}

TEST_CASE("hyperoctahedral sequence") {
    const auto a = hyperoct_dims(15);
    CHECK(a[0] == 1);
    CHECK(a[1] == 1);
    CHECK(a[2] == 4);
    CHECK(a[3] == 31);
    CHECK(make_ratio(a[1], a[2]) <= BigRational(1, 3));
    CHECK(hyperoct_report(15).holds());
    // a_n counts closed walks of length 2n on theta.
    const auto theta = build_graph(GraphKind::theta, 8);
    for (unsigned n = 0; n <= 4; ++n) {
        const auto walks = oracle::walk_counts(theta, 2 * n);
        CHECK(walks.at(theta.root()) == a[n]);
    }
}

TEST_CASE("coupled Young closed forms") {
    const YoungDiagram e;
    const auto one = YoungDiagram::from_parts({1});
    CHECK(coupled_dim_closed_form(e, e) == 1);
    CHECK(coupled_dim_closed_form(one, e) == 1);
    CHECK(coupled_dim_closed_form(one, one) == 3);
    CHECK(coupled_coefficient(1, 1) == 3);

    const auto bessel = oracle::bessel_polynomials(16);
    for (unsigned kk = 0; kk <= 8; ++kk)
        for (unsigned l = 0; l <= 8; ++l) {
            CHECK(coupled_coefficient(kk, l) == coupled_coefficient_double_factorial(kk, l));
            CHECK(coupled_coefficient(kk, l) == bessel[kk + l][kk]);
        }

    const auto theta = build_graph(GraphKind::theta, 8);
    for (unsigned n = 0; n <= 8; ++n)
        for (const auto& v : theta.level(n)) {
            const auto& [lambda, mu] = std::get<DiagramPair>(v.payload);
            const auto paths = theta.enumerate_paths(theta.root(), v, 1'000'000);
            CHECK(BigInt(static_cast<unsigned long>(paths.size())) == coupled_dim_closed_form(lambda, mu));
        }
}

TEST_CASE("dimension of the coupled Young algebras") {
    CHECK(dim_A_n(0) == 1);
    CHECK(dim_A_n(2) == 3);
    CHECK(dim_A_n(3) == 15);
    const auto theta = build_graph(GraphKind::theta, 12);
    for (unsigned n = 0; n <= 12; ++n) {
        BigInt squares = 0;
        for (const auto& d : theta.dims_at(n)) squares += d * d;
        CHECK(dim_A_n(n) == squares);
    }
}
