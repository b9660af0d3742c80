#include "bratteli/verify.hpp"

#include "bratteli/diagram.hpp"
#include "bratteli/graph.hpp"

#include <stdexcept>

namespace bratteli {

namespace {

BigInt sum_of_squares(const std::vector<BigInt>& dims) {
    BigInt total = 0;
    for (const auto& d : dims) total += d * d;
    return total;
}

template <class T>
const T& payload_as(const Vertex& v) {
    return std::get<T>(v.payload);
}

}  // namespace

std::string_view to_string(VerifyTarget t) {
    switch (t) {
        case VerifyTarget::m_properties: return "m_properties";
        case VerifyTarget::conjecture: return "conjecture";
        case VerifyTarget::hyperoct: return "hyperoct";
        case VerifyTarget::iso_gammaB: return "iso_gammaB";
        case VerifyTarget::dim_An: return "dim_An";
        case VerifyTarget::factorizations: return "factorizations";
        case VerifyTarget::counts_bridge: return "counts_bridge";
    }
    throw std::logic_error("unhandled verify target");
}

VerifyTarget parse_verify_target(std::string_view name) {
    for (auto t : {VerifyTarget::m_properties, VerifyTarget::conjecture, VerifyTarget::hyperoct,
                   VerifyTarget::iso_gammaB, VerifyTarget::dim_An, VerifyTarget::factorizations,
                   VerifyTarget::counts_bridge})
        if (to_string(t) == name) return t;
    throw std::invalid_argument("unknown verify target '" + std::string(name) + "'");
}

unsigned verify_cap(VerifyTarget t) {
    switch (t) {
        case VerifyTarget::m_properties: return 1000;
        case VerifyTarget::conjecture: return 200;
        case VerifyTarget::hyperoct: return 200;
        case VerifyTarget::iso_gammaB: return 14;
        case VerifyTarget::dim_An: return 16;
        case VerifyTarget::factorizations: return 12;
        case VerifyTarget::counts_bridge: return max_enumeration_k;
    }
    throw std::logic_error("unhandled verify target");
}

SuiteReport verify_m_properties(unsigned N) {
    if (N < 2) throw std::invalid_argument("m_properties needs N >= 2");
    return m_properties_report(N);
}

SuiteReport verify_conjecture(unsigned N) {
    auto state = ConjectureSweepState::initial();
    return verify_conjecture(N, state, {});
}

SuiteReport verify_conjecture(unsigned N, ConjectureSweepState& state,
                              const std::function<void(const ConjectureSweepState&)>& checkpoint) {
    if (N < 3) throw std::invalid_argument("conjecture needs N >= 3");
    SuiteReport suite;
    suite.name = "conjecture";
    suite.checks.push_back(conjecture_check(N, state, checkpoint));
    return suite;
}

SuiteReport verify_hyperoct(unsigned N) { return hyperoct_report(N); }

SuiteReport verify_iso_gammaB(unsigned N) {
    const auto lambda = pascalize(build_graph(GraphKind::lambda_principal, N));
    const auto gamma = build_graph(GraphKind::gamma_B, N);
    SuiteReport suite;
    suite.name = "iso_gammaB";
    suite.checks.push_back(check_isomorphism_gammaB(lambda, gamma, N));
    return suite;
}

SuiteReport verify_dim_An(unsigned N) {
    const auto theta = build_graph(GraphKind::theta, N);
    CheckReport check{.claim = "dim A_n = sum over theta level n of dim^2", .range = "n <= " + std::to_string(N)};
    nlohmann::json values = nlohmann::json::array();
    for (unsigned n = 0; n <= N; ++n) {
        const BigInt closed = dim_A_n(n);
        const BigInt squares = sum_of_squares(theta.dims_at(n));
        check.record(closed == squares, [&] {
            return "n=" + std::to_string(n) + ": closed form " + to_string(closed) + ", sum of squares " +
                   to_string(squares);
        });
        values.push_back(to_string(closed));
    }
    SuiteReport suite;
    suite.name = "dim_An";
    suite.checks.push_back(std::move(check));
    suite.details["dim_A_n"] = values;
    return suite;
}

SuiteReport verify_factorizations(unsigned N) {
    SuiteReport suite;
    suite.name = "factorizations";
    const std::string range = "levels <= " + std::to_string(N);

    {
        const auto gamma = build_graph(GraphKind::gamma_B, N);
        const MArray m(N);
        CheckReport c{.claim = "dim_{gamma_B}(n, lambda) = M(n, |lambda|) dim(lambda)", .range = range};
        for (unsigned n = 0; n <= N; ++n) {
            const auto& vs = gamma.level(n);
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const auto& lambda = payload_as<YoungDiagram>(vs[i]);
                c.record(gamma.dims_at(n)[i] == m.at(n, lambda.size()) * dim_young(lambda),
                         [&] { return "at " + vs[i].label(); });
            }
        }
        suite.checks.push_back(std::move(c));
    }

    const auto theta = build_graph(GraphKind::theta, N);
    {
        const auto pt = pascalize(theta);
        const KArray k(N);
        CheckReport c{.claim = "dim_{P(theta)}(n, (lambda, mu)) = K(n, |lambda|, |mu|) dim(lambda) dim(mu)",
                      .range = range};
        for (unsigned n = 0; n <= N; ++n) {
            const auto& vs = pt.level(n);
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const auto& [lambda, mu] = payload_as<DiagramPair>(vs[i]);
                c.record(pt.dims_at(n)[i] == k.at(n, lambda.size(), mu.size()) * dim_young(lambda) * dim_young(mu),
                         [&] { return "at " + vs[i].label(); });
            }
        }
        suite.checks.push_back(std::move(c));
    }

    {
        CheckReport c{.claim = "both theta closed forms equal dim_root(theta)", .range = range};
        for (unsigned n = 0; n <= N; ++n) {
            const auto& vs = theta.level(n);
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const auto& [lambda, mu] = payload_as<DiagramPair>(vs[i]);
                bool ok = false;
                std::string why;
                try {
                    ok = coupled_dim_closed_form(lambda, mu) == theta.dims_at(n)[i];
                } catch (const std::logic_error& e) {
                    why = e.what();
                }
                c.record(ok, [&] { return "at " + vs[i].label() + (why.empty() ? "" : ": " + why); });
            }
        }
        suite.checks.push_back(std::move(c));
    }

    {
        const unsigned top = std::min(N, 8u);
        CheckReport c{.claim = "theta closed form equals explicit path enumeration",
                      .range = "levels <= " + std::to_string(top)};
        for (unsigned n = 0; n <= top; ++n)
            for (const auto& v : theta.level(n)) {
                const auto& [lambda, mu] = payload_as<DiagramPair>(v);
                const auto paths = theta.enumerate_paths(theta.root(), v, 10'000'000);
                c.record(BigInt(static_cast<unsigned long>(paths.size())) == coupled_dim_closed_form(lambda, mu),
                         [&] { return "at " + v.label() + ": " + std::to_string(paths.size()) + " paths"; });
            }
        suite.checks.push_back(std::move(c));
    }

    {
        const unsigned top = std::min(N, 6u);
        const auto py = pascalize(build_graph(GraphKind::young, top));
        CheckReport c{.claim = "dim_theta(u; v) = dim_Y(lambda; lambda~) dim_{P(Y)}(mu; mu~)",
                      .range = "all vertex pairs up to level " + std::to_string(top)};
        for (unsigned m = 0; m <= top; ++m)
            for (const auto& u : theta.level(m))
                for (unsigned n = m; n <= top; ++n)
                    for (const auto& v : theta.level(n)) {
                        const auto& [l0, m0] = payload_as<DiagramPair>(u);
                        const auto& [l1, m1] = payload_as<DiagramPair>(v);
                        const BigInt lhs = theta.dim_between(u, v);
                        const BigInt rhs = dim_young_between(l0, l1) *
                                           py.dim_between(make_vertex(m, m0, m0.size()), make_vertex(n, m1, m1.size()));
                        c.record(lhs == rhs, [&] {
                            return u.label() + " -> " + v.label() + ": " + to_string(lhs) + " vs " + to_string(rhs);
                        });
                    }
        suite.checks.push_back(std::move(c));
    }
    return suite;
}

SuiteReport verify_counts_bridge(unsigned N) {
    if (N > max_enumeration_k)
        throw std::invalid_argument("counts_bridge enumerates diagrams and is limited to N <= " +
                                    std::to_string(max_enumeration_k));
    const auto py = pascalize(build_graph(GraphKind::young, N));
    const auto gamma = build_graph(GraphKind::gamma_B, N);
    const auto pt = pascalize(build_graph(GraphKind::theta, N));
    const auto pd = pascalize(build_graph(GraphKind::doubled_young, 2 * N));

    struct Row {
        const char* graph;
        const BranchingGraph* g;
        unsigned level_factor;
        Category category;
    };
    const Row rows[] = {{"pascalize(young)", &py, 1, Category::O},
                        {"gamma_B", &gamma, 1, Category::B},
                        {"pascalize(theta)", &pt, 1, Category::H},
                        {"pascalize(doubled_young)", &pd, 2, Category::S}};
    SuiteReport suite;
    suite.name = "counts_bridge";
    for (const auto& row : rows) {
        CheckReport c{.claim = std::string("sum of dim^2 on ") + row.graph + " = |" + std::string(to_string(row.category)) +
                               "(n,n)|",
                      .range = "n <= " + std::to_string(N)};
        nlohmann::json counts = nlohmann::json::array();
        for (unsigned n = 0; n <= N; ++n) {
            const BigInt squares = sum_of_squares(row.g->dims_at(row.level_factor * n));
            const std::size_t count = count_category(row.category, n);
            c.record(squares == BigInt(static_cast<unsigned long>(count)), [&] {
                return "n=" + std::to_string(n) + ": " + to_string(squares) + " vs " + std::to_string(count);
            });
            counts.push_back(count);
        }
        c.details["diagram_counts"] = counts;
        suite.checks.push_back(std::move(c));
    }
    return suite;
}

SuiteReport run_verification(VerifyTarget t, unsigned N) {
    if (N > verify_cap(t))
        throw std::invalid_argument("N = " + std::to_string(N) + " exceeds the cap of " +
                                    std::to_string(verify_cap(t)) + " for " + std::string(to_string(t)));
    switch (t) {
        case VerifyTarget::m_properties: return verify_m_properties(N);
        case VerifyTarget::conjecture: return verify_conjecture(N);
        case VerifyTarget::hyperoct: return verify_hyperoct(N);
        case VerifyTarget::iso_gammaB: return verify_iso_gammaB(N);
        case VerifyTarget::dim_An: return verify_dim_An(N);
        case VerifyTarget::factorizations: return verify_factorizations(N);
        case VerifyTarget::counts_bridge: return verify_counts_bridge(N);
    }
    throw std::logic_error("unhandled verify target");
}

}  // namespace bratteli
