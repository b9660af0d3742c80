#include "cli.hpp"

#include "bratteli/arrays.hpp"
#include "bratteli/diagram.hpp"
#include "bratteli/export.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/trace.hpp"
#include "bratteli/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace bratteli::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr unsigned graph_cap = 30;
constexpr unsigned pascal_graph_cap = 20;

struct RunConfig {
    std::string command;
    std::optional<long long> levels;
    std::string kind;
    std::string category;
    std::string convention = "cycle-length";
    std::string delta;
    std::string format;
    std::string out;
    std::string resume;
    std::vector<std::string> inputs;
};

nlohmann::json config_echo(const RunConfig& c) {
    nlohmann::json j{{"command", c.command}, {"format", c.format}};
    if (c.levels) j["levels"] = *c.levels;
    if (!c.kind.empty()) j["kind"] = c.kind;
    if (!c.category.empty()) j["category"] = c.category;
    if (c.command == "trace") j["convention"] = c.convention;
    if (!c.delta.empty()) j["delta"] = c.delta;
    if (!c.out.empty()) j["out"] = c.out;
    if (!c.resume.empty()) j["resume"] = c.resume;
    if (!c.inputs.empty()) j["inputs"] = c.inputs;
    return j;
}

nlohmann::json envelope(const RunConfig& c) {
    return {{"tool", "bratteli"}, {"version", BRATTELI_VERSION}, {"config", config_echo(c)}};
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (c.format == f) return;
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
    throw UsageError("format '" + c.format + "' is not available for " + c.command + " (use " + list + ")");
}

unsigned require_levels(const RunConfig& c, unsigned cap, const std::string& what) {
    if (!c.levels) throw UsageError(c.command + ": missing level count N");
    if (*c.levels < 0) throw UsageError("N must be non-negative");
    if (*c.levels > static_cast<long long>(cap))
        throw UsageError("N = " + std::to_string(*c.levels) + " exceeds the cap of " + std::to_string(cap) + " for " +
                         what);
    return static_cast<unsigned>(*c.levels);
}

void emit(const RunConfig& c, const std::string& content, std::ostream& out) {
    if (c.out.empty())
        out << content;
    else
        write_file_atomic(c.out, content);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// "pascal_theta" -> (theta, true)
std::pair<GraphKind, bool> parse_graph_spec(const std::string& kind) {
    constexpr std::string_view prefix = "pascal_";
    if (kind.starts_with(prefix)) return {parse_graph_kind(kind.substr(prefix.size())), true};
    return {parse_graph_kind(kind), false};
}

BranchingGraph make_graph(const RunConfig& c) {
    if (c.kind.empty()) throw UsageError(c.command + ": missing graph kind");
    auto [kind, pascal] = parse_graph_spec(c.kind);
    const unsigned n = require_levels(c, pascal ? pascal_graph_cap : graph_cap,
                                      pascal ? "pascalized graphs" : "graph " + c.kind);
    auto g = build_graph(kind, n);
    return pascal ? pascalize(g) : g;
}

std::string graph_text(const BranchingGraph& g) {
    std::ostringstream out;
    out << g.name() << ", levels 0.." << g.level_cap() << ", " << g.vertex_count() << " vertices\n";
    for (unsigned n = 0; n <= g.level_cap(); ++n) {
        out << "level " << n << " (" << g.level(n).size() << "):";
        const auto& dims = g.dims_at(n);
        for (std::size_t i = 0; i < g.level(n).size(); ++i)
            out << ' ' << vertex_payload_json(g.level(n)[i]).dump() << "=" << dims[i].get_str();
        out << '\n';
    }
    return out.str();
}

int cmd_graph(const RunConfig& c, std::ostream& out) {
    require_format(c, {"json", "csv", "dot", "text"});
    const auto g = make_graph(c);
    if (c.format == "json") {
        auto j = envelope(c);
        j["graph"] = graph_to_json(g);
        emit(c, dump(j), out);
    } else if (c.format == "csv") {
        emit(c, graph_dims_csv(g), out);
    } else if (c.format == "dot") {
        emit(c, graph_to_dot(g), out);
    } else {
        emit(c, graph_text(g), out);
    }
    return exit_ok;
}

std::string suite_text(const SuiteReport& s, const nlohmann::json& head, long long ms) {
    std::ostringstream out;
    out << "bratteli " << BRATTELI_VERSION << " verify " << s.name << " " << head["config"].dump() << '\n';
    for (const auto& c : s.checks) {
        out << (c.holds ? "PASS " : "FAIL ") << c.claim << " [" << c.range << "] (" << c.checks << " checks)";
        if (c.first_violation) out << ": " << *c.first_violation;
        out << '\n';
    }
    out << (s.holds() ? "PASS" : "FAIL") << " " << s.name << " in " << ms << " ms\n";
    return out.str();
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    require_format(c, {"json", "text"});
    if (c.kind.empty()) throw UsageError("verify: missing target");
    const auto target = parse_verify_target(c.kind);
    const unsigned n = require_levels(c, verify_cap(target), "verify " + c.kind);
    if (!c.resume.empty() && target != VerifyTarget::conjecture)
        throw UsageError("--resume is only supported for the conjecture sweep");

    const auto start = std::chrono::steady_clock::now();
    SuiteReport suite;
    if (target == VerifyTarget::conjecture && !c.resume.empty()) {
        auto state = ConjectureSweepState::initial();
        std::optional<unsigned> resumed_from;
        if (std::filesystem::exists(c.resume)) {
            state = sweep_state_from_json(read_json_file(c.resume));
            resumed_from = state.last_verified;
        }
        if (n < 3) throw UsageError("conjecture needs N >= 3");
        suite = verify_conjecture(n, state, [&](const ConjectureSweepState& s) {
            write_file_atomic(c.resume, to_json(s).dump() + "\n");
        });
        suite.details["resumed_from"] = resumed_from ? nlohmann::json(*resumed_from) : nlohmann::json(nullptr);
    } else {
        suite = run_verification(target, n);
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    auto j = envelope(c);
    j["duration_ms"] = ms;
    j["holds"] = suite.holds();
    j["report"] = to_json(suite);
    emit(c, c.format == "json" ? dump(j) : suite_text(suite, j, ms), out);
    return suite.holds() ? exit_ok : exit_check_failed;
}

std::optional<BigRational> parse_delta(const RunConfig& c) {
    if (c.delta.empty()) return std::nullopt;
    return parse_rational(c.delta);
}

AlgebraElement read_element(const std::string& path) { return algebra_element_from_json(read_json_file(path)); }

std::string element_text(const AlgebraElement& x) {
    if (x.is_zero()) return "0\n";
    std::string out;
    for (const auto& [p, coeff] : x.terms()) out += coeff.str() + " * " + p.str() + "\n";
    return out;
}

AlgebraElement evaluate_at(const AlgebraElement& x, const BigRational& delta) {
    AlgebraElement out(x.k());
    for (const auto& [p, coeff] : x.terms()) out.add(p, DeltaPolynomial(coeff.evaluate(delta)));
    return out;
}

int cmd_mul(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    if (c.inputs.size() != 2) throw UsageError("mul: expected two element files");
    const auto delta = parse_delta(c);
    const auto x = read_element(c.inputs[0]);
    const auto y = read_element(c.inputs[1]);
    const auto product = algebra_mul(x, y);
    if (c.format == "json") {
        auto j = envelope(c);
        j["k"] = product.k();
        j["product"] = to_json(product);
        if (delta) j["evaluated"] = to_json(evaluate_at(product, *delta));
        emit(c, dump(j), out);
    } else {
        std::string text = element_text(product);
        if (delta) text += "at δ = " + to_string(*delta) + ":\n" + element_text(evaluate_at(product, *delta));
        emit(c, text, out);
    }
    return exit_ok;
}

int cmd_trace(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    if (c.inputs.size() != 2) throw UsageError("trace: expected an element file and a Thoma parameter file");
    const auto conv = parse_convention(c.convention);
    const auto delta = parse_delta(c);
    const auto x = read_element(c.inputs[0]);
    const auto t = thoma_from_json(read_json_file(c.inputs[1]));
    const auto projected = quotient_project(x);
    if (!delta)
        for (const auto& [sigma, coeff] : projected.terms())
            if (coeff.degree() > 0)
                throw UsageError("trace: coefficients depend on δ; pass --delta p/q");
    const BigRational value = lifted_diagram_trace(t, conv, x, delta.value_or(BigRational(0)));
    if (c.format == "json") {
        auto j = envelope(c);
        j["thoma"] = to_json(t);
        j["trace"] = to_string(value);
        emit(c, dump(j), out);
    } else {
        emit(c, to_string(value) + "\n", out);
    }
    return exit_ok;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
    require_format(c, {"json", "csv", "text"});
    if (c.category.empty()) throw UsageError("enumerate-category: missing category");
    const auto category = parse_category(c.category);
    const unsigned k = require_levels(c, max_enumeration_k, "diagram enumeration");
    if (c.format == "json") {
        auto j = envelope(c);
        nlohmann::json list = nlohmann::json::array();
        for_each_partition_diagram(k, k, [&](const SetPartitionDiagram& p) {
            if (category_contains(category, p)) list.push_back(to_json(p));
        });
        j["count"] = list.size();
        j["diagrams"] = std::move(list);
        emit(c, dump(j), out);
        return exit_ok;
    }
    std::ostringstream text;
    std::size_t count = 0;
    if (c.format == "csv") text << "index,blocks\n";
    for_each_partition_diagram(k, k, [&](const SetPartitionDiagram& p) {
        if (!category_contains(category, p)) return;
        if (c.format == "csv")
            text << count << ',' << csv_field(to_json(p).dump()) << '\n';
        else
            text << p.str() << '\n';
        ++count;
    });
    if (c.format == "text") text << count << " diagrams in " << to_string(category) << "(" << k << "," << k << ")\n";
    emit(c, text.str(), out);
    return exit_ok;
}

int cmd_dims(const RunConfig& c, std::ostream& out) {
    require_format(c, {"csv", "json", "text"});
    if (c.kind.empty()) throw UsageError("dims: missing table kind");
    std::ostringstream csv;
    nlohmann::json rows = nlohmann::json::array();
    if (c.kind == "M") {
        const MArray m(require_levels(c, 1000, "the M table"));
        csv << m_table_csv(m);
        for (unsigned n = 0; n <= m.max_level(); ++n)
            for (unsigned l = 0; l <= n; ++l) rows.push_back({{"n", n}, {"l", l}, {"M", m.at(n, l).get_str()}});
    } else if (c.kind == "K") {
        const KArray k(require_levels(c, 200, "the K table"));
        csv << k_table_csv(k);
        for (unsigned n = 0; n <= k.max_level(); ++n)
            k.level(n).for_each([&](unsigned kk, unsigned l, const BigInt& v) {
                rows.push_back({{"n", n}, {"k", kk}, {"l", l}, {"K", v.get_str()}});
            });
    } else if (c.kind == "hyperoct") {
        const auto a = hyperoct_dims(require_levels(c, 1000, "hyperoct"));
        csv << "n,a\n";
        for (std::size_t n = 0; n < a.size(); ++n) {
            csv << n << ',' << a[n].get_str() << '\n';
            rows.push_back({{"n", n}, {"a", a[n].get_str()}});
        }
    } else if (c.kind == "dim_An") {
        const unsigned top = require_levels(c, 1000, "dim_An");
        csv << "n,dim\n";
        for (unsigned n = 0; n <= top; ++n) {
            const auto d = dim_A_n(n).get_str();
            csv << n << ',' << d << '\n';
            rows.push_back({{"n", n}, {"dim", d}});
        }
    } else {
        const auto g = make_graph(c);
        csv << graph_dims_csv(g);
        for (unsigned n = 0; n <= g.level_cap(); ++n)
            for (std::size_t i = 0; i < g.level(n).size(); ++i)
                rows.push_back({{"level", n},
                                {"payload", vertex_payload_json(g.level(n)[i])},
                                {"dim", g.dims_at(n)[i].get_str()}});
    }
    if (c.format == "json") {
        auto j = envelope(c);
        j["rows"] = std::move(rows);
        emit(c, dump(j), out);
    } else if (c.format == "csv") {
        emit(c, csv.str(), out);
    } else {
        // Aligned columns for reading in a terminal.
        std::string text = csv.str();
        for (auto& ch : text)
            if (ch == ',') ch = '\t';
        emit(c, text, out);
    }
    return exit_ok;
}

void add_common(CLI::App* sub, RunConfig& c, const char* default_format) {
    c.format = default_format;
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    sub->add_option("--out", c.out, "write output to PATH (atomically)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Branching graphs, dimension arrays, diagram algebras and Thoma traces", "bratteli"};
    app.set_version_flag("--version", std::string("bratteli ") + BRATTELI_VERSION);
    app.require_subcommand(1);

    RunConfig graph, verify, mul, trace, enumerate, dims;

    auto* g = app.add_subcommand("graph", "build a branching graph and export it with its dimensions");
    add_common(g, graph, "json");
    g->add_option("kind,--kind", graph.kind,
                  "young, gamma_B, theta, lambda_principal, walled, doubled_young, or pascal_<kind>");
    g->add_option("N,--levels", graph.levels, "top level");

    auto* v = app.add_subcommand("verify", "run a verification sweep; exit 1 if any check fails");
    add_common(v, verify, "json");
    v->add_option("target,--kind", verify.kind,
                  "m_properties, conjecture, hyperoct, iso_gammaB, dim_An, factorizations, counts_bridge");
    v->add_option("N,--levels", verify.levels, "sweep bound");
    v->add_option("--resume", verify.resume, "checkpoint file for the conjecture sweep");

    auto* m = app.add_subcommand("mul", "multiply two diagram-algebra elements");
    add_common(m, mul, "text");
    m->add_option("files", mul.inputs, "two element JSON files")->expected(2);
    m->add_option("--delta", mul.delta, "also evaluate at this loop parameter (p/q)");

    auto* t = app.add_subcommand("trace", "evaluate a lifted Thoma trace on a diagram-algebra element");
    add_common(t, trace, "text");
    t->add_option("files", trace.inputs, "element JSON file and Thoma parameter JSON file")->expected(2);
    t->add_option("--delta", trace.delta, "loop parameter (p/q)");
    t->add_option("--convention", trace.convention, "paper-literal or cycle-length")
        ->check(CLI::IsMember({"paper-literal", "cycle-length"}));

    auto* e = app.add_subcommand("enumerate-category", "list the (k,k) diagrams of a category");
    add_common(e, enumerate, "json");
    e->add_option("category,--category", enumerate.category, "S, O, H, B, S' or B'");
    e->add_option("k,--levels", enumerate.levels, "number of upper (and lower) points");

    auto* d = app.add_subcommand("dims", "dimension tables: M, K, hyperoct, dim_An or a graph kind");
    add_common(d, dims, "csv");
    d->add_option("kind,--kind", dims.kind, "table kind");
    d->add_option("N,--levels", dims.levels, "top level");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e2) {
        return app.exit(e2, out, err);
    } catch (const CLI::ParseError& e2) {
        err << "error: " << e2.what() << '\n';
        return exit_usage;
    }

    struct Entry {
        CLI::App* sub;
        RunConfig* cfg;
        int (*fn)(const RunConfig&, std::ostream&);
    };
    const Entry entries[] = {{g, &graph, cmd_graph},  {v, &verify, cmd_verify},       {m, &mul, cmd_mul},
                             {t, &trace, cmd_trace}, {e, &enumerate, cmd_enumerate}, {d, &dims, cmd_dims}};
    for (const auto& entry : entries) {
        if (!entry.sub->parsed()) continue;
        RunConfig& c = *entry.cfg;
        c.command = entry.sub->get_name();
        const auto start = std::chrono::steady_clock::now();
        try {
            const int code = entry.fn(c, out);
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                    .count();
            if (!c.out.empty()) err << c.command << ": wrote " << c.out << " in " << ms << " ms\n";
            return code;
        } catch (const UsageError& ex) {
            err << "error: " << ex.what() << '\n';
        } catch (const std::invalid_argument& ex) {
            err << "error: " << ex.what() << '\n';
        } catch (const std::out_of_range& ex) {
            err << "error: " << ex.what() << '\n';
        } catch (const nlohmann::json::exception& ex) {
            err << "error: " << ex.what() << '\n';
        } catch (const std::runtime_error& ex) {
            err << "error: " << ex.what() << '\n';
        }
        return exit_usage;
    }
    err << "error: no command given\n";
    return exit_usage;
}

}  // namespace bratteli::cli
