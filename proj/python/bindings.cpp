// Thin pybind11 layer. Exact values cross the boundary as decimal strings or
// JSON text; the Python package converts them back.

#include "bratteli/arrays.hpp"
#include "bratteli/diagram.hpp"
#include "bratteli/export.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/trace.hpp"
#include "bratteli/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bratteli;

namespace {

YoungDiagram shape(const std::vector<long long>& parts) { return YoungDiagram::from_parts(parts); }

std::vector<BigRational> rationals(const std::vector<std::string>& xs) {
    std::vector<BigRational> out;
    for (const auto& x : xs) out.push_back(parse_rational(x));
    return out;
}

BranchingGraph graph(const std::string& kind, unsigned levels, bool pascalized) {
    auto g = build_graph(parse_graph_kind(kind), levels);
    return pascalized ? pascalize(g) : g;
}

Permutation permutation(const std::vector<long long>& one_line) { return Permutation::from_one_line(one_line); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.attr("__version__") = BRATTELI_VERSION;

    py::register_exception<std::invalid_argument>(m, "InputError", PyExc_ValueError);
    py::register_exception<nlohmann::json::exception>(m, "JSONError", PyExc_ValueError);

    m.def("dim_young", [](const std::vector<long long>& parts) { return to_string(dim_young(shape(parts))); });
    m.def("partitions", [](unsigned n) {
        std::vector<std::vector<unsigned>> out;
        for (const auto& d : enumerate_level(n)) out.push_back(d.parts());
        return out;
    });

    m.def("graph_json", [](const std::string& kind, unsigned levels, bool pascalized) {
        return graph_to_json(graph(kind, levels, pascalized)).dump();
    });
    m.def("graph_dot", [](const std::string& kind, unsigned levels, bool pascalized) {
        return graph_to_dot(graph(kind, levels, pascalized));
    });

    m.def("m_row", [](unsigned n) {
        std::vector<std::string> out;
        const MArray table(n);
        for (const auto& x : table.row(n)) out.push_back(to_string(x));
        return out;
    });
    m.def("k_value", [](unsigned n, unsigned k, unsigned l) { return to_string(KArray(n).at(n, k, l)); });
    m.def("hyperoct_dims", [](unsigned n) {
        std::vector<std::string> out;
        for (const auto& x : hyperoct_dims(n)) out.push_back(to_string(x));
        return out;
    });
    m.def("dim_A_n", [](unsigned n) { return to_string(dim_A_n(n)); });
    m.def("verify", [](const std::string& target, unsigned n) {
        const auto t = parse_verify_target(target);
        if (n > verify_cap(t)) throw std::invalid_argument("N exceeds the cap for " + target);
        py::gil_scoped_release release;
        return to_json(run_verification(t, n)).dump();
    });

    m.def("enumerate_category", [](const std::string& c, unsigned k) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& p : enumerate_category(parse_category(c), k)) list.push_back(to_json(p));
        return list.dump();
    });
    m.def("count_category", [](const std::string& c, unsigned k) { return count_category(parse_category(c), k); });
    m.def("category_contains", [](const std::string& c, const std::string& blocks, unsigned k, unsigned l) {
        return category_contains(parse_category(c), diagram_from_json(nlohmann::json::parse(blocks), k, l));
    });
    m.def("compose", [](const std::string& p, unsigned k, unsigned l, const std::string& q, unsigned m_) {
        const auto r = compose(diagram_from_json(nlohmann::json::parse(p), k, l),
                               diagram_from_json(nlohmann::json::parse(q), l, m_));
        return py::make_tuple(to_json(r.diagram).dump(), r.loops);
    });
    m.def("involution", [](const std::string& p, unsigned k, unsigned l) {
        return to_json(involution(diagram_from_json(nlohmann::json::parse(p), k, l))).dump();
    });
    m.def("tensor", [](const std::string& p, unsigned k, unsigned l, const std::string& q, unsigned k2, unsigned l2) {
        return to_json(tensor(diagram_from_json(nlohmann::json::parse(p), k, l),
                              diagram_from_json(nlohmann::json::parse(q), k2, l2)))
            .dump();
    });
    m.def("algebra_mul", [](const std::string& x, const std::string& y) {
        const auto a = algebra_element_from_json(nlohmann::json::parse(x));
        const auto b = algebra_element_from_json(nlohmann::json::parse(y));
        return to_json(algebra_mul(a, b)).dump();
    });
    m.def("quotient_project", [](const std::string& x) {
        return to_json(quotient_project(algebra_element_from_json(nlohmann::json::parse(x)))).dump();
    });

    m.def("thoma_trace", [](const std::vector<std::string>& alpha, const std::vector<std::string>& beta,
                            const std::vector<long long>& one_line, const std::string& conv) {
        return to_string(thoma_trace(ThomaParameter(rationals(alpha), rationals(beta)), permutation(one_line),
                                     parse_convention(conv)));
    });
    m.def("lifted_trace", [](const std::string& x, const std::vector<std::string>& alpha,
                             const std::vector<std::string>& beta, const std::string& conv, const std::string& delta) {
        return to_string(lifted_diagram_trace(ThomaParameter(rationals(alpha), rationals(beta)),
                                              parse_convention(conv),
                                              algebra_element_from_json(nlohmann::json::parse(x)),
                                              parse_rational(delta)));
    });
    m.def("lambda_tower_check", [](unsigned n) { return to_json(lambda_tower_trace_check(n)).dump(); });
}
