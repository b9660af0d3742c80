#include "bratteli/graph.hpp"

#include <stdexcept>

namespace bratteli {

namespace {

using Children = std::vector<std::pair<Vertex, unsigned>>;

Children young_children(const Vertex& v) {
    Children out;
    for (auto& mu : successors(std::get<YoungDiagram>(v.payload))) out.emplace_back(young_vertex(mu), 1);
    return out;
}

// Lazy walks: stay, add a box or remove a box.
Children gamma_b_children(const Vertex& v) {
    const auto& lambda = std::get<YoungDiagram>(v.payload);
    const unsigned n = v.level + 1;
    Children out;
    out.emplace_back(make_vertex(n, lambda), 1);
    for (auto& mu : successors(lambda)) out.emplace_back(make_vertex(n, mu), 1);
    for (auto& mu : predecessors(lambda)) out.emplace_back(make_vertex(n, mu), 1);
    return out;
}

// (l, m) -> (l, m + box) or (l + box, m - box).
Children theta_children(const Vertex& v) {
    const auto& [lambda, mu] = std::get<DiagramPair>(v.payload);
    const unsigned n = v.level + 1;
    Children out;
    for (auto& m : successors(mu)) out.emplace_back(make_vertex(n, DiagramPair{lambda, m}), 1);
    const auto shrunk = predecessors(mu);
    for (auto& l : successors(lambda))
        for (const auto& m : shrunk) out.emplace_back(make_vertex(n, DiagramPair{l, m}), 1);
    return out;
}

// Copy 0 on level n holds Y_n, copy 1 holds Y_{n-1}.
Children lambda_children(const Vertex& v) {
    const auto& [copy, lambda] = std::get<TaggedDiagram>(v.payload);
    const unsigned n = v.level + 1;
    Children out;
    for (auto& mu : successors(lambda)) out.emplace_back(make_vertex(n, TaggedDiagram{copy, mu}), 1);
    if (copy == 0) out.emplace_back(make_vertex(n, TaggedDiagram{1, lambda}), 1);
    return out;
}

// Boxes go alternately to the first and the second diagram.
Children walled_children(const Vertex& v) {
    const auto& [lambda, mu] = std::get<DiagramPair>(v.payload);
    const unsigned n = v.level + 1;
    Children out;
    if (v.level % 2 == 0)
        for (auto& l : successors(lambda)) out.emplace_back(make_vertex(n, DiagramPair{l, mu}), 1);
    else
        for (auto& m : successors(mu)) out.emplace_back(make_vertex(n, DiagramPair{lambda, m}), 1);
    return out;
}

// Y_n sits on levels 2n (copy 0) and 2n+1 (copy 1).
Children doubled_children(const Vertex& v) {
    const auto& [copy, lambda] = std::get<TaggedDiagram>(v.payload);
    const unsigned n = v.level + 1;
    Children out;
    if (copy == 0)
        out.emplace_back(make_vertex(n, TaggedDiagram{1, lambda}), 1);
    else
        for (auto& mu : successors(lambda)) out.emplace_back(make_vertex(n, TaggedDiagram{0, mu}), 1);
    return out;
}

}  // namespace

std::string_view to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::young: return "young";
        case GraphKind::gamma_B: return "gamma_B";
        case GraphKind::theta: return "theta";
        case GraphKind::lambda_principal: return "lambda_principal";
        case GraphKind::walled: return "walled";
        case GraphKind::doubled_young: return "doubled_young";
    }
    throw std::logic_error("unhandled graph kind");
}

GraphKind parse_graph_kind(std::string_view name) {
    for (auto kind : {GraphKind::young, GraphKind::gamma_B, GraphKind::theta, GraphKind::lambda_principal,
                      GraphKind::walled, GraphKind::doubled_young})
        if (to_string(kind) == name) return kind;
    throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

BranchingGraph build_graph(GraphKind kind, unsigned level_cap) {
    const std::string name(to_string(kind));
    const YoungDiagram empty;
    switch (kind) {
        case GraphKind::young: return BranchingGraph(name, young_vertex(empty), young_children, level_cap);
        case GraphKind::gamma_B: return BranchingGraph(name, make_vertex(0, empty), gamma_b_children, level_cap);
        case GraphKind::theta:
            return BranchingGraph(name, make_vertex(0, DiagramPair{empty, empty}), theta_children, level_cap);
        case GraphKind::lambda_principal:
            return BranchingGraph(name, make_vertex(0, TaggedDiagram{0, empty}), lambda_children, level_cap);
        case GraphKind::walled:
            return BranchingGraph(name, make_vertex(0, DiagramPair{empty, empty}), walled_children, level_cap);
        case GraphKind::doubled_young:
            return BranchingGraph(name, make_vertex(0, TaggedDiagram{0, empty}), doubled_children, level_cap);
    }
    throw std::logic_error("unhandled graph kind");
}

BranchingGraph build_graph(std::string_view kind, long long level_cap) {
    if (level_cap < 0) throw std::invalid_argument("level cap must be non-negative");
    return build_graph(parse_graph_kind(kind), static_cast<unsigned>(level_cap));
}

}  // namespace bratteli
