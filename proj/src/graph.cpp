#include "bratteli/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bratteli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

nlohmann::json diagram_json(const YoungDiagram& d) { return d.parts(); }

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)); }

}  // namespace

nlohmann::json payload_to_json(const Payload& payload) {
    return std::visit(overloaded{
                          [](const YoungDiagram& d) { return diagram_json(d); },
                          [](const DiagramPair& p) {
                              return nlohmann::json::array({diagram_json(p.first), diagram_json(p.second)});
                          },
                          [](const TaggedDiagram& t) {
                              return nlohmann::json{{"copy", t.copy}, {"diagram", diagram_json(t.diagram)}};
                          },
                      },
                      payload);
}

nlohmann::json vertex_payload_json(const Vertex& v) {
    if (v.origin) return nlohmann::json{{"from", *v.origin}, {"vertex", payload_to_json(v.payload)}};
    return payload_to_json(v.payload);
}

std::string Vertex::label() const { return std::to_string(level) + ":" + vertex_payload_json(*this).dump(); }

Vertex young_vertex(const YoungDiagram& lambda) { return Vertex{lambda.size(), lambda, std::nullopt}; }

Vertex make_vertex(unsigned level, Payload payload, std::optional<unsigned> origin) {
    return Vertex{level, std::move(payload), origin};
}

BranchingGraph::BranchingGraph(std::string name, Vertex root, Expander expand, unsigned cap)
    : name_(std::move(name)), expand_(std::move(expand)) {
    if (root.level != 0) throw std::invalid_argument("root must sit on level 0");
    levels_.push_back({root});
    index_.push_back({{root, 0}});
    up_.push_back({{}});
    down_.push_back({{}});
    dims_.push_back({BigInt(1)});
    extend_to(cap);
}

void BranchingGraph::extend_to(unsigned cap) {
    if (principal_) principal_->extend_to(cap);
    while (level_cap() < cap) generate_next_level();
}

void BranchingGraph::generate_next_level() {
    const unsigned n = level_cap();
    const auto& current = levels_[n];

    std::vector<std::vector<std::pair<Vertex, unsigned>>> children(current.size());
    std::vector<Vertex> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
        for (auto& [child, mult] : expand_(current[i])) {
            if (child.level != n + 1)
                throw std::logic_error(name_ + ": expander produced a vertex off the next level");
            if (mult == 0) continue;
            next.push_back(child);
            children[i].emplace_back(std::move(child), mult);
        }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    std::unordered_map<Vertex, std::size_t> index;
    index.reserve(next.size());
    for (std::size_t j = 0; j < next.size(); ++j) index.emplace(next[j], j);

    std::vector<std::vector<Edge>> down(next.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
        auto& ups = up_[n][i];
        for (const auto& [child, mult] : children[i]) {
            std::size_t j = index.at(child);
            auto it = std::find_if(ups.begin(), ups.end(), [j](const Edge& e) { return e.target == j; });
            if (it == ups.end())
                ups.push_back(Edge{j, mult});
            else
                it->multiplicity += mult;
        }
        std::sort(ups.begin(), ups.end(), [](const Edge& a, const Edge& b) { return a.target < b.target; });
        for (const auto& e : ups) down[e.target].push_back(Edge{i, e.multiplicity});
    }

    levels_.push_back(std::move(next));
    index_.push_back(std::move(index));
    up_.push_back(std::vector<std::vector<Edge>>(levels_.back().size()));
    down_.push_back(std::move(down));
    dims_.emplace_back();
    recompute_dims_from(n + 1);
}

void BranchingGraph::recompute_dims_from(unsigned level) {
    for (unsigned n = std::max(level, 1u); n <= level_cap(); ++n) {
        auto& dims = dims_[n];
        dims.assign(levels_[n].size(), BigInt(0));
        for (std::size_t j = 0; j < dims.size(); ++j)
            for (const auto& e : down_[n][j]) dims[j] += dims_[n - 1][e.target] * e.multiplicity;
    }
}

const std::vector<Vertex>& BranchingGraph::level(unsigned n) const {
    if (n > level_cap())
        throw std::out_of_range(name_ + ": level " + std::to_string(n) + " not generated (cap " +
                                std::to_string(level_cap()) + ")");
    return levels_[n];
}

std::size_t BranchingGraph::vertex_count() const {
    std::size_t total = 0;
    for (const auto& l : levels_) total += l.size();
    return total;
}

std::optional<std::size_t> BranchingGraph::find(const Vertex& v) const {
    if (v.level > level_cap()) return std::nullopt;
    const auto& idx = index_[v.level];
    if (auto it = idx.find(v); it != idx.end()) return it->second;
    return std::nullopt;
}

std::size_t BranchingGraph::index_or_throw(const Vertex& v) const {
    if (auto i = find(v)) return *i;
    throw std::out_of_range(name_ + ": vertex " + v.label() + " not in graph");
}

std::span<const Edge> BranchingGraph::up_edges(unsigned level, std::size_t index) const {
    return up_.at(level).at(index);
}

std::span<const Edge> BranchingGraph::down_edges(unsigned level, std::size_t index) const {
    return down_.at(level).at(index);
}

unsigned BranchingGraph::multiplicity(const Vertex& u, const Vertex& v) const {
    if (v.level != u.level + 1) return 0;
    auto i = find(u);
    auto j = find(v);
    if (!i || !j) return 0;
    for (const auto& e : up_[u.level][*i])
        if (e.target == *j) return e.multiplicity;
    return 0;
}

void BranchingGraph::set_multiplicity(const Vertex& u, const Vertex& v, unsigned m) {
    if (v.level != u.level + 1) throw std::invalid_argument("edges only join adjacent levels");
    std::size_t i = index_or_throw(u);
    std::size_t j = index_or_throw(v);
    auto update = [m](std::vector<Edge>& edges, std::size_t target) {
        auto it = std::find_if(edges.begin(), edges.end(), [target](const Edge& e) { return e.target == target; });
        if (it != edges.end()) {
            if (m == 0)
                edges.erase(it);
            else
                it->multiplicity = m;
        } else if (m != 0) {
            edges.push_back(Edge{target, m});
            std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.target < b.target; });
        }
    };
    update(up_[u.level][i], j);
    update(down_[v.level][j], i);
    recompute_dims_from(v.level);
}

const BigInt& BranchingGraph::dim_root(const Vertex& v) const { return dims_[v.level][index_or_throw(v)]; }

const std::vector<BigInt>& BranchingGraph::dims_at(unsigned n) const {
    level(n);
    return dims_[n];
}

BigInt BranchingGraph::dim_between(const Vertex& u, const Vertex& v) const {
    std::size_t source = index_or_throw(u);
    std::size_t target = index_or_throw(v);
    if (u.level > v.level) throw std::invalid_argument("dim_between requires level(u) <= level(v)");

    std::vector<BigInt> counts(levels_[u.level].size(), BigInt(0));
    counts[source] = 1;
    for (unsigned n = u.level; n < v.level; ++n) {
        std::vector<BigInt> next(levels_[n + 1].size(), BigInt(0));
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] == 0) continue;
            for (const auto& e : up_[n][i]) next[e.target] += counts[i] * e.multiplicity;
        }
        counts = std::move(next);
    }
    return counts[target];
}

std::vector<std::vector<Vertex>> BranchingGraph::enumerate_paths(const Vertex& u, const Vertex& v,
                                                                 std::size_t cap) const {
    std::size_t source = index_or_throw(u);
    std::size_t target = index_or_throw(v);
    std::vector<std::vector<Vertex>> out;
    if (u.level > v.level) return out;

    std::vector<Vertex> path{u};
    auto walk = [&](auto&& self, unsigned n, std::size_t i) -> void {
        if (n == v.level) {
            if (i != target) return;
            if (out.size() == cap) throw PathLimitExceeded(cap);
            out.push_back(path);
            return;
        }
        for (const auto& e : up_[n][i]) {
            path.push_back(levels_[n + 1][e.target]);
            for (unsigned copy = 0; copy < e.multiplicity; ++copy) self(self, n + 1, e.target);
            path.pop_back();
        }
    };
    walk(walk, u.level, source);
    return out;
}

BranchingGraph pascalize(const BranchingGraph& g) {
    if (g.is_pascalized()) throw std::invalid_argument("pascalize: graph is already a pascalization");
    auto base = std::make_shared<BranchingGraph>(g);

    auto expand = [base](const Vertex& v) {
        const unsigned k = *v.origin;
        const Vertex principal_vertex{k, v.payload, std::nullopt};
        const std::size_t i = *base->find(principal_vertex);
        std::vector<std::pair<Vertex, unsigned>> out;
        for (const auto& e : base->up_edges(k, i))
            out.emplace_back(Vertex{v.level + 1, base->level(k + 1)[e.target].payload, k + 1}, e.multiplicity);
        if (k > 0)
            for (const auto& e : base->down_edges(k, i))
                out.emplace_back(Vertex{v.level + 1, base->level(k - 1)[e.target].payload, k - 1}, e.multiplicity);
        return out;
    };

    BranchingGraph out("pascal_" + g.name(), Vertex{0, g.root().payload, 0u}, std::move(expand), 0);
    out.principal_ = base;
    out.extend_to(g.level_cap());
    return out;
}

}  // namespace bratteli

std::size_t std::hash<bratteli::Vertex>::operator()(const bratteli::Vertex& v) const noexcept {
    using namespace bratteli;
    std::hash<YoungDiagram> hd;
    std::size_t h = mix(v.level, v.origin ? *v.origin + 1 : 0);
    h = mix(h, v.payload.index());
    std::visit(overloaded{
                   [&](const YoungDiagram& d) { h = mix(h, hd(d)); },
                   [&](const DiagramPair& p) { h = mix(mix(h, hd(p.first)), hd(p.second)); },
                   [&](const TaggedDiagram& t) { h = mix(mix(h, t.copy), hd(t.diagram)); },
               },
               v.payload);
    return h;
}
