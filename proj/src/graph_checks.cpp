#include "bratteli/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bratteli {

namespace {

// (n, copy c of lambda) |-> (n, lambda)
Vertex forget_copy(const Vertex& v) {
    const auto* tagged = std::get_if<TaggedDiagram>(&v.payload);
    if (!tagged) throw std::invalid_argument("expected a tagged-copy payload: " + v.label());
    return make_vertex(v.level, tagged->diagram);
}

}  // namespace

CheckReport check_isomorphism_gammaB(const BranchingGraph& pascalized_lambda, const BranchingGraph& gamma_B,
                                     unsigned n) {
    CheckReport report;
    report.claim = "pascalize(lambda_principal) ~= gamma_B under the copy-forgetting map";
    report.range = "levels 0.." + std::to_string(n);
    if (pascalized_lambda.level_cap() < n || gamma_B.level_cap() < n)
        throw std::invalid_argument("check_isomorphism_gammaB: graphs not generated to level " + std::to_string(n));

    for (unsigned level = 0; level <= n; ++level) {
        const auto& source = pascalized_lambda.level(level);
        std::set<Vertex> images;
        for (const auto& v : source) {
            Vertex image = forget_copy(v);
            report.record(gamma_B.contains(image), "vertex " + v.label() + " maps outside gamma_B");
            report.record(images.insert(image).second, "two vertices map to " + image.label());
        }
        report.record(images.size() == gamma_B.level(level).size(),
                      "level " + std::to_string(level) + " sizes differ: " + std::to_string(images.size()) +
                          " vs " + std::to_string(gamma_B.level(level).size()));
        if (level == n) break;

        const auto& next = pascalized_lambda.level(level + 1);
        for (std::size_t i = 0; i < source.size(); ++i) {
            Vertex image = forget_copy(source[i]);
            auto gi = gamma_B.find(image);
            if (!gi) continue;
            // Every pascalized edge has an equal counterpart...
            std::size_t mapped_edges = 0;
            for (const auto& e : pascalized_lambda.up_edges(level, i)) {
                Vertex target = forget_copy(next[e.target]);
                unsigned m = gamma_B.multiplicity(image, target);
                report.record(m == e.multiplicity, "edge " + source[i].label() + " -> " + next[e.target].label() +
                                                       " has multiplicity " + std::to_string(e.multiplicity) +
                                                       " but gamma_B has " + std::to_string(m));
                ++mapped_edges;
            }
            // ...and no gamma_B edge is left unmatched.
            report.record(mapped_edges == gamma_B.up_edges(level, *gi).size(),
                          "vertex " + image.label() + " has " + std::to_string(gamma_B.up_edges(level, *gi).size()) +
                              " edges in gamma_B but " + std::to_string(mapped_edges) + " in the pascalization");
        }
    }
    return report;
}

void validate_measure(const BranchingGraph& g, const LevelMeasure& m) {
    BigRational total = 0;
    for (const auto& [v, mass] : m.mass) {
        if (v.level != m.level || !g.contains(v))
            throw std::invalid_argument("measure support outside level " + std::to_string(m.level) + ": " + v.label());
        if (mass < 0) throw std::invalid_argument("negative mass at " + v.label());
        total += mass;
    }
    if (total != 1)
        throw std::invalid_argument("measure on level " + std::to_string(m.level) + " has total mass " +
                                    to_string(total));
}

CheckReport coherence_check(const BranchingGraph& g, std::span<const LevelMeasure> measures) {
    CheckReport report;
    report.claim = "M_n(v) = sum_w m(v,w) dim(v) M_{n+1}(w) / dim(w)";
    report.range = measures.empty() ? "no levels" : "levels 0.." + std::to_string(measures.size() - 1);
    for (std::size_t n = 0; n < measures.size(); ++n) {
        if (measures[n].level != n) throw std::invalid_argument("measures must cover levels 0..N in order");
        validate_measure(g, measures[n]);
    }
    auto mass_of = [](const LevelMeasure& m, const Vertex& v) {
        auto it = m.mass.find(v);
        return it == m.mass.end() ? BigRational(0) : it->second;
    };

    for (std::size_t n = 0; n + 1 < measures.size(); ++n) {
        const auto level = static_cast<unsigned>(n);
        const auto& vertices = g.level(level);
        const auto& next = g.level(level + 1);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const BigInt& dim = g.dim_root(vertices[i]);
            BigRational rhs = 0;
            for (const auto& e : g.up_edges(level, i))
                rhs += BigRational(dim * e.multiplicity) * mass_of(measures[n + 1], next[e.target]) /
                       BigRational(g.dim_root(next[e.target]));
            const BigRational lhs = mass_of(measures[n], vertices[i]);
            report.record(lhs == rhs, "at " + vertices[i].label() + ": M_n = " + to_string(lhs) +
                                          " but the next level induces " + to_string(rhs));
        }
    }
    return report;
}

std::vector<BigRational> ratio_sequence(const BranchingGraph& g, const Vertex& anchor, std::span<const Vertex> path) {
    if (path.empty() || path.front() != g.root()) throw std::invalid_argument("path must start at the root");
    for (std::size_t n = 0; n < path.size(); ++n) {
        if (path[n].level != n || !g.contains(path[n]))
            throw std::invalid_argument("invalid path vertex at position " + std::to_string(n));
        if (n > 0 && g.multiplicity(path[n - 1], path[n]) == 0)
            throw std::invalid_argument("no edge " + path[n - 1].label() + " -> " + path[n].label());
    }
    if (!g.contains(anchor)) throw std::out_of_range("anchor not in graph: " + anchor.label());

    std::vector<BigRational> out;
    for (std::size_t n = anchor.level; n < path.size(); ++n) {
        BigRational r(g.dim_between(anchor, path[n]), g.dim_root(path[n]));
        r.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace bratteli
