#pragma once

#include "bratteli/numeric.hpp"
#include "bratteli/report.hpp"
#include "bratteli/young.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace bratteli {

enum class GraphKind { young, gamma_B, theta, lambda_principal, walled, doubled_young };

std::string_view to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view name);

struct DiagramPair {
    YoungDiagram first;
    YoungDiagram second;
    friend bool operator==(const DiagramPair&, const DiagramPair&) = default;
    friend std::strong_ordering operator<=>(const DiagramPair&, const DiagramPair&) = default;
};

/// One of several copies of a Young diagram living on different levels.
struct TaggedDiagram {
    unsigned copy = 0;
    YoungDiagram diagram;
    friend bool operator==(const TaggedDiagram&, const TaggedDiagram&) = default;
    friend std::strong_ordering operator<=>(const TaggedDiagram&, const TaggedDiagram&) = default;
};

using Payload = std::variant<YoungDiagram, DiagramPair, TaggedDiagram>;

/// A vertex is identified by its level and payload. Vertices of a pascalized
/// graph additionally remember the level of the principal-graph vertex they
/// project to, since the same payload may sit on several principal levels.
struct Vertex {
    unsigned level = 0;
    Payload payload;
    std::optional<unsigned> origin;

    std::string label() const;
    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend std::strong_ordering operator<=>(const Vertex&, const Vertex&) = default;
};

Vertex young_vertex(const YoungDiagram& lambda);
Vertex make_vertex(unsigned level, Payload payload, std::optional<unsigned> origin = std::nullopt);

nlohmann::json payload_to_json(const Payload& payload);
nlohmann::json vertex_payload_json(const Vertex& v);

struct Edge {
    std::size_t target = 0;
    unsigned multiplicity = 0;
};

class PathLimitExceeded : public std::runtime_error {
public:
    explicit PathLimitExceeded(std::size_t cap)
        : std::runtime_error("path enumeration exceeded cap of " + std::to_string(cap)), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

}  // namespace bratteli

template <>
struct std::hash<bratteli::Vertex> {
    std::size_t operator()(const bratteli::Vertex& v) const noexcept;
};

namespace bratteli {

/// Graded rooted graph generated level by level up to an explicit cap.
/// Levels are stored in canonical vertex order; root-path dimensions are
/// computed as each level is generated. Extending or editing a graph must be
/// serialized by the caller; const queries are safe to share.
class BranchingGraph {
public:
    /// Children of a vertex on the next level, with edge multiplicities.
    using Expander = std::function<std::vector<std::pair<Vertex, unsigned>>(const Vertex&)>;

    BranchingGraph(std::string name, Vertex root, Expander expand, unsigned cap);

    const std::string& name() const noexcept { return name_; }
    unsigned level_cap() const noexcept { return static_cast<unsigned>(levels_.size() - 1); }
    void extend_to(unsigned cap);

    const Vertex& root() const { return levels_.front().front(); }
    const std::vector<Vertex>& level(unsigned n) const;
    std::size_t vertex_count() const;

    std::optional<std::size_t> find(const Vertex& v) const;
    bool contains(const Vertex& v) const { return find(v).has_value(); }

    std::span<const Edge> up_edges(unsigned level, std::size_t index) const;
    std::span<const Edge> down_edges(unsigned level, std::size_t index) const;

    /// m(u, v) for u on level n and v on level n+1; zero otherwise.
    unsigned multiplicity(const Vertex& u, const Vertex& v) const;

    /// Overwrites m(u, v); used to build negative controls. Recomputes dimensions.
    void set_multiplicity(const Vertex& u, const Vertex& v, unsigned m);

    const BigInt& dim_root(const Vertex& v) const;
    const std::vector<BigInt>& dims_at(unsigned level) const;
    BigInt dim_between(const Vertex& u, const Vertex& v) const;

    /// Explicit path enumeration u -> v by depth-first search; throws
    /// PathLimitExceeded once more than `cap` paths exist. A path through an
    /// edge of multiplicity m is listed m times.
    std::vector<std::vector<Vertex>> enumerate_paths(const Vertex& u, const Vertex& v, std::size_t cap) const;

    bool is_pascalized() const noexcept { return principal_ != nullptr; }
    const BranchingGraph* principal() const noexcept { return principal_.get(); }

private:
    friend BranchingGraph pascalize(const BranchingGraph& g);

    std::size_t index_or_throw(const Vertex& v) const;
    void generate_next_level();
    void recompute_dims_from(unsigned level);

    std::string name_;
    Expander expand_;
    std::shared_ptr<BranchingGraph> principal_;
    std::vector<std::vector<Vertex>> levels_;
    std::vector<std::unordered_map<Vertex, std::size_t>> index_;
    std::vector<std::vector<std::vector<Edge>>> up_;
    std::vector<std::vector<std::vector<Edge>>> down_;
    std::vector<std::vector<BigInt>> dims_;
};

/// Builds one of the named graph families up to level_cap. Throws
/// std::invalid_argument on an unknown kind or a negative cap.
BranchingGraph build_graph(GraphKind kind, unsigned level_cap);
BranchingGraph build_graph(std::string_view kind, long long level_cap);

/// Pascalization: level n holds (n, g) for g on principal levels k <= n with
/// k = n mod 2; multiplicities are the undirected multiplicities of the principal
/// graph. The result is generated to g's current cap.
BranchingGraph pascalize(const BranchingGraph& g);

/// Verifies that forgetting copy tags maps pascalize(lambda_principal) onto
/// gamma_B, level by level and edge by edge, up to level n.
CheckReport check_isomorphism_gammaB(const BranchingGraph& pascalized_lambda, const BranchingGraph& gamma_B,
                                     unsigned n);

/// Exact probability distribution on one level.
struct LevelMeasure {
    unsigned level = 0;
    std::map<Vertex, BigRational> mass;
};

/// Throws std::invalid_argument unless masses are non-negative, supported on
/// the level, and sum to exactly 1.
void validate_measure(const BranchingGraph& g, const LevelMeasure& m);

/// Coherence of consecutive level measures:
/// M_n(v) = sum_w m(v,w) dim(v) M_{n+1}(w) / dim(w).
CheckReport coherence_check(const BranchingGraph& g, std::span<const LevelMeasure> measures);

/// dim(anchor, path[n]) / dim(path[n]) for every n >= level(anchor).
std::vector<BigRational> ratio_sequence(const BranchingGraph& g, const Vertex& anchor,
                                        std::span<const Vertex> path);

}  // namespace bratteli
