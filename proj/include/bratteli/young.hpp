#pragma once

#include "bratteli/numeric.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace bratteli {

/// An integer partition in English notation: weakly decreasing positive parts.
/// The empty diagram is the root of the Young graph.
///
/// Ordering is the canonical vertex order used by every enumeration and export:
/// fewer boxes first, then lexicographically *decreasing* part sequences, so
/// that level 4 reads (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
class YoungDiagram {
public:
    YoungDiagram() = default;

    /// Validating constructor; throws std::invalid_argument on increasing or
    /// non-positive parts.
    static YoungDiagram from_parts(std::span<const long long> parts);
    static YoungDiagram from_parts(std::initializer_list<long long> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned size() const noexcept { return size_; }
    std::size_t rows() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i, or 0 past the last row.
    unsigned part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    std::string str() const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend std::strong_ordering operator<=>(const YoungDiagram& a, const YoungDiagram& b);

private:
    explicit YoungDiagram(std::vector<unsigned> parts);

    std::vector<unsigned> parts_;
    unsigned size_ = 0;
};

YoungDiagram make_diagram(std::span<const long long> parts);

/// All diagrams obtained by adding one box, in canonical order.
std::vector<YoungDiagram> successors(const YoungDiagram& lambda);

/// All diagrams obtained by removing one box, in row order of the removed corner.
std::vector<YoungDiagram> predecessors(const YoungDiagram& lambda);

/// Whether mu = lambda + one box.
bool covers(const YoungDiagram& mu, const YoungDiagram& lambda);

/// Whether mu contains lambda as a subdiagram.
bool contains(const YoungDiagram& mu, const YoungDiagram& lambda);

/// Number of standard Young tableaux, by the hook length formula.
BigInt dim_young(const YoungDiagram& lambda);

/// Same quantity by a level-by-level path-count DP over the Young graph.
BigInt dim_young_by_paths(const YoungDiagram& lambda);

/// Number of upward paths lambda -> mu in the Young graph (skew tableau count).
BigInt dim_young_between(const YoungDiagram& lambda, const YoungDiagram& mu);

/// All partitions of n in canonical order.
std::vector<YoungDiagram> enumerate_level(unsigned n);

/// A permutation of {0..k-1}; externally written in one-line 1-based form.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(std::size_t k);

    /// One-line notation with 1-based images; throws std::invalid_argument
    /// on anything that is not a bijection of {1..k}.
    static Permutation from_one_line(std::span<const long long> images);
    static Permutation from_one_line(std::initializer_list<long long> images);

    /// 0-based images.
    static Permutation from_images(std::vector<unsigned> images);

    std::size_t degree() const noexcept { return images_.size(); }
    unsigned operator()(unsigned i) const { return images_.at(i); }
    const std::vector<unsigned>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;

    /// Apply *this first, then other: (p.then(q))(i) = q(p(i)).
    Permutation then(const Permutation& other) const;
    Permutation inverse() const;

    /// Cycles as lists of 0-based points, each starting at its least point.
    std::vector<std::vector<unsigned>> cycles() const;

    std::string one_line() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<unsigned> images_;
};

using CycleType = YoungDiagram;

/// Sorted cycle lengths including fixed points.
CycleType cycle_type(const Permutation& sigma);
CycleType cycle_type(std::span<const long long> one_line);

}  // namespace bratteli

template <>
struct std::hash<bratteli::YoungDiagram> {
    std::size_t operator()(const bratteli::YoungDiagram& d) const noexcept;
};
