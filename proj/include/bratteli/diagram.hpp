#pragma once

// Set-partition diagrams and the diagram algebras they span.
//
// A diagram with k upper and l lower points is a set partition of
// {1..k, 1'..l'}. Points are numbered 0..k-1 (upper) and k..k+l-1 (lower);
// externally an upper point i is written i and a lower point i' is written -i.
// The loop parameter delta stays symbolic: coefficients are polynomials in delta.

#include "bratteli/numeric.hpp"
#include "bratteli/young.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bratteli {

class SetPartitionDiagram {
public:
    SetPartitionDiagram() = default;

    /// Canonicalizes arbitrary block labels (one per point) into a
    /// restricted growth string.
    static SetPartitionDiagram from_labels(unsigned k, unsigned l, std::span<const unsigned> labels);

    /// Blocks in signed notation; throws std::invalid_argument unless they
    /// partition {1..k, -1..-l} exactly.
    static SetPartitionDiagram from_blocks(unsigned k, unsigned l, const std::vector<std::vector<long>>& blocks);

    static SetPartitionDiagram identity(unsigned k);

    /// The simple crossing q_i on k strands swapping strands i and i+1 (1-based).
    static SetPartitionDiagram crossing(unsigned k, unsigned i);

    /// Invertible diagram of a permutation: upper i joined to lower sigma(i).
    static SetPartitionDiagram from_permutation(const Permutation& sigma);

    unsigned upper() const noexcept { return k_; }
    unsigned lower() const noexcept { return l_; }
    std::size_t points() const noexcept { return labels_.size(); }
    unsigned block_count() const noexcept { return blocks_; }

    /// Restricted growth string: label of point 0 is 0 and each new label is
    /// one more than the largest so far.
    const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }

    /// Blocks in signed notation, each in point order, ordered by least point.
    std::vector<std::vector<long>> blocks() const;
    std::vector<std::size_t> block_sizes() const;

    std::string str() const;

    friend bool operator==(const SetPartitionDiagram&, const SetPartitionDiagram&) = default;
    friend auto operator<=>(const SetPartitionDiagram&, const SetPartitionDiagram&) = default;

private:
    unsigned k_ = 0;
    unsigned l_ = 0;
    unsigned blocks_ = 0;
    std::vector<std::uint8_t> labels_;
};

/// Largest supported number of points in one diagram.
inline constexpr std::size_t max_diagram_points = 255;

struct Composition {
    SetPartitionDiagram diagram;
    unsigned loops = 0;
};

/// p on top (k -> l), q below (l -> m): p's lower row is glued to q's upper
/// row. Middle components that touch neither outer row are erased and counted.
Composition compose(const SetPartitionDiagram& p, const SetPartitionDiagram& q);

/// Reflection in the horizontal midline.
SetPartitionDiagram involution(const SetPartitionDiagram& p);

/// Side-by-side placement, q to the right of p.
SetPartitionDiagram tensor(const SetPartitionDiagram& p, const SetPartitionDiagram& q);

/// Every block has exactly one upper and one lower point.
bool is_invertible(const SetPartitionDiagram& p);

/// Throws std::invalid_argument if p is not invertible.
Permutation to_permutation(const SetPartitionDiagram& p);

enum class Category { S, O, H, B, S_prime, B_prime };

std::string_view to_string(Category c);

/// Accepts S, O, H, B, S', B' (also S_prime, B_prime).
Category parse_category(std::string_view name);

inline constexpr Category all_categories[] = {Category::S, Category::O,       Category::H,
                                              Category::B, Category::S_prime, Category::B_prime};

bool category_contains(Category c, const SetPartitionDiagram& p);

inline constexpr unsigned max_enumeration_k = 6;

/// Visits every partition of {1..k, 1'..l'} in restricted-growth-string order.
void for_each_partition_diagram(unsigned k, unsigned l, const std::function<void(const SetPartitionDiagram&)>& fn);

/// All (k, k) diagrams of the category in canonical order. Refuses k > 6
/// with std::invalid_argument.
std::vector<SetPartitionDiagram> enumerate_category(Category c, unsigned k);
std::size_t count_category(Category c, unsigned k);

/// Polynomial in delta with exact rational coefficients, ascending powers.
/// The zero polynomial has no coefficients.
class DeltaPolynomial {
public:
    DeltaPolynomial() = default;
    DeltaPolynomial(BigRational constant);
    DeltaPolynomial(long constant) : DeltaPolynomial(BigRational(constant)) {}
    explicit DeltaPolynomial(std::vector<BigRational> coeffs);

    /// c * delta^power
    static DeltaPolynomial monomial(unsigned power, BigRational c = 1);

    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    BigRational evaluate(const BigRational& delta) const;

    DeltaPolynomial& operator+=(const DeltaPolynomial& o);
    DeltaPolynomial& operator-=(const DeltaPolynomial& o);
    DeltaPolynomial& operator*=(const DeltaPolynomial& o);
    friend DeltaPolynomial operator+(DeltaPolynomial a, const DeltaPolynomial& b) { return a += b; }
    friend DeltaPolynomial operator-(DeltaPolynomial a, const DeltaPolynomial& b) { return a -= b; }
    friend DeltaPolynomial operator*(const DeltaPolynomial& a, const DeltaPolynomial& b);
    DeltaPolynomial operator-() const;

    friend bool operator==(const DeltaPolynomial& a, const DeltaPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, highest power first, e.g. "2δ^2 - 1/3".
    std::string str() const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Element of the diagram algebra on k strands: a finite combination of
/// (k, k) diagrams. Zero coefficients are never stored.
class AlgebraElement {
public:
    explicit AlgebraElement(unsigned k = 0) : k_(k) {}

    static AlgebraElement basis(const SetPartitionDiagram& p, DeltaPolynomial c = 1);
    static AlgebraElement unit(unsigned k);

    unsigned k() const noexcept { return k_; }
    const std::map<SetPartitionDiagram, DeltaPolynomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * e_p; throws std::invalid_argument if p is not (k, k).
    void add(const SetPartitionDiagram& p, const DeltaPolynomial& c);
    DeltaPolynomial coefficient(const SetPartitionDiagram& p) const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    unsigned k_;
    std::map<SetPartitionDiagram, DeltaPolynomial> terms_;
};

/// Bilinear extension of e_p e_q = delta^loops e_{p.q}.
AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y);

/// Element of the group algebra of S_k with polynomial coefficients.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(unsigned k = 0) : k_(k) {}

    unsigned k() const noexcept { return k_; }
    const std::map<Permutation, DeltaPolynomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Permutation& sigma, const DeltaPolynomial& c);
    DeltaPolynomial coefficient(const Permutation& sigma) const;

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    unsigned k_;
    std::map<Permutation, DeltaPolynomial> terms_;
};

/// Product with sigma * tau = sigma.then(tau), matching diagram stacking.
GroupAlgebraElement group_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// Drops non-invertible diagrams and sends the rest to their permutations.
GroupAlgebraElement quotient_project(const AlgebraElement& x);

// JSON forms: a diagram is a list of signed blocks, an element a list of
// {"diagram": blocks, "coeffs": ["p/q", ...]} in ascending powers of delta.
nlohmann::json to_json(const SetPartitionDiagram& p);
nlohmann::json to_json(const DeltaPolynomial& c);
nlohmann::json to_json(const AlgebraElement& x);
nlohmann::json to_json(const GroupAlgebraElement& x);

/// Infers k and l from the largest upper and lower labels unless given.
SetPartitionDiagram diagram_from_json(const nlohmann::json& j, std::optional<unsigned> k = std::nullopt,
                                      std::optional<unsigned> l = std::nullopt);
DeltaPolynomial delta_polynomial_from_json(const nlohmann::json& j);

/// Accepts a term list, or {"k": k, "terms": [...]} which also allows zero.
AlgebraElement algebra_element_from_json(const nlohmann::json& j);

}  // namespace bratteli
