#include "bratteli/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bratteli {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

void check_point_count(std::size_t n) {
    if (n > max_diagram_points)
        throw std::invalid_argument("diagram with " + std::to_string(n) + " points exceeds the supported " +
                                    std::to_string(max_diagram_points));
}

// Signed label of point index i in a diagram with k upper points.
long signed_point(unsigned k, std::size_t i) {
    return i < k ? static_cast<long>(i) + 1 : -static_cast<long>(i - k) - 1;
}

}  // namespace

SetPartitionDiagram SetPartitionDiagram::from_labels(unsigned k, unsigned l, std::span<const unsigned> labels) {
    const std::size_t n = std::size_t{k} + l;
    check_point_count(n);
    if (labels.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
    SetPartitionDiagram d;
    d.k_ = k;
    d.l_ = l;
    d.labels_.resize(n);
    std::map<unsigned, std::uint8_t> renamed;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = renamed.try_emplace(labels[i], static_cast<std::uint8_t>(renamed.size()));
        d.labels_[i] = it->second;
    }
    d.blocks_ = static_cast<unsigned>(renamed.size());
    return d;
}

SetPartitionDiagram SetPartitionDiagram::from_blocks(unsigned k, unsigned l,
                                                     const std::vector<std::vector<long>>& blocks) {
    const std::size_t n = std::size_t{k} + l;
    check_point_count(n);
    std::vector<unsigned> labels(n, ~0u);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block");
        for (long x : blocks[b]) {
            std::size_t idx;
            if (x > 0 && x <= static_cast<long>(k))
                idx = static_cast<std::size_t>(x - 1);
            else if (x < 0 && -x <= static_cast<long>(l))
                idx = k + static_cast<std::size_t>(-x - 1);
            else
                throw std::invalid_argument("point " + std::to_string(x) + " outside a (" + std::to_string(k) + ", " +
                                            std::to_string(l) + ") diagram");
            if (labels[idx] != ~0u) throw std::invalid_argument("point " + std::to_string(x) + " appears twice");
            labels[idx] = static_cast<unsigned>(b);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (labels[i] == ~0u)
            throw std::invalid_argument("point " + std::to_string(signed_point(k, i)) + " is not covered");
    return from_labels(k, l, labels);
}

SetPartitionDiagram SetPartitionDiagram::identity(unsigned k) {
    return from_permutation(Permutation::identity(k));
}

SetPartitionDiagram SetPartitionDiagram::crossing(unsigned k, unsigned i) {
    if (i < 1 || i >= k)
        throw std::invalid_argument("crossing q_" + std::to_string(i) + " needs 1 <= i < k = " + std::to_string(k));
    std::vector<unsigned> images(k);
    std::iota(images.begin(), images.end(), 0u);
    std::swap(images[i - 1], images[i]);
    return from_permutation(Permutation::from_images(std::move(images)));
}

SetPartitionDiagram SetPartitionDiagram::from_permutation(const Permutation& sigma) {
    const auto k = static_cast<unsigned>(sigma.degree());
    std::vector<unsigned> labels(2 * std::size_t{k});
    for (unsigned i = 0; i < k; ++i) {
        labels[i] = i;
        labels[k + sigma(i)] = i;
    }
    return from_labels(k, k, labels);
}

std::vector<std::vector<long>> SetPartitionDiagram::blocks() const {
    std::vector<std::vector<long>> out(blocks_);
    // Labels are a restricted growth string, so block b first appears before b+1.
    for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(signed_point(k_, i));
    return out;
}

std::vector<std::size_t> SetPartitionDiagram::block_sizes() const {
    std::vector<std::size_t> sizes(blocks_, 0);
    for (auto b : labels_) ++sizes[b];
    return sizes;
}

std::string SetPartitionDiagram::str() const {
    std::ostringstream out;
    out << '{';
    bool first_block = true;
    for (const auto& block : blocks()) {
        if (!first_block) out << ',';
        first_block = false;
        out << '{';
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j) out << ',';
            if (block[j] > 0)
                out << block[j];
            else
                out << -block[j] << '\'';
        }
        out << '}';
    }
    out << '}';
    return out.str();
}

Composition compose(const SetPartitionDiagram& p, const SetPartitionDiagram& q) {
    if (p.lower() != q.upper())
        throw std::invalid_argument("cannot compose: " + std::to_string(p.lower()) + " lower points on top of " +
                                    std::to_string(q.upper()) + " upper points");
    const std::size_t k = p.upper(), l = p.lower(), m = q.lower();
    check_point_count(k + m);
    // [0,k) outer upper, [k,k+l) middle, [k+l,k+l+m) outer lower.
    UnionFind uf(k + l + m);
    {
        std::vector<std::size_t> first(p.block_count(), SIZE_MAX);
        for (std::size_t i = 0; i < k + l; ++i) {
            auto& f = first[p.labels()[i]];
            if (f == SIZE_MAX) f = i;
            else uf.unite(f, i);
        }
    }
    {
        std::vector<std::size_t> first(q.block_count(), SIZE_MAX);
        for (std::size_t i = 0; i < l + m; ++i) {
            const std::size_t point = k + i;
            auto& f = first[q.labels()[i]];
            if (f == SIZE_MAX) f = point;
            else uf.unite(f, point);
        }
    }

    std::vector<unsigned> labels(k + m);
    std::vector<char> outer_root(k + l + m, 0);
    for (std::size_t i = 0; i < k; ++i) {
        labels[i] = static_cast<unsigned>(uf.find(i));
        outer_root[labels[i]] = 1;
    }
    for (std::size_t i = 0; i < m; ++i) {
        labels[k + i] = static_cast<unsigned>(uf.find(k + l + i));
        outer_root[labels[k + i]] = 1;
    }
    unsigned loops = 0;
    std::vector<char> seen(k + l + m, 0);
    for (std::size_t i = k; i < k + l; ++i) {
        const std::size_t r = uf.find(i);
        if (!outer_root[r] && !seen[r]) {
            seen[r] = 1;
            ++loops;
        }
    }
    return {SetPartitionDiagram::from_labels(p.upper(), q.lower(), labels), loops};
}

SetPartitionDiagram involution(const SetPartitionDiagram& p) {
    const unsigned k = p.upper(), l = p.lower();
    std::vector<unsigned> labels(p.points());
    for (unsigned i = 0; i < l; ++i) labels[i] = p.labels()[k + i];
    for (unsigned i = 0; i < k; ++i) labels[l + i] = p.labels()[i];
    return SetPartitionDiagram::from_labels(l, k, labels);
}

SetPartitionDiagram tensor(const SetPartitionDiagram& p, const SetPartitionDiagram& q) {
    const unsigned k = p.upper() + q.upper(), l = p.lower() + q.lower();
    check_point_count(std::size_t{k} + l);
    const unsigned shift = p.block_count();
    std::vector<unsigned> labels;
    labels.reserve(std::size_t{k} + l);
    for (unsigned i = 0; i < p.upper(); ++i) labels.push_back(p.labels()[i]);
    for (unsigned i = 0; i < q.upper(); ++i) labels.push_back(shift + q.labels()[i]);
    for (unsigned i = 0; i < p.lower(); ++i) labels.push_back(p.labels()[p.upper() + i]);
    for (unsigned i = 0; i < q.lower(); ++i) labels.push_back(shift + q.labels()[q.upper() + i]);
    return SetPartitionDiagram::from_labels(k, l, labels);
}

bool is_invertible(const SetPartitionDiagram& p) {
    if (p.upper() != p.lower() || p.block_count() != p.upper()) return false;
    std::vector<unsigned> up(p.block_count(), 0), down(p.block_count(), 0);
    for (unsigned i = 0; i < p.upper(); ++i) ++up[p.labels()[i]];
    for (unsigned i = 0; i < p.lower(); ++i) ++down[p.labels()[p.upper() + i]];
    for (unsigned b = 0; b < p.block_count(); ++b)
        if (up[b] != 1 || down[b] != 1) return false;
    return true;
}

Permutation to_permutation(const SetPartitionDiagram& p) {
    if (!is_invertible(p)) throw std::invalid_argument("diagram " + p.str() + " is not invertible");
    const unsigned k = p.upper();
    std::vector<unsigned> lower_of_block(k);
    for (unsigned j = 0; j < k; ++j) lower_of_block[p.labels()[k + j]] = j;
    std::vector<unsigned> images(k);
    for (unsigned i = 0; i < k; ++i) images[i] = lower_of_block[p.labels()[i]];
    return Permutation::from_images(std::move(images));
}

std::string_view to_string(Category c) {
    switch (c) {
        case Category::S: return "S";
        case Category::O: return "O";
        case Category::H: return "H";
        case Category::B: return "B";
        case Category::S_prime: return "S'";
        case Category::B_prime: return "B'";
    }
    throw std::logic_error("unhandled category");
}

Category parse_category(std::string_view name) {
    if (name == "S_prime" || name == "Sprime") return Category::S_prime;
    if (name == "B_prime" || name == "Bprime") return Category::B_prime;
    for (auto c : all_categories)
        if (to_string(c) == name) return c;
    throw std::invalid_argument("unknown category '" + std::string(name) + "' (expected S, O, H, B, S' or B')");
}

bool category_contains(Category c, const SetPartitionDiagram& p) {
    const auto sizes = p.block_sizes();
    auto all = [&](auto pred) { return std::all_of(sizes.begin(), sizes.end(), pred); };
    auto count = [&](auto pred) { return std::count_if(sizes.begin(), sizes.end(), pred); };
    switch (c) {
        case Category::S: return true;
        case Category::O: return all([](std::size_t s) { return s == 2; });
        case Category::H: return all([](std::size_t s) { return s % 2 == 0; });
        case Category::B: return all([](std::size_t s) { return s <= 2; });
        case Category::S_prime: return count([](std::size_t s) { return s % 2 == 1; }) % 2 == 0;
        case Category::B_prime:
            return all([](std::size_t s) { return s <= 2; }) && count([](std::size_t s) { return s == 1; }) % 2 == 0;
    }
    throw std::logic_error("unhandled category");
}

void for_each_partition_diagram(unsigned k, unsigned l, const std::function<void(const SetPartitionDiagram&)>& fn) {
    const std::size_t n = std::size_t{k} + l;
    check_point_count(n);
    if (n == 0) {
        fn(SetPartitionDiagram::from_labels(0, 0, {}));
        return;
    }
    std::vector<unsigned> rgs(n, 0);
    std::vector<unsigned> prefix_max(n, 0);  // max of rgs[0..i]
    // Iterate restricted growth strings in lexicographic order.
    while (true) {
        fn(SetPartitionDiagram::from_labels(k, l, rgs));
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

namespace {

void check_enumeration_size(unsigned k) {
    if (k > max_enumeration_k)
        throw std::invalid_argument("enumeration of (k, k) diagrams is limited to k <= " +
                                    std::to_string(max_enumeration_k) + "; got k = " + std::to_string(k));
}

}  // namespace

std::vector<SetPartitionDiagram> enumerate_category(Category c, unsigned k) {
    check_enumeration_size(k);
    std::vector<SetPartitionDiagram> out;
    for_each_partition_diagram(k, k, [&](const SetPartitionDiagram& p) {
        if (category_contains(c, p)) out.push_back(p);
    });
    return out;
}

std::size_t count_category(Category c, unsigned k) {
    check_enumeration_size(k);
    std::size_t n = 0;
    for_each_partition_diagram(k, k, [&](const SetPartitionDiagram& p) { n += category_contains(c, p); });
    return n;
}

// ---- DeltaPolynomial ----

DeltaPolynomial::DeltaPolynomial(BigRational constant) {
    constant.canonicalize();
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

DeltaPolynomial::DeltaPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

DeltaPolynomial DeltaPolynomial::monomial(unsigned power, BigRational c) {
    std::vector<BigRational> coeffs(power + 1, BigRational(0));
    coeffs[power] = std::move(c);
    return DeltaPolynomial(std::move(coeffs));
}

void DeltaPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational DeltaPolynomial::evaluate(const BigRational& at) const {
    BigRational delta = at;
    delta.canonicalize();
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * delta + *it;
    return acc;
}

DeltaPolynomial& DeltaPolynomial::operator+=(const DeltaPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

DeltaPolynomial& DeltaPolynomial::operator-=(const DeltaPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

DeltaPolynomial operator*(const DeltaPolynomial& a, const DeltaPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return DeltaPolynomial(std::move(out));
}

DeltaPolynomial& DeltaPolynomial::operator*=(const DeltaPolynomial& o) { return *this = *this * o; }

DeltaPolynomial DeltaPolynomial::operator-() const {
    DeltaPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string DeltaPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigRational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigRational mag = negative ? BigRational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (i == 0 || mag != 1) out += to_string(mag);
        if (i >= 1) out += "δ";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

// ---- AlgebraElement ----

AlgebraElement AlgebraElement::basis(const SetPartitionDiagram& p, DeltaPolynomial c) {
    if (p.upper() != p.lower())
        throw std::invalid_argument("algebra basis diagrams need equal upper and lower rows: " + p.str());
    AlgebraElement x(p.upper());
    x.add(p, c);
    return x;
}

AlgebraElement AlgebraElement::unit(unsigned k) { return basis(SetPartitionDiagram::identity(k)); }

void AlgebraElement::add(const SetPartitionDiagram& p, const DeltaPolynomial& c) {
    if (p.upper() != k_ || p.lower() != k_)
        throw std::invalid_argument("diagram " + p.str() + " does not have " + std::to_string(k_) +
                                    " upper and lower points");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DeltaPolynomial AlgebraElement::coefficient(const SetPartitionDiagram& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? DeltaPolynomial{} : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (o.k_ != k_) throw std::invalid_argument("adding elements on different numbers of strands");
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (o.k_ != k_) throw std::invalid_argument("subtracting elements on different numbers of strands");
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.k() != y.k())
        throw std::invalid_argument("cannot multiply elements on " + std::to_string(x.k()) + " and " +
                                    std::to_string(y.k()) + " strands");
    AlgebraElement out(x.k());
    for (const auto& [p, a] : x.terms())
        for (const auto& [q, b] : y.terms()) {
            auto [pq, loops] = compose(p, q);
            out.add(pq, a * b * DeltaPolynomial::monomial(loops));
        }
    return out;
}

// ---- group algebra ----

void GroupAlgebraElement::add(const Permutation& sigma, const DeltaPolynomial& c) {
    if (sigma.degree() != k_)
        throw std::invalid_argument("permutation of degree " + std::to_string(sigma.degree()) + " in S_" +
                                    std::to_string(k_));
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(sigma, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DeltaPolynomial GroupAlgebraElement::coefficient(const Permutation& sigma) const {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? DeltaPolynomial{} : it->second;
}

GroupAlgebraElement group_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    if (x.k() != y.k()) throw std::invalid_argument("cannot multiply group algebra elements of different degree");
    GroupAlgebraElement out(x.k());
    for (const auto& [s, a] : x.terms())
        for (const auto& [t, b] : y.terms()) out.add(s.then(t), a * b);
    return out;
}

GroupAlgebraElement quotient_project(const AlgebraElement& x) {
    GroupAlgebraElement out(x.k());
    for (const auto& [p, c] : x.terms())
        if (is_invertible(p)) out.add(to_permutation(p), c);
    return out;
}

// ---- JSON ----

nlohmann::json to_json(const SetPartitionDiagram& p) { return p.blocks(); }

nlohmann::json to_json(const DeltaPolynomial& c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : c.coeffs()) out.push_back(to_string(x));
    return out;
}

nlohmann::json to_json(const AlgebraElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [p, c] : x.terms()) out.push_back({{"diagram", to_json(p)}, {"coeffs", to_json(c)}});
    return out;
}

nlohmann::json to_json(const GroupAlgebraElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [s, c] : x.terms()) {
        std::vector<unsigned> one_line;
        for (auto i : s.images()) one_line.push_back(i + 1);
        out.push_back({{"permutation", one_line}, {"coeffs", to_json(c)}});
    }
    return out;
}

SetPartitionDiagram diagram_from_json(const nlohmann::json& j, std::optional<unsigned> k, std::optional<unsigned> l) {
    if (!j.is_array()) throw std::invalid_argument("a diagram must be a list of blocks");
    std::vector<std::vector<long>> blocks;
    long max_upper = 0, max_lower = 0;
    for (const auto& block : j) {
        if (!block.is_array()) throw std::invalid_argument("each block must be a list of signed points");
        auto& b = blocks.emplace_back();
        for (const auto& x : block) {
            if (!x.is_number_integer() || x.get<long>() == 0)
                throw std::invalid_argument("points are nonzero integers, got " + x.dump());
            const long v = x.get<long>();
            b.push_back(v);
            if (v > 0) max_upper = std::max(max_upper, v);
            else max_lower = std::max(max_lower, -v);
        }
    }
    if (max_upper + max_lower > static_cast<long>(max_diagram_points))
        throw std::invalid_argument("diagram has too many points");
    return SetPartitionDiagram::from_blocks(k.value_or(static_cast<unsigned>(max_upper)),
                                            l.value_or(static_cast<unsigned>(max_lower)), blocks);
}

DeltaPolynomial delta_polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("coefficients must be a list of rationals");
    std::vector<BigRational> coeffs;
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer())
            coeffs.emplace_back(c.get<long>());
        else
            throw std::invalid_argument("coefficient must be a \"p/q\" string or an integer, got " + c.dump());
    }
    return DeltaPolynomial(std::move(coeffs));
}

AlgebraElement algebra_element_from_json(const nlohmann::json& j) {
    const nlohmann::json* terms = &j;
    std::optional<unsigned> k;
    if (j.is_object()) {
        if (!j.contains("terms")) throw std::invalid_argument("element object needs a \"terms\" list");
        terms = &j.at("terms");
        if (j.contains("k")) {
            if (!j.at("k").is_number_unsigned()) throw std::invalid_argument("\"k\" must be a non-negative integer");
            k = j.at("k").get<unsigned>();
        }
    }
    if (!terms->is_array()) throw std::invalid_argument("an algebra element must be a list of terms");
    if (!k) {
        if (terms->empty()) throw std::invalid_argument("cannot infer k for an empty element; use {\"k\": k, \"terms\": []}");
        unsigned inferred = 0;
        for (const auto& t : *terms) {
            if (!t.is_object() || !t.contains("diagram"))
                throw std::invalid_argument("each term needs a \"diagram\" field");
            const auto d = diagram_from_json(t.at("diagram"));
            inferred = std::max({inferred, d.upper(), d.lower()});
        }
        k = inferred;
    }
    AlgebraElement x(*k);
    for (const auto& t : *terms) {
        if (!t.is_object() || !t.contains("diagram") || !t.contains("coeffs"))
            throw std::invalid_argument("each term needs \"diagram\" and \"coeffs\" fields");
        x.add(diagram_from_json(t.at("diagram"), *k, *k), delta_polynomial_from_json(t.at("coeffs")));
    }
    return x;
}

}  // namespace bratteli
