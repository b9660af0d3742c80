#include "bratteli/young.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace bratteli {

YoungDiagram::YoungDiagram(std::vector<unsigned> parts)
    : parts_(std::move(parts)), size_(std::accumulate(parts_.begin(), parts_.end(), 0u)) {}

YoungDiagram YoungDiagram::from_parts(std::span<const long long> parts) {
    std::vector<unsigned> out;
    out.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Young diagram parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Young diagram parts must be weakly decreasing");
        out.push_back(static_cast<unsigned>(parts[i]));
    }
    return YoungDiagram(std::move(out));
}

YoungDiagram YoungDiagram::from_parts(std::initializer_list<long long> parts) {
    return from_parts(std::span<const long long>(parts.begin(), parts.size()));
}

std::string YoungDiagram::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::strong_ordering operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    // Reverse lexicographic: larger part sequences come first.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

YoungDiagram make_diagram(std::span<const long long> parts) { return YoungDiagram::from_parts(parts); }

std::vector<YoungDiagram> successors(const YoungDiagram& lambda) {
    std::vector<YoungDiagram> out;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i <= p.size(); ++i) {
        if (i > 0 && lambda.part(i - 1) == lambda.part(i)) continue;
        std::vector<long long> next(p.begin(), p.end());
        if (i == p.size())
            next.push_back(1);
        else
            ++next[i];
        out.push_back(YoungDiagram::from_parts(next));
    }
    return out;
}

std::vector<YoungDiagram> predecessors(const YoungDiagram& lambda) {
    std::vector<YoungDiagram> out;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (lambda.part(i + 1) == p[i]) continue;
        std::vector<long long> next(p.begin(), p.end());
        if (--next[i] == 0) next.pop_back();
        out.push_back(YoungDiagram::from_parts(next));
    }
    return out;
}

bool contains(const YoungDiagram& mu, const YoungDiagram& lambda) {
    if (lambda.rows() > mu.rows()) return false;
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        if (lambda.part(i) > mu.part(i)) return false;
    return true;
}

bool covers(const YoungDiagram& mu, const YoungDiagram& lambda) {
    return mu.size() == lambda.size() + 1 && contains(mu, lambda);
}

BigInt dim_young(const YoungDiagram& lambda) {
    const auto& p = lambda.parts();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (unsigned j = 0; j < p[i]; ++j) {
            unsigned arm = p[i] - j - 1;
            unsigned leg = 0;
            for (std::size_t r = i + 1; r < p.size() && p[r] > j; ++r) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(lambda.size()) / hooks;
}

BigInt dim_young_by_paths(const YoungDiagram& lambda) {
    std::unordered_map<YoungDiagram, BigInt> current{{YoungDiagram{}, BigInt(1)}};
    for (unsigned n = 1; n <= lambda.size(); ++n) {
        std::unordered_map<YoungDiagram, BigInt> next;
        for (const auto& mu : enumerate_level(n)) {
            if (!contains(lambda, mu)) continue;
            BigInt total = 0;
            for (const auto& eta : predecessors(mu))
                if (auto it = current.find(eta); it != current.end()) total += it->second;
            next.emplace(mu, std::move(total));
        }
        current = std::move(next);
    }
    return current.at(lambda);
}

BigInt dim_young_between(const YoungDiagram& lambda, const YoungDiagram& mu) {
    if (!contains(mu, lambda)) return 0;
    std::unordered_map<YoungDiagram, BigInt> current{{lambda, BigInt(1)}};
    for (unsigned n = lambda.size(); n < mu.size(); ++n) {
        std::unordered_map<YoungDiagram, BigInt> next;
        for (const auto& [d, count] : current)
            for (const auto& s : successors(d))
                if (contains(mu, s)) next[s] += count;
        current = std::move(next);
    }
    return current.at(mu);
}

namespace {

void partitions_into(unsigned remaining, unsigned max_part, std::vector<long long>& prefix,
                     std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.push_back(YoungDiagram::from_parts(prefix));
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> enumerate_level(unsigned n) {
    std::vector<YoungDiagram> out;
    std::vector<long long> prefix;
    partitions_into(n, n, prefix, out);
    return out;
}

Permutation Permutation::identity(std::size_t k) {
    Permutation p;
    p.images_.resize(k);
    std::iota(p.images_.begin(), p.images_.end(), 0u);
    return p;
}

Permutation Permutation::from_images(std::vector<unsigned> images) {
    std::vector<bool> seen(images.size(), false);
    for (unsigned v : images) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("not a permutation: images must be a bijection");
        seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_one_line(std::span<const long long> images) {
    std::vector<unsigned> zero_based;
    zero_based.reserve(images.size());
    for (long long v : images) {
        if (v < 1 || v > static_cast<long long>(images.size()))
            throw std::invalid_argument("not a permutation: image " + std::to_string(v) + " out of range");
        zero_based.push_back(static_cast<unsigned>(v - 1));
    }
    return from_images(std::move(zero_based));
}

Permutation Permutation::from_one_line(std::initializer_list<long long> images) {
    return from_one_line(std::span<const long long>(images.begin(), images.size()));
}

bool Permutation::is_identity() const noexcept {
    for (unsigned i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::then(const Permutation& other) const {
    if (other.degree() != degree()) throw std::invalid_argument("permutation degrees differ");
    Permutation out;
    out.images_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i) out.images_[i] = other.images_[images_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
    return out;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(degree(), false);
    for (unsigned start = 0; start < degree(); ++start) {
        if (seen[start]) continue;
        std::vector<unsigned> cycle;
        for (unsigned i = start; !seen[i]; i = images_[i]) {
            seen[i] = true;
            cycle.push_back(i);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::one_line() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(images_[i] + 1);
    }
    return out + "]";
}

CycleType cycle_type(const Permutation& sigma) {
    std::vector<long long> lengths;
    for (const auto& c : sigma.cycles()) lengths.push_back(static_cast<long long>(c.size()));
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return YoungDiagram::from_parts(lengths);
}

CycleType cycle_type(std::span<const long long> one_line) {
    return cycle_type(Permutation::from_one_line(one_line));
}

}  // namespace bratteli

std::size_t std::hash<bratteli::YoungDiagram>::operator()(const bratteli::YoungDiagram& d) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (unsigned p : d.parts()) {
        h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}
