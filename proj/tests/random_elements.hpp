#pragma once

// Seeded random diagrams and algebra elements for property sweeps.

#include "bratteli/diagram.hpp"

#include <random>

namespace testgen {

inline bratteli::SetPartitionDiagram random_diagram(std::mt19937& rng, unsigned k, unsigned l) {
    const unsigned n = k + l;
    std::uniform_int_distribution<unsigned> pick(0, n == 0 ? 0 : n - 1);
    std::vector<unsigned> labels(n);
    for (auto& x : labels) x = pick(rng);
    return bratteli::SetPartitionDiagram::from_labels(k, l, labels);
}

/// Uniform over the diagrams of a category on (k, k) by rejection.
inline bratteli::SetPartitionDiagram random_in(std::mt19937& rng, bratteli::Category c, unsigned k) {
    const auto all = bratteli::enumerate_category(c, k);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

inline bratteli::DeltaPolynomial random_coefficient(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), deg(0, 2);
    std::vector<bratteli::BigRational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(num(rng), den(rng));
    auto p = bratteli::DeltaPolynomial(std::move(c));
    return p.is_zero() ? bratteli::DeltaPolynomial(1) : p;
}

inline bratteli::AlgebraElement random_element(std::mt19937& rng, unsigned k, const std::vector<bratteli::SetPartitionDiagram>& basis,
                                               unsigned max_terms = 3) {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<unsigned> terms(1, max_terms);
    bratteli::AlgebraElement x(k);
    const unsigned t = terms(rng);
    for (unsigned i = 0; i < t; ++i) x.add(basis[pick(rng)], random_coefficient(rng));
    return x;
}

}  // namespace testgen
