#include "bratteli/arrays.hpp"

#include <stdexcept>
#include <string>

namespace bratteli {

namespace {

std::string idx(std::initializer_list<long> values) {
    std::string out = "(";
    bool first = true;
    for (long v : values) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + ")";
}

std::string frac(const BigInt& num, const BigInt& den) { return to_string(num) + "/" + to_string(den); }

}  // namespace

// ---------------------------------------------------------------------------
// M(n, l)

MArray::MArray(unsigned max_level) {
    rows_.reserve(max_level + 1);
    rows_.push_back({BigInt(1)});
    for (unsigned n = 1; n <= max_level; ++n) {
        const auto& prev = rows_.back();
        std::vector<BigInt> row(n + 1);
        auto p = [&prev](long l) { return (l < 0 || l >= static_cast<long>(prev.size())) ? BigInt(0) : prev[l]; };
        row[0] = p(0) + p(1);
        for (unsigned l = 1; l < n; ++l) row[l] = p(l - 1) + p(l) + (l + 1) * p(l + 1);
        row[n] = 1;
        rows_.push_back(std::move(row));
    }
}

BigInt MArray::at(long n, long l) const {
    if (n < 0 || l < 0 || n > static_cast<long>(max_level()) || l > n) return 0;
    return rows_[n][l];
}

MArray m_array(unsigned max_level) { return MArray(max_level); }

SuiteReport m_properties_report(unsigned max_level) { return m_properties_report(m_array(max_level)); }

SuiteReport m_properties_report(const MArray& m) {
    const auto N = static_cast<long>(m.max_level());
    if (N < 2) throw std::invalid_argument("m_properties_report needs max level >= 2");
    const std::string range = "n <= " + std::to_string(N);
    SuiteReport suite;
    suite.name = "m_properties";

    CheckReport involution;
    involution.claim = "M(0,0) = M(1,0) = 1 and M(n,0) = M(n-1,0) + (n-1) M(n-2,0)";
    involution.range = range;
    involution.record(m.at(0, 0) == 1 && m.at(1, 0) == 1, "initial values");
    for (long n = 2; n <= N; ++n)
        involution.record(m.at(n, 0) == m.at(n - 1, 0) + (n - 1) * m.at(n - 2, 0), [&] { return "n=" + std::to_string(n); });

    CheckReport binomial_id;
    binomial_id.claim = "M(n+l,l) = C(n+l,l) M(n,0) for l >= 1";
    binomial_id.range = "n + l <= " + std::to_string(N);
    for (long l = 1; l <= N; ++l)
        for (long n = 0; n + l <= N; ++n)
            binomial_id.record(m.at(n + l, l) == binomial(static_cast<unsigned>(n + l), static_cast<unsigned>(l)) * m.at(n, 0),
                               [&] { return "(n,l)=" + idx({n, l}); });

    // r_n = M(n-1,0)/M(n,0)
    CheckReport decreasing;
    decreasing.claim = "M(n-1,0)/M(n,0) is weakly decreasing";
    decreasing.range = range;
    CheckReport increasing;
    increasing.claim = "n M(n-1,0)/M(n,0) is weakly increasing";
    increasing.range = range;
    for (long n = 1; n < N; ++n) {
        // r_{n+1} <= r_n  <=>  M(n,0) M(n,0) <= M(n-1,0) M(n+1,0)
        decreasing.record(ratio_geq(m.at(n - 1, 0), m.at(n, 0), m.at(n, 0), m.at(n + 1, 0)),
                          [&] { return "n=" + std::to_string(n + 1); });
        increasing.record(ratio_geq((n + 1) * m.at(n, 0), m.at(n + 1, 0), n * m.at(n - 1, 0), m.at(n, 0)),
                          [&] { return "n=" + std::to_string(n + 1); });
    }

    CheckReport max_ratio;
    max_ratio.claim = "max_{l<n} M(n-1,l)/M(n,l) = M(n-1,0)/M(n,0)";
    max_ratio.range = range;
    for (long n = 1; n <= N; ++n)
        for (long l = 1; l < n; ++l)
            max_ratio.record(ratio_geq(m.at(n - 1, 0), m.at(n, 0), m.at(n - 1, l), m.at(n, l)),
                             [&] { return "(n,l)=" + idx({n, l}) + " exceeds l=0"; });

    // The ratio tends to 0. That is evidenced by the first n where it drops
    // below 1/10, if the range reaches it; a short range is not a failure.
    long witness = -1;
    for (long n = 1; n <= N && witness < 0; ++n)
        if (10 * m.at(n - 1, 0) < m.at(n, 0)) witness = n;
    nlohmann::json below_tenth{{"claim", "M(n-1,0)/M(n,0) < 1/10 for some n"}, {"witness_n", nullptr}};
    if (witness >= 0) {
        below_tenth["witness_n"] = witness;
        below_tenth["ratio"] = frac(m.at(witness - 1, 0), m.at(witness, 0));
    }
    suite.details["ratio_below_one_tenth"] = below_tenth;

    suite.checks = {involution, binomial_id, decreasing, increasing, max_ratio};
    return suite;
}

// ---------------------------------------------------------------------------
// K(n, k, l)

KLevel::KLevel(unsigned n) : n_(n), by_k_(n / 2 + 1) {
    for (unsigned k = 0; k <= n / 2; ++k) by_k_[k].resize((n - 2 * k - n % 2) / 2 + 1);
}

BigInt KLevel::at(long k, long l) const {
    if (k < 0 || l < 0 || 2 * k + l > static_cast<long>(n_) || (l % 2) != (n_ % 2)) return 0;
    return by_k_[k][l / 2];
}

void KLevel::set(unsigned k, unsigned l, BigInt value) {
    if (2 * k + l > n_ || l % 2 != n_ % 2) throw std::out_of_range("K index outside level " + std::to_string(n_));
    by_k_[k][l / 2] = std::move(value);
}

void KLevel::for_each(const std::function<void(unsigned, unsigned, const BigInt&)>& fn) const {
    for (unsigned k = 0; k < by_k_.size(); ++k)
        for (unsigned j = 0; j < by_k_[k].size(); ++j) fn(k, n_ % 2 + 2 * j, by_k_[k][j]);
}

KLevel k_level_zero() {
    KLevel out(0);
    out.set(0, 0, 1);
    return out;
}

KLevel next_k_level(const KLevel& prev) {
    const unsigned n = prev.level() + 1;
    KLevel out(n);
    for (unsigned k = 0; 2 * k <= n; ++k) {
        for (unsigned l = n % 2; 2 * k + l <= n; l += 2) {
            if (2 * k + l == n) {
                out.set(k, l, coupled_coefficient(k, l));
                continue;
            }
            const long K = k, L = l;
            BigInt v = prev.at(K, L - 1) + (L + 1) * (prev.at(K, L + 1) + prev.at(K - 1, L + 1)) +
                       (K + 1) * prev.at(K + 1, L - 1);
            out.set(k, l, std::move(v));
        }
    }
    return out;
}

KArray::KArray(unsigned max_level) {
    levels_.reserve(max_level + 1);
    levels_.push_back(k_level_zero());
    for (unsigned n = 1; n <= max_level; ++n) levels_.push_back(next_k_level(levels_.back()));
}

BigInt KArray::at(long n, long k, long l) const {
    if (n < 0 || n > static_cast<long>(max_level())) return 0;
    return levels_[n].at(k, l);
}

KArray k_array(unsigned max_level) { return KArray(max_level); }

ConjectureSweepState ConjectureSweepState::initial() {
    ConjectureSweepState s;
    KLevel k0 = k_level_zero();
    s.previous = next_k_level(k0);
    s.current = next_k_level(s.previous);
    s.last_verified = 2;
    return s;
}

nlohmann::json to_json(const ConjectureSweepState& state) {
    auto dump = [](const KLevel& level) {
        nlohmann::json entries = nlohmann::json::array();
        level.for_each([&](unsigned k, unsigned l, const BigInt& v) { entries.push_back({k, l, to_string(v)}); });
        return nlohmann::json{{"n", level.level()}, {"entries", entries}};
    };
    return {{"last_verified", state.last_verified}, {"previous", dump(state.previous)}, {"current", dump(state.current)}};
}

ConjectureSweepState sweep_state_from_json(const nlohmann::json& j) {
    auto load = [](const nlohmann::json& level) {
        KLevel out(level.at("n").get<unsigned>());
        for (const auto& e : level.at("entries"))
            out.set(e.at(0).get<unsigned>(), e.at(1).get<unsigned>(), BigInt(e.at(2).get<std::string>(), 10));
        return out;
    };
    ConjectureSweepState s;
    try {
        s.last_verified = j.at("last_verified").get<unsigned>();
        s.previous = load(j.at("previous"));
        s.current = load(j.at("current"));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed conjecture checkpoint: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("malformed conjecture checkpoint: ") + e.what());
    }
    if (s.last_verified < 2 || s.current.level() != s.last_verified || s.previous.level() + 1 != s.current.level())
        throw std::invalid_argument("inconsistent conjecture checkpoint");
    // Cheap sanity check: boundary entries must match their closed form.
    for (const KLevel* level : {&s.previous, &s.current}) {
        const unsigned n = level->level();
        for (unsigned k = 0; 2 * k <= n; ++k)
            if (level->at(k, n - 2 * k) != coupled_coefficient(k, n - 2 * k))
                throw std::invalid_argument("conjecture checkpoint has a corrupted K level " + std::to_string(n));
    }
    return s;
}

CheckReport conjecture_check(unsigned max_level) {
    auto state = ConjectureSweepState::initial();
    return conjecture_check(max_level, state);
}

CheckReport conjecture_check(unsigned max_level, ConjectureSweepState& state,
                             const std::function<void(const ConjectureSweepState&)>& checkpoint) {
    if (max_level < 3) throw std::invalid_argument("conjecture_check needs max level >= 3");
    CheckReport report;
    report.claim =
        "K(n-2,k,l)/K(n,k,l) >= max(K(n-2,k+1,l)/K(n,k+1,l), K(n-2,k,l+2)/K(n,k,l+2)) for 2k+l < n-2, "
        "and max_{2k+l<n} K(n-2,k,l)/K(n,k,l) = K(n-2,0,n%2)/K(n,0,n%2)";
    report.range = std::to_string(state.last_verified + 1) + " <= n <= " + std::to_string(max_level);
    std::size_t inequalities = 0;

    while (state.last_verified < max_level) {
        const unsigned n = state.last_verified + 1;
        const KLevel& lower = state.previous;  // level n-2
        KLevel upper = next_k_level(state.current);
        const long N = n;

        auto ratio = [&](long k, long l) { return std::pair{lower.at(k, l), upper.at(k, l)}; };
        auto witness = [&](long k, long l, long k2, long l2) {
            auto [a, b] = ratio(k, l);
            auto [c, d] = ratio(k2, l2);
            return "n=" + std::to_string(n) + " (k,l)=" + idx({k, l}) + ": K(n-2,k,l)/K(n,k,l) = " + frac(a, b) +
                   " < " + frac(c, d) + " at (k,l)=" + idx({k2, l2});
        };

        for (long k = 0; 2 * k < N - 2; ++k) {
            for (long l = N % 2; 2 * k + l < N - 2; l += 2) {
                auto [a, b] = ratio(k, l);
                auto [c, d] = ratio(k + 1, l);
                report.record(ratio_geq(a, b, c, d), [&] { return witness(k, l, k + 1, l); });
                auto [e, f] = ratio(k, l + 2);
                report.record(ratio_geq(a, b, e, f), [&] { return witness(k, l, k, l + 2); });
                inequalities += 2;
            }
        }

        const long delta = N % 2;
        auto [best_num, best_den] = ratio(0, delta);
        for (long k = 0; 2 * k < N; ++k)
            for (long l = N % 2; 2 * k + l < N; l += 2) {
                auto [a, b] = ratio(k, l);
                report.record(ratio_geq(best_num, best_den, a, b), [&] {
                    return "n=" + std::to_string(n) + ": max not attained at (0," + std::to_string(delta) + "); " +
                           witness(0, delta, k, l);
                });
            }

        state.previous = std::move(state.current);
        state.current = std::move(upper);
        state.last_verified = n;
        // A level with a violation is not "verified"; do not persist past it.
        if (checkpoint && report.holds) checkpoint(state);
    }
    report.details["inequalities_checked"] = inequalities;
    report.details["last_verified"] = state.last_verified;
    return report;
}

// ---------------------------------------------------------------------------
// hyperoctahedral dimensions and closed forms

std::vector<BigInt> hyperoct_dims(unsigned max_n) {
    std::vector<BigInt> a{BigInt(1)};
    for (unsigned n = 1; n <= max_n; ++n) {
        BigInt total = 0;
        for (unsigned j = 1; j <= n; ++j) total += binomial(2 * n - 1, 2 * j - 1) * a[n - j];
        a.push_back(std::move(total));
    }
    return a;
}

SuiteReport hyperoct_report(unsigned max_n) {
    const auto a = hyperoct_dims(max_n);
    const KArray k = k_array(2 * max_n);
    const std::string range = "n <= " + std::to_string(max_n);
    SuiteReport suite;
    suite.name = "hyperoct";

    CheckReport frobenius{.claim = "K(2n,0,0) = a_n", .range = range};
    CheckReport parity{.claim = "K(2n-1,0,1) = K(2n,0,0)", .range = "1 <= " + range};
    CheckReport bound{.claim = "a_{n-1}/a_n <= 1/(2n-1)", .range = "1 <= " + range};
    CheckReport growth{.claim = "a_n strictly increasing for n >= 1", .range = "1 <= " + range};
    for (long n = 0; n <= static_cast<long>(max_n); ++n) {
        frobenius.record(k.at(2 * n, 0, 0) == a[n], [&] { return "n=" + std::to_string(n); });
        if (n == 0) continue;
        parity.record(k.at(2 * n - 1, 0, 1) == k.at(2 * n, 0, 0), [&] { return "n=" + std::to_string(n); });
        bound.record((2 * n - 1) * a[n - 1] <= a[n], [&] { return "n=" + std::to_string(n) + ": " + frac(a[n - 1], a[n]); });
        if (n >= 2) growth.record(a[n - 1] < a[n], [&] { return "n=" + std::to_string(n); });
    }
    suite.checks = {frobenius, parity, bound, growth};
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : a) values.push_back(to_string(v));
    suite.details["a"] = values;
    return suite;
}

BigInt coupled_coefficient(unsigned k, unsigned l) {
    BigInt den = factorial(k) * factorial(l);
    den <<= k;
    return factorial(l + 2 * k) / den;
}

BigInt coupled_coefficient_double_factorial(unsigned k, unsigned l) {
    return binomial(2 * k + l, l) * double_factorial(2 * static_cast<long>(k) - 1);
}

BigInt coupled_dim_closed_form(const YoungDiagram& lambda, const YoungDiagram& mu) {
    const BigInt young = dim_young(lambda) * dim_young(mu);
    const BigInt first = coupled_coefficient(lambda.size(), mu.size()) * young;
    const BigInt second = coupled_coefficient_double_factorial(lambda.size(), mu.size()) * young;
    if (first != second) throw std::logic_error("closed forms disagree at " + lambda.str() + "," + mu.str());
    return first;
}

BigInt dim_A_n(unsigned n) {
    const BigInt top = factorial(n) * factorial(n);
    BigRational total = 0;
    for (unsigned l = n % 2; l <= n; l += 2) {
        BigInt den = factorial(l) * factorial((n - l) / 2);
        den <<= (n - l);
        total += make_ratio(top, den);
    }
    if (total.get_den() != 1) throw std::logic_error("dim A_n is not an integer at n=" + std::to_string(n));
    return total.get_num();
}

}  // namespace bratteli
