#include "bratteli/trace.hpp"

#include <stdexcept>

namespace bratteli {

namespace {

void check_sequence(const std::vector<BigRational>& xs, const char* name, BigRational& total) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0) throw std::invalid_argument(std::string(name) + " entries must be positive");
        if (i > 0 && xs[i] > xs[i - 1]) throw std::invalid_argument(std::string(name) + " must be weakly decreasing");
        total += xs[i];
    }
}

BigRational power_sum(const std::vector<BigRational>& xs, unsigned e) {
    BigRational s = 0;
    for (const auto& x : xs) s += pow(x, e);
    return s;
}

BigRational cycle_factor(const ThomaParameter& t, unsigned size, TraceConvention conv) {
    const unsigned e = conv == TraceConvention::paper_literal ? size - 1 : size;
    BigRational f = power_sum(t.alpha(), e);
    // (-1)^(e-1)
    if (e % 2 == 1) f += power_sum(t.beta(), e);
    else f -= power_sum(t.beta(), e);
    return f;
}

}  // namespace

ThomaParameter::ThomaParameter(std::vector<BigRational> alpha, std::vector<BigRational> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    for (auto& x : alpha_) x.canonicalize();
    for (auto& x : beta_) x.canonicalize();
    BigRational total = 0;
    check_sequence(alpha_, "alpha", total);
    check_sequence(beta_, "beta", total);
    if (total > 1) throw std::invalid_argument("Thoma parameter has total mass " + to_string(total) + " > 1");
}

std::string_view to_string(TraceConvention c) {
    return c == TraceConvention::paper_literal ? "paper-literal" : "cycle-length";
}

TraceConvention parse_convention(std::string_view name) {
    if (name == "paper-literal" || name == "paper_literal") return TraceConvention::paper_literal;
    if (name == "cycle-length" || name == "cycle_length") return TraceConvention::cycle_length;
    throw std::invalid_argument("unknown convention '" + std::string(name) +
                                "' (expected paper-literal or cycle-length)");
}

BigRational thoma_trace(const ThomaParameter& t, const CycleType& type, TraceConvention conv) {
    BigRational value = 1;
    for (unsigned size : type.parts())
        if (size >= 2) value *= cycle_factor(t, size, conv);
    return value;
}

BigRational thoma_trace(const ThomaParameter& t, const Permutation& sigma, TraceConvention conv) {
    return thoma_trace(t, cycle_type(sigma), conv);
}

BigRational group_algebra_trace(const ThomaParameter& t, TraceConvention conv, const GroupAlgebraElement& x,
                                const BigRational& delta) {
    BigRational total = 0;
    for (const auto& [sigma, c] : x.terms()) total += c.evaluate(delta) * thoma_trace(t, sigma, conv);
    return total;
}

BigRational lifted_diagram_trace(const ThomaParameter& t, TraceConvention conv, const AlgebraElement& x,
                                 const BigRational& delta) {
    return group_algebra_trace(t, conv, quotient_project(x), delta);
}

BigRational product_thoma_trace(const ThomaParameter& t1, const ThomaParameter& t2, TraceConvention conv,
                                const Permutation& sigma, const Permutation& tau) {
    return thoma_trace(t1, sigma, conv) * thoma_trace(t2, tau, conv);
}

std::optional<unsigned> lambda_tower_first_violation(const std::vector<BigRational>& c) {
    if (c.empty()) return std::nullopt;
    if (c[0] != 1) return 0u;
    for (std::size_t n = 1; n < c.size(); ++n)
        if (BigRational(static_cast<long>(n)) * c[n - 1] != BigRational(static_cast<long>(n - 1)) * c[n] + 1)
            return static_cast<unsigned>(n);
    return std::nullopt;
}

CheckReport lambda_tower_trace_check(unsigned N) {
    if (N < 1) throw std::invalid_argument("lambda_tower_trace_check needs N >= 1");
    CheckReport report;
    report.claim = "c_0 = 1, n c_{n-1} = (n-1) c_n + 1 with 0 <= c_n <= 1 forces c_n = 1";
    report.range = "n <= " + std::to_string(N);

    // The constant sequence solves every equation.
    std::vector<BigRational> ones(N + 1, BigRational(1));
    report.record(!lambda_tower_first_violation(ones), "c_n = 1 violates the recursion");

    // General solution as a + b*t with t = c_1 free.
    struct Affine { BigRational a, b; };
    std::vector<Affine> c{{1, 0}, {0, 1}};
    for (unsigned n = 2; n <= N; ++n) {
        const BigRational inv = make_ratio(1, n - 1);
        Affine next{(BigRational(n) * c[n - 1].a - 1) * inv, BigRational(n) * c[n - 1].b * inv};
        c.push_back(next);
    }
    BigRational lower = 0, upper = 1;  // admissible range of t
    for (unsigned n = 1; n <= N; ++n) {
        report.record(c[n].a == BigRational(1 - static_cast<long>(n)) && c[n].b == BigRational(n),
                      [&] { return "c_" + std::to_string(n) + " is not 1 + n(c_1 - 1)"; });
        // 0 <= 1 + n(t - 1) <= 1  <=>  1 - 1/n <= t <= 1
        const BigRational lo = 1 - make_ratio(1, n);
        if (lo > lower) lower = lo;
    }
    report.record(upper == 1 && lower == 1 - make_ratio(1, N),
                  "admissible interval for c_1 is [" + to_string(lower) + ", " + to_string(upper) + "]");

    // A single coordinate moved off 1 breaks the first equation that contains it.
    unsigned detected = 0;
    for (unsigned i = 0; i <= N; ++i) {
        if (i == 1 && N == 1) continue;  // c_1 appears only from n = 2 on
        for (const BigRational& bad : {BigRational(1, 2), BigRational(0)}) {
            auto seeded = ones;
            seeded[i] = bad;
            const unsigned expected = i == 1 ? 2 : i;
            const auto hit = lambda_tower_first_violation(seeded);
            report.record(hit && *hit == expected, [&] {
                return "c_" + std::to_string(i) + " = " + to_string(bad) + " not caught at n = " +
                       std::to_string(expected);
            });
            ++detected;
        }
    }

    nlohmann::json values = nlohmann::json::array();
    for (unsigned n = 0; n <= N; ++n) values.push_back(to_string(c[n].a + c[n].b));
    report.details["solution_at_c1_equal_1"] = values;
    report.details["admissible_c1"] = {to_string(lower), to_string(upper)};
    report.details["single_deviations_checked"] = detected;
    return report;
}

ThomaParameter thoma_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("Thoma parameter must be an object with alpha and beta lists");
    auto read = [&](const char* key) {
        std::vector<BigRational> out;
        if (!j.contains(key)) return out;
        const auto& list = j.at(key);
        if (!list.is_array()) throw std::invalid_argument(std::string(key) + " must be a list");
        for (const auto& x : list) {
            if (x.is_string()) out.push_back(parse_rational(x.get<std::string>()));
            else if (x.is_number_integer()) out.emplace_back(x.get<long>());
            else throw std::invalid_argument(std::string(key) + " entries must be \"p/q\" strings, got " + x.dump());
        }
        return out;
    };
    for (const auto& [key, value] : j.items())
        if (key != "alpha" && key != "beta") throw std::invalid_argument("unexpected key '" + key + "'");
    return ThomaParameter(read("alpha"), read("beta"));
}

nlohmann::json to_json(const ThomaParameter& t) {
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const auto& x : t.alpha()) a.push_back(to_string(x));
    for (const auto& x : t.beta()) b.push_back(to_string(x));
    return {{"alpha", a}, {"beta", b}};
}

}  // namespace bratteli
