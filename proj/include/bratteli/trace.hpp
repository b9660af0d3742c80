#pragma once

// Thoma traces on the symmetric groups, and their lifts to diagram algebras
// through the quotient by the ideal of non-invertible diagrams.

#include "bratteli/diagram.hpp"
#include "bratteli/numeric.hpp"
#include "bratteli/report.hpp"
#include "bratteli/young.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace bratteli {

/// Finitely supported Thoma parameter. Both lists are weakly decreasing and
/// positive with total mass at most 1.
class ThomaParameter {
public:
    ThomaParameter() = default;

    /// Throws std::invalid_argument if the constraints fail.
    ThomaParameter(std::vector<BigRational> alpha, std::vector<BigRational> beta);

    const std::vector<BigRational>& alpha() const noexcept { return alpha_; }
    const std::vector<BigRational>& beta() const noexcept { return beta_; }

private:
    std::vector<BigRational> alpha_;
    std::vector<BigRational> beta_;
};

/// Exponent used for a cycle of size s:
///   paper_literal: e = s - 1, factor sum alpha^e + (-1)^(e-1) sum beta^e
///   cycle_length:  e = s,     factor sum alpha^e + (-1)^(e-1) sum beta^e
/// (the second is the classical Thoma character formula).
enum class TraceConvention { paper_literal, cycle_length };

std::string_view to_string(TraceConvention c);

/// Accepts paper-literal / paper_literal and cycle-length / cycle_length.
TraceConvention parse_convention(std::string_view name);

/// Product over cycles of size >= 2; fixed points contribute 1.
BigRational thoma_trace(const ThomaParameter& t, const Permutation& sigma, TraceConvention conv);

/// Same value from the cycle type alone.
BigRational thoma_trace(const ThomaParameter& t, const CycleType& type, TraceConvention conv);

/// sum coeff(delta) * thoma_trace(sigma)
BigRational group_algebra_trace(const ThomaParameter& t, TraceConvention conv, const GroupAlgebraElement& x,
                                const BigRational& delta);

/// group_algebra_trace of quotient_project(x); vanishes on non-invertible diagrams.
BigRational lifted_diagram_trace(const ThomaParameter& t, TraceConvention conv, const AlgebraElement& x,
                                 const BigRational& delta);

/// Trace of the pair (sigma, tau) in S_k x S_l: the product of the two traces.
BigRational product_thoma_trace(const ThomaParameter& t1, const ThomaParameter& t2, TraceConvention conv,
                                const Permutation& sigma, const Permutation& tau);

/// First n >= 0 at which c fails c_0 = 1 or n c_{n-1} = (n-1) c_n + 1, if any.
std::optional<unsigned> lambda_tower_first_violation(const std::vector<BigRational>& c);

/// Solves n c_{n-1} = (n-1) c_n + 1, c_0 = 1 for n <= N. The equations leave
/// c_1 free and give c_n = 1 + n (c_1 - 1); requiring 0 <= c_n <= 1 up to N
/// confines c_1 to [1 - 1/N, 1], which closes down to c_1 = 1 as N grows.
/// Also checks that moving any single c_i away from 1 breaks an equation.
CheckReport lambda_tower_trace_check(unsigned N);

/// {"alpha": ["p/q", ...], "beta": [...]}
ThomaParameter thoma_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ThomaParameter& t);

}  // namespace bratteli
