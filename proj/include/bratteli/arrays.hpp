#pragma once

// Integer arrays that factor branching-graph dimensions into Young dimensions:
//   dim_{gamma_B}(n, lambda)               = M(n, |lambda|) dim(lambda)
//   dim_{pascal(theta)}(n, (lambda, mu))   = K(n, |lambda|, |mu|) dim(lambda) dim(mu)
// plus the hyperoctahedral sequence a_n and the coupled-Young closed forms.
// Indices outside the stored range read as 0.

#include "bratteli/numeric.hpp"
#include "bratteli/report.hpp"
#include "bratteli/young.hpp"

#include <functional>
#include <vector>

namespace bratteli {

class MArray {
public:
    explicit MArray(unsigned max_level);

    unsigned max_level() const noexcept { return static_cast<unsigned>(rows_.size() - 1); }
    BigInt at(long n, long l) const;
    const std::vector<BigInt>& row(unsigned n) const { return rows_.at(n); }

private:
    std::vector<std::vector<BigInt>> rows_;
};

MArray m_array(unsigned max_level);

/// Identities, monotonicity of M(n-1,0)/M(n,0) and n*M(n-1,0)/M(n,0), and the
/// max-ratio identity, checked exactly for every index up to max_level.
SuiteReport m_properties_report(unsigned max_level);
SuiteReport m_properties_report(const MArray& m);

/// One level n of K(n, k, l). Entries exist for 2k + l <= n with l = n mod 2.
class KLevel {
public:
    KLevel() = default;
    explicit KLevel(unsigned n);

    unsigned level() const noexcept { return n_; }
    BigInt at(long k, long l) const;
    void set(unsigned k, unsigned l, BigInt value);

    /// Visits (k, l) pairs of this level in order of increasing k, then l.
    void for_each(const std::function<void(unsigned k, unsigned l, const BigInt&)>& fn) const;

private:
    unsigned n_ = 0;
    std::vector<std::vector<BigInt>> by_k_;  // by_k_[k][j] holds l = n%2 + 2j
};

KLevel k_level_zero();

/// Next level: the 2k+l = n boundary by its closed form, the interior by the
/// four-term recursion.
KLevel next_k_level(const KLevel& prev);

class KArray {
public:
    explicit KArray(unsigned max_level);
    unsigned max_level() const noexcept { return static_cast<unsigned>(levels_.size() - 1); }
    BigInt at(long n, long k, long l) const;
    const KLevel& level(unsigned n) const { return levels_.at(n); }

private:
    std::vector<KLevel> levels_;
};

KArray k_array(unsigned max_level);

/// Resumable state of a streaming conjecture sweep: the two newest K levels.
struct ConjectureSweepState {
    unsigned last_verified = 2;
    KLevel previous;  // level last_verified - 1
    KLevel current;   // level last_verified

    static ConjectureSweepState initial();
};

nlohmann::json to_json(const ConjectureSweepState& state);
ConjectureSweepState sweep_state_from_json(const nlohmann::json& j);

/// For every 3 <= n <= max_level and 2k+l < n-2 with matching parity:
///   K(n-2,k,l)/K(n,k,l) >= max(K(n-2,k+1,l)/K(n,k+1,l), K(n-2,k,l+2)/K(n,k,l+2)),
/// and max over 2k+l < n of K(n-2,k,l)/K(n,k,l) is attained at (0, n mod 2).
/// Only three K levels are resident at a time.
CheckReport conjecture_check(unsigned max_level);

/// Same sweep continued from `state`; `checkpoint` runs after each verified level.
CheckReport conjecture_check(unsigned max_level, ConjectureSweepState& state,
                             const std::function<void(const ConjectureSweepState&)>& checkpoint = {});

/// a_0 = 1, a_n = sum_{j=1..n} C(2n-1, 2j-1) a_{n-j}.
std::vector<BigInt> hyperoct_dims(unsigned max_n);

/// Checks K(2n,0,0) = a_n, K(2n-1,0,1) = K(2n,0,0), a_{n-1}/a_n <= 1/(2n-1) and
/// strict growth for n >= 1.
SuiteReport hyperoct_report(unsigned max_n);

/// (l+2k)! / (2^k k! l!)
BigInt coupled_coefficient(unsigned k, unsigned l);

/// C(2k+l, l) (2k-1)!!
BigInt coupled_coefficient_double_factorial(unsigned k, unsigned l);

/// dim of (lambda, mu) in the coupled Young graph by both closed forms;
/// throws std::logic_error if they ever disagree.
BigInt coupled_dim_closed_form(const YoungDiagram& lambda, const YoungDiagram& mu);

/// sum over l = n mod 2 of (n!)^2 / (2^{n-l} l! ((n-l)/2)!)
BigInt dim_A_n(unsigned n);

}  // namespace bratteli
