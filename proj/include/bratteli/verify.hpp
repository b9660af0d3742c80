#pragma once

// Named verification sweeps behind `bratteli verify`. Each returns a suite of
// exact checks; nothing here throws on a mathematical failure.

#include "bratteli/arrays.hpp"
#include "bratteli/report.hpp"

#include <functional>
#include <string_view>

namespace bratteli {

enum class VerifyTarget { m_properties, conjecture, hyperoct, iso_gammaB, dim_An, factorizations, counts_bridge };

std::string_view to_string(VerifyTarget t);
VerifyTarget parse_verify_target(std::string_view name);

/// Largest N accepted for a target.
unsigned verify_cap(VerifyTarget t);

SuiteReport verify_m_properties(unsigned N);
SuiteReport verify_conjecture(unsigned N);
SuiteReport verify_conjecture(unsigned N, ConjectureSweepState& state,
                              const std::function<void(const ConjectureSweepState&)>& checkpoint);
SuiteReport verify_hyperoct(unsigned N);

/// pascalize(lambda_principal) against gamma_B up to level N.
SuiteReport verify_iso_gammaB(unsigned N);

/// dim_A_n(n) against the sum of squared dimensions over theta level n.
SuiteReport verify_dim_An(unsigned N);

/// gamma_B = M x dim and pascalize(theta) = K x dim x dim up to level N;
/// theta closed forms against the graph (level N) and against explicit path
/// enumeration (level min(N, 8)); path decomposition of theta for all vertex
/// pairs up to level min(N, 6).
SuiteReport verify_factorizations(unsigned N);

/// Sum of squared dimensions on level n of pascalize(young), gamma_B,
/// pascalize(theta) and pascalize(doubled_young) (level 2n) against the
/// diagram counts of O, B, H and S on (n, n), for n <= N.
SuiteReport verify_counts_bridge(unsigned N);

SuiteReport run_verification(VerifyTarget t, unsigned N);

}  // namespace bratteli
