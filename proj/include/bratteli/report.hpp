#pragma once

#include <nlohmann/json.hpp>

#include <concepts>
#include <optional>
#include <string>
#include <vector>

namespace bratteli {

/// Outcome of a finite exact verification sweep. Failures are recorded, never
/// thrown: the first witness is kept verbatim and the sweep may continue.
struct CheckReport {
    std::string claim;
    std::string range;
    bool holds = true;
    std::optional<std::string> first_violation;
    std::size_t checks = 0;
    nlohmann::json details = nlohmann::json::object();

    void record(bool ok, const std::string& witness) {
        ++checks;
        if (!ok && holds) {
            holds = false;
            first_violation = witness;
        }
    }

    /// Lazy variant for hot loops: the witness is only built on failure.
    template <class MakeWitness>
        requires std::invocable<MakeWitness>
    void record(bool ok, MakeWitness&& make_witness) {
        ++checks;
        if (!ok && holds) {
            holds = false;
            first_violation = make_witness();
        }
    }
};

nlohmann::json to_json(const CheckReport& report);

/// A named group of checks; holds iff every member holds.
struct SuiteReport {
    std::string name;
    std::vector<CheckReport> checks;
    nlohmann::json details = nlohmann::json::object();

    bool holds() const {
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }
};

nlohmann::json to_json(const SuiteReport& report);

}  // namespace bratteli
