#include "bratteli/report.hpp"

namespace bratteli {

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json out{
        {"claim", report.claim},
        {"range", report.range},
        {"holds", report.holds},
        {"first_violation", report.first_violation ? nlohmann::json(*report.first_violation) : nlohmann::json()},
        {"checks", report.checks},
    };
    if (!report.details.empty()) out["details"] = report.details;
    return out;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    nlohmann::json out{{"suite", report.name}, {"holds", report.holds()}, {"results", checks}};
    if (!report.details.empty()) out["details"] = report.details;
    return out;
}

}  // namespace bratteli
