#include "cdlat/report.hpp"

namespace cdlat {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::vacuous: return "vacuous";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
    for (const auto& c : other.checks)
        checks.push_back({prefix + c.id, c.status, c.details});
    for (const auto& [k, v] : other.stats) stats[prefix + k] += v;
}

} // namespace cdlat
