#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cdlat {

enum class CheckStatus { pass, fail, vacuous, skipped };

const char* to_string(CheckStatus s);

struct CheckEntry {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string details;
};

// One verification run over one target.  Exit status is derivable: any
// failed entry makes the run a failure.  Stats hold deterministic counters
// only; wall-clock timing never lands in a report.
struct VerificationReport {
    std::string target;
    std::string tier = "full";
    std::uint64_t seed = 0;
    std::vector<CheckEntry> checks;
    std::map<std::string, std::uint64_t> stats;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }

    void add(const std::string& id, bool pass, const std::string& details = "") {
        checks.push_back({id, pass ? CheckStatus::pass : CheckStatus::fail, details});
    }
    void add_status(const std::string& id, CheckStatus st, const std::string& details = "") {
        checks.push_back({id, st, details});
    }
    void absorb(const VerificationReport& other, const std::string& prefix);
};

} // namespace cdlat
