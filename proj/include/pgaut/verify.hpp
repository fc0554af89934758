#pragma once

// One verification procedure per structural claim, producing a structured
// report.  Each suite always emits the same claim ids for given parameters;
// a claim that cannot run is recorded as skipped with its reason (regime
// mismatch, stated side condition not met, or resource guard), never
// silently dropped.

#include <string>
#include <vector>

#include "pgaut/oracle.hpp"

namespace pgaut {

inline constexpr const char* kVersion = "0.1.0";

enum class CheckStatus { pass, fail, skipped };

struct CheckRecord {
    std::string id;
    std::string anchor;   // the claim, stated mathematically
    CheckStatus status = CheckStatus::skipped;
    std::string witness;  // failure witness, skip reason, or informative detail
    double ms = 0.0;
};

struct VerifyConfig {
    u64 seed = 12001;
    int threads = 0;
    OracleLimits limits;
};

struct VerificationReport {
    GroupParams params;
    std::string suite;
    u64 seed = 0;
    std::string version = kVersion;
    std::vector<CheckRecord> checks;  // sorted by claim id
    SearchStats oracle_stats;         // aggregated over brute-force runs
    double total_ms = 0.0;

    u64 count(CheckStatus st) const {
        u64 k = 0;
        for (const auto& c : checks)
            if (c.status == st) ++k;
        return k;
    }
    bool all_passed() const { return count(CheckStatus::fail) == 0; }
};

const std::vector<std::string>& known_suites();  // s2 aut-high aut-lindop aut-low appendix all

VerificationReport verify_suite(const GroupParams& par, const std::string& suite,
                                const VerifyConfig& cfg = {});

// Minimal-generator-count ratios z(s(Aut(G)))/z(G) for G = S and G = U.
struct RatioReport {
    int z_s = 0;
    int z_aut_s_sylow = 0;
    int z_u = 0;
    int z_aut_u_sylow = 0;
    std::string ratio_s;  // "6/3"
    std::string ratio_u;  // "3/2"
};
RatioReport ratio_report(const GroupParams& par, const VerifyConfig& cfg = {});

std::string status_name(CheckStatus st);

}  // namespace pgaut
