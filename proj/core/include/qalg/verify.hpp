#ifndef QALG_VERIFY_HPP
#define QALG_VERIFY_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace qalg {

enum class CheckStatus { Pass, Fail, Refused };

struct Check {
    std::string name;
    std::string anchor; /* the claim being verified */
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Fail;
    long long wall_us = 0; /* measured runtime; kept out of the report body */
};

struct VerificationReport {
    int max_degree = 40;
    std::vector<Check> checks;

    int passed() const;
    int failed() const;
    int refused() const;
    bool all_passed() const { return failed() == 0 && refused() == 0; }

    /* Deterministic human-readable report (no timings). */
    std::string text() const;
    /* Deterministic machine-readable report (no timings). */
    nlohmann::json to_json() const;
};

/* Scenario comparisons need at least this window to certify the stable
   part of the dimension tables; below it they are refused, not skipped
   silently. */
inline constexpr int kMinScenarioWindow = 20;

/* Runs the whole built-in claim catalogue at the given degree bound. */
VerificationReport verify_all(int max_degree = 40);

} // namespace qalg

#endif
