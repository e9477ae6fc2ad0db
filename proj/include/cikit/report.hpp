#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cikit {

// Outcome of one verification run. Vacuous instances (hypotheses unmet) are
// counted separately and never as passes of the substantive claim. No
// timestamps anywhere: identical inputs must serialize identically.
struct VerificationReport {
    std::string claim;
    std::string population;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t checked = 0;   // substantive instances checked
    std::uint64_t vacuous = 0;   // instances skipped because hypotheses failed
    std::uint64_t warnings = 0;  // soft diagnostics (e.g. near-threshold values)
    std::uint64_t counterexample_count = 0;
    std::vector<std::string> counterexamples;  // first few witnesses, formatted

    static constexpr std::uint64_t kMaxStoredCounterexamples = 10;

    bool passed() const { return counterexample_count == 0; }

    void add_counterexample(std::string witness) {
        if (counterexample_count < kMaxStoredCounterexamples)
            counterexamples.push_back(std::move(witness));
        ++counterexample_count;
    }

    void absorb(const VerificationReport& shard) {
        checked += shard.checked;
        vacuous += shard.vacuous;
        warnings += shard.warnings;
        for (const auto& w : shard.counterexamples)
            if (counterexample_count < kMaxStoredCounterexamples) counterexamples.push_back(w);
        counterexample_count += shard.counterexample_count;
    }
};

inline std::string format_report(const VerificationReport& r) {
    std::string out;
    out += "claim: " + r.claim + "\n";
    out += "population: " + r.population + "\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
    out += "budget: " + std::to_string(r.budget) + "\n";
    out += "checked: " + std::to_string(r.checked) + "\n";
    out += "vacuous: " + std::to_string(r.vacuous) + "\n";
    out += "warnings: " + std::to_string(r.warnings) + "\n";
    out += "counterexamples: " + std::to_string(r.counterexample_count) + "\n";
    for (const auto& w : r.counterexamples) out += "counterexample: " + w + "\n";
    out += std::string("result: ") + (r.passed() ? "PASSED" : "FALSIFIED") + "\n";
    return out;
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    return nlohmann::json{{"claim", r.claim},
                          {"population", r.population},
                          {"seed", r.seed},
                          {"budget", r.budget},
                          {"checked", r.checked},
                          {"vacuous", r.vacuous},
                          {"warnings", r.warnings},
                          {"counterexample_count", r.counterexample_count},
                          {"counterexamples", r.counterexamples},
                          {"passed", r.passed()}};
}

}  // namespace cikit
