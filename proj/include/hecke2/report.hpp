#ifndef HECKE2_REPORT_HPP
#define HECKE2_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hecke2 {

/// One verification check: a stable id, the identity it certifies, and on
/// failure the exact offending element.
struct CheckResult {
    std::string id;
    std::string statement;
    bool passed = false;
    std::string witness;  // serialized counterexample; empty when passed
};

struct VerificationReport {
    int m_max = 0;
    int k_max = 0;
    uint64_t seed = 0;
    bool truncated = false;  // stopped early by the time budget
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Runs every symbolic check: T-conjugation of X1 powers for k = 2..k_max,
/// and for each m = 1..m_max the operator laws (randomized with the given
/// seed), the conjugated defining relation, the X1^{k-1} z = p_k identities
/// with their coefficient profiles, the central preimages, and the centre
/// basis rank/centrality. max_seconds > 0 stops scheduling further checks
/// once exceeded (the report is then marked truncated).
VerificationReport run_verification(int m_max, int k_max, uint64_t seed, double max_seconds);

/// One line per check plus a summary line.
std::string to_text(const VerificationReport& report);

/// Deterministic JSON rendering (single line, insertion-ordered keys).
std::string to_json_string(const VerificationReport& report);

}  // namespace hecke2

#endif
