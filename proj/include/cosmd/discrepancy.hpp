#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosmd/oracle.hpp"
#include "cosmd/smd_directed.hpp"

namespace cosmd {

/// The canonical instance separating the two rule variants: the oracle
/// gives smd 3 here, and the published recurrence gives 4.
inline constexpr const char* kSeparatingInstance = "J(D(D(u,J(U(a,b),c)),v),z)";

struct DiscrepancyConfig {
    int exhaustive_max_leaves = 6;  // enumerate all join-rooted trees up to here
    int fuzz_count = 200;           // extra random join-rooted trees
    int fuzz_max_leaves = 12;
    std::uint64_t seed = 1;
    int list_limit = 10;  // counterexamples listed per variant
    OracleLimits oracle;
};

struct Counterexample {
    std::string cotree;
    int leaves = 0;
    int dp_smd = 0;
    int oracle_smd = 0;
};

struct VariantOutcome {
    DirectedRule rule{};
    long long mismatches = 0;
    /// Smallest leaf count first, then lexicographic serialization,
    /// capped at list_limit; the canonical separating instance is always
    /// appended when it mismatches for this variant.
    std::vector<Counterexample> examples;
};

struct DiscrepancyReport {
    DiscrepancyConfig config;
    long long trees_checked = 0;
    VariantOutcome prose_derived;
    VariantOutcome as_printed;
    // the separating instance evaluated under everything
    int separating_oracle_smd = 0;
    int separating_prose_smd = 0;
    int separating_printed_smd = 0;
};

/// Runs both rule variants and the definition-level oracle over every
/// join-rooted directed co-tree with up to exhaustive_max_leaves leaves,
/// plus fuzz_count seeded random join-rooted trees, and tallies
/// per-variant mismatches. Deterministic for a fixed config.
DiscrepancyReport run_discrepancy(const DiscrepancyConfig& config);

}  // namespace cosmd
