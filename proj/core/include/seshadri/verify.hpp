#pragma once

#include "seshadri/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seshadri {

/// One verified fact: an entry (or the property suite), a short check id,
/// the expected and computed values (exact, as strings) and a source label
/// describing where the expected value comes from.
struct CheckResult {
    std::string entry;
    std::string check;
    std::string source;
    bool pass;
    std::string expected;
    std::string got;
};

struct VerifyOptions {
    /// Restrict to one entry name ("property" selects the property suites).
    std::optional<std::string> only;
    /// Perturb the mutation slot with this index before verifying; the run
    /// is then expected to fail. See mutation_slot_count().
    std::optional<std::size_t> mutate;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::size_t failures() const;
};

/// Recomputes every catalog entry from its raw Chern data and compares
/// against the expected exact values, then runs the module-level property
/// suites. Deterministic: entries in name order, fixed seeds.
VerifyReport verify_all(const VerifyOptions& options = {});

/// Number of structure constants eligible for the mutation smoke test
/// (non-unit products landing in top codimension on the table-presented
/// entries). Every slot index below this count must make verify_all fail.
std::size_t mutation_slot_count();

} // namespace seshadri
