#pragma once

// Full verification campaigns: every committee-cardinality identity, the
// decomposition checks, Gram distances, enumerator identities and two-cycle
// reports, over all cycles of a tope set, with seeded sampling above the
// configured size thresholds. Produces a machine-readable JSON report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclotope/tope_set.hpp"

namespace cyclotope {

struct CampaignOptions {
    double tolerance = 1e-6;
    std::uint64_t seed = 2024;
    std::size_t cycle_limit = 0;  // 0 = enumerate all cycles
    std::optional<Tope> base;     // default: the positive tope

    // sampling thresholds, chosen to keep desk-scale campaigns interactive
    std::size_t tope_sample_threshold = 256;  // above this, sample topes
    std::size_t tope_sample = 50;
    std::size_t pair_sample = 20;             // two-cycle pairs
    std::size_t gram_pair_sample = 2048;
    std::size_t enumerator_base_cap = 16;
    std::size_t enumerator_cycle_cap = 8;
};

struct CampaignReport {
    std::string json_text;
    std::vector<std::string> failure_lines;
    std::size_t checks = 0;
    std::size_t failures = 0;
    bool validation_ok = false;

    bool pass() const { return validation_ok && failures == 0; }
};

// Campaign over a validated tope set (validation is run first and failing
// it short-circuits everything else).
CampaignReport run_campaign(const TopeSet& set, const CampaignOptions& options);

// Replay campaign for an externally supplied cycle: intrinsic cycle
// validation, then the per-cycle identity suite with the cycle's own vertex
// set as the tope universe.
CampaignReport run_cycle_campaign(const std::vector<Tope>& vertices,
                                  const CampaignOptions& options);

}  // namespace cyclotope
