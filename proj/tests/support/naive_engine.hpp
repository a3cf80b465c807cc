#pragma once

// Test-only reference engine: recomputes every flip decision and every
// potential from scratch with flip_round / potential_M, no incremental
// counters. Kept independent of the optimized engine it checks.

#include "unfriendly/dynamics.hpp"

namespace unfriendly::testing {

inline RunTrace run_naive(const FiniteGraph& g, const Schedule& schedule,
                          const Coloring& c0, const VertexMeasure& mu,
                          std::uint64_t max_rounds) {
    RunTrace trace;
    trace.final_coloring = c0;
    std::uint64_t quiet = 0;
    for (std::uint64_t n = 0; n < max_rounds; ++n) {
        RoundRecord rec;
        rec.round_index = n;
        rec.class_index = static_cast<std::size_t>(n % schedule.period());
        rec.potential_before = potential_M(g, mu, trace.final_coloring);
        auto [next, flipped] = flip_round(g, trace.final_coloring, schedule.nth_class(n));
        trace.final_coloring = std::move(next);
        rec.potential_after = potential_M(g, mu, trace.final_coloring);
        rec.flipped_mass = mu.mass(flipped);
        rec.flipped = std::move(flipped);
        trace.total_flips += rec.flipped.size();
        quiet = rec.flipped.empty() ? quiet + 1 : 0;
        trace.rounds.push_back(std::move(rec));
        if (quiet >= schedule.period()) {
            trace.status = RunStatus::Converged;
            return trace;
        }
    }
    trace.status = RunStatus::MaxRoundsExceeded;
    return trace;
}

}  // namespace unfriendly::testing
