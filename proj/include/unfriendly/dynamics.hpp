#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unfriendly/coloring.hpp"
#include "unfriendly/graph.hpp"
#include "unfriendly/measure.hpp"
#include "unfriendly/rational.hpp"
#include "unfriendly/schedule.hpp"

namespace unfriendly {

// same = neighbors sharing x's color, diff = the rest; same + diff = degree.
inline std::pair<std::int64_t, std::int64_t> same_diff_counts(const FiniteGraph& g,
                                                              const Coloring& c,
                                                              Vertex x) {
    std::int64_t same = 0;
    for (Vertex y : g.neighbors(x))
        same += c[static_cast<std::size_t>(y)] == c[static_cast<std::size_t>(x)];
    return {same, g.degree(x) - same};
}

// One anti-majority round: flips exactly those x in the scheduled class
// whose same-colored neighbors strictly outnumber the rest. Ties do not
// flip. The class must be independent, so every decision reads the
// pre-round coloring.
inline std::pair<Coloring, std::vector<Vertex>> flip_round(
    const FiniteGraph& g, const Coloring& c, const std::vector<Vertex>& cls) {
    for (Vertex x : cls)
        for (Vertex y : g.neighbors(x))
            if (std::binary_search(cls.begin(), cls.end(), y))
                throw std::invalid_argument("flip_round: class not independent, edge (" +
                                            std::to_string(x) + "," +
                                            std::to_string(y) + ")");
    Coloring next(c);
    std::vector<Vertex> flipped;
    for (Vertex x : cls) {
        auto [same, diff] = same_diff_counts(g, c, x);
        if (diff < same) {
            next[static_cast<std::size_t>(x)] ^= 1;
            flipped.push_back(x);
        }
    }
    return {std::move(next), std::move(flipped)};
}

// M(G_c) = sum_x mu(x) * #{y in G_x : c(y) = c(x)}, the measure of the
// monochromatic subgraph. Zero iff c is a proper 2-coloring.
inline Rational potential_M(const FiniteGraph& g, const VertexMeasure& mu,
                            const Coloring& c) {
    Rational m = 0;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        auto [same, diff] = same_diff_counts(g, c, x);
        if (same) m += mu.weight(x) * static_cast<long>(same);
    }
    return m;
}

// Half the measure-weighted average degree.
inline Rational cost(const FiniteGraph& g, const VertexMeasure& mu) {
    Rational total = 0;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        total += mu.weight(x) * static_cast<long>(g.degree(x));
    return total / 2;
}

// Unfriendliness check: every vertex has at least as many differently
// colored neighbors as same-colored ones. Returns the violators.
inline std::vector<Vertex> unfriendly_violators(const FiniteGraph& g,
                                                const Coloring& c) {
    std::vector<Vertex> bad;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        auto [same, diff] = same_diff_counts(g, c, x);
        if (diff < same) bad.push_back(x);
    }
    return bad;
}

inline bool is_unfriendly(const FiniteGraph& g, const Coloring& c) {
    return unfriendly_violators(g, c).empty();
}

struct RoundRecord {
    std::uint64_t round_index = 0;
    std::size_t class_index = 0;
    std::vector<Vertex> flipped;     // B_n, ascending
    Rational flipped_mass;           // mu(B_n)
    Rational potential_before;       // M(G_n)
    Rational potential_after;        // M(G_{n+1})
};

enum class RunStatus { Converged, MaxRoundsExceeded };

struct RunTrace {
    std::vector<RoundRecord> rounds;
    Coloring final_coloring;
    RunStatus status = RunStatus::MaxRoundsExceeded;
    std::uint64_t total_flips = 0;
};

struct RunOptions {
    // Measure for flipped_mass and potentials; uniform 1/n when null.
    const VertexMeasure* measure = nullptr;
    // 0 means the provably sufficient cyclic default (|E|+1)*period.
    std::uint64_t max_rounds = 0;
    // Skip per-round records with empty B_n to keep long traces small.
    bool record_empty_rounds = true;
};

// Iterates flip_round over the schedule with incremental same-color
// counters: a flip at x costs O(deg x). Converged means a full period
// passed with no flips. Weighted potentials are maintained incrementally
// and cross-checked against potential_M in the tests.
inline RunTrace run(const FiniteGraph& g, const Schedule& schedule,
                    const Coloring& c0, const RunOptions& opts = {}) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (c0.size() != n) throw std::invalid_argument("run: coloring size mismatch");
    const std::uint64_t period = schedule.period();
    const bool cyclic = schedule.mode() == ScheduleMode::Cyclic;
    std::uint64_t max_rounds = opts.max_rounds;
    if (max_rounds == 0) {
        if (!cyclic)
            throw std::invalid_argument("run: frozen-boundary runs need an explicit budget");
        max_rounds = (static_cast<std::uint64_t>(g.edge_count()) + 1) * period;
    }

    const VertexMeasure* mu = opts.measure;
    if (mu && mu->vertex_count() != g.vertex_count())
        throw std::invalid_argument("run: measure size mismatch");
    const Rational unit = n ? make_rational(1, static_cast<long>(n)) : Rational(0);

    RunTrace trace;
    trace.final_coloring = c0;
    Coloring& c = trace.final_coloring;

    std::vector<std::int64_t> same(n, 0);
    std::int64_t mono_edges = 0;  // edges with equal endpoint colors
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        auto [s, d] = same_diff_counts(g, c, x);
        same[static_cast<std::size_t>(x)] = s;
        mono_edges += s;
    }
    mono_edges /= 2;

    Rational weighted_m = 0;
    if (mu) weighted_m = potential_M(g, *mu, c);

    auto current_potential = [&]() -> Rational {
        if (mu) return weighted_m;
        return unit * static_cast<long>(2 * mono_edges);
    };

    std::uint64_t quiet = 0;  // consecutive rounds with empty B_n
    for (std::uint64_t round = 0; round < max_rounds; ++round) {
        const auto& cls = schedule.nth_class(round);
        RoundRecord rec;
        rec.round_index = round;
        rec.class_index = static_cast<std::size_t>(round % period);
        rec.potential_before = current_potential();
        for (Vertex x : cls) {
            const auto xi = static_cast<std::size_t>(x);
            const std::int64_t deg = g.degree(x);
            if (2 * same[xi] <= deg) continue;  // diff >= same, no flip
            const std::uint8_t nc = c[xi] ^ 1;
            c[xi] = nc;
            mono_edges += deg - 2 * same[xi];
            if (mu) {
                weighted_m += mu->weight(x) * static_cast<long>(deg - 2 * same[xi]);
                for (Vertex y : g.neighbors(x)) {
                    if (c[static_cast<std::size_t>(y)] == nc)
                        weighted_m += mu->weight(y);
                    else
                        weighted_m -= mu->weight(y);
                }
            }
            same[xi] = deg - same[xi];
            for (Vertex y : g.neighbors(x)) {
                if (c[static_cast<std::size_t>(y)] == nc)
                    ++same[static_cast<std::size_t>(y)];
                else
                    --same[static_cast<std::size_t>(y)];
            }
            rec.flipped.push_back(x);
        }
        rec.potential_after = current_potential();
        rec.flipped_mass = mu ? mu->mass(rec.flipped)
                              : unit * static_cast<long>(rec.flipped.size());
        trace.total_flips += rec.flipped.size();
        quiet = rec.flipped.empty() ? quiet + 1 : 0;
        if (opts.record_empty_rounds || !rec.flipped.empty())
            trace.rounds.push_back(std::move(rec));
        if (quiet >= period && round + 1 >= period) {
            trace.status = RunStatus::Converged;
            return trace;
        }
    }
    if (period == 0 || g.vertex_count() == 0) {
        trace.status = RunStatus::Converged;
        return trace;
    }
    trace.status = RunStatus::MaxRoundsExceeded;
    if (cyclic && opts.max_rounds == 0)
        throw std::logic_error("run: cyclic schedule exceeded the provable round bound");
    return trace;
}

enum class ClaimVariant { Invariant, Quasi };

// Per-round potential-drop check, in exact arithmetic.
//   Invariant (uniform mu): M(G_n) - M(G_{n+1}) >= 2 mu(B_n), each
//   monochromatic edge being counted twice in M.
//   Quasi: requires the cocycle bound and asserts a drop of mu(B_n).
inline bool verify_round_claim(const FiniteGraph& g, const VertexMeasure& mu,
                               const RoundRecord& rec, ClaimVariant variant) {
    Rational drop = rec.potential_before - rec.potential_after;
    if (variant == ClaimVariant::Quasi) {
        if (auto bad = cocycle_bound_violation(g, mu))
            throw std::invalid_argument(
                "verify_round_claim: cocycle bound violated on edge (" +
                std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
        return drop >= rec.flipped_mass;
    }
    return drop >= 2 * rec.flipped_mass;
}

// Telescoping bound: sum of mu(B_n) over the whole run is at most
// cost(G) in the invariant case and M(G_0) in the quasi case.
inline bool verify_telescoping(const RunTrace& trace, const FiniteGraph& g,
                               const VertexMeasure& mu, ClaimVariant variant) {
    Rational flipped_sum = 0;
    for (const auto& rec : trace.rounds) flipped_sum += rec.flipped_mass;
    if (variant == ClaimVariant::Invariant) return flipped_sum <= cost(g, mu);
    Rational m0 = trace.rounds.empty() ? Rational(0) : trace.rounds.front().potential_before;
    return flipped_sum <= m0;
}

}  // namespace unfriendly
