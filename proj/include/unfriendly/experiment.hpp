#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "unfriendly/ball_measure.hpp"
#include "unfriendly/dynamics.hpp"
#include "unfriendly/graph.hpp"
#include "unfriendly/measure.hpp"
#include "unfriendly/oracle.hpp"
#include "unfriendly/schedule.hpp"

namespace unfriendly {

struct VerifyToggles {
    bool round_claims = false;
    bool telescoping = false;
    bool unfriendliness = false;
    bool oracle_cross_check = false;  // only for n <= 24
};

struct ExperimentReport {
    RunTrace trace;
    std::uint64_t rounds_executed = 0;
    Rational flipped_mass_sum;
    Rational initial_potential;
    Rational final_potential;
    bool converged = false;
    // Verification outcomes; true means "checked and passed",
    // unset toggles report true with checked_* false.
    bool claims_ok = true;
    bool telescoping_ok = true;
    bool unfriendly_ok = true;
    bool oracle_ok = true;
    std::string failure;  // empty when everything passed
};

// Runs the flip dynamics and applies the requested verifiers. The
// unfriendliness check is recomputed from scratch on the final coloring,
// never taken from engine state. A null measure means uniform, which
// selects the invariant-case claim; any explicit measure selects the
// quasi-invariant claim.
inline ExperimentReport run_experiment(const FiniteGraph& g, const Schedule& schedule,
                                       const Coloring& c0,
                                       const VertexMeasure* measure,
                                       const VerifyToggles& verify,
                                       std::uint64_t max_rounds = 0) {
    RunOptions opts;
    opts.measure = measure;
    opts.max_rounds = max_rounds;
    ExperimentReport report;
    report.trace = run(g, schedule, c0, opts);
    report.converged = report.trace.status == RunStatus::Converged;
    report.rounds_executed = report.trace.rounds.empty()
                                 ? 0
                                 : report.trace.rounds.back().round_index + 1;
    report.flipped_mass_sum = 0;
    for (const auto& rec : report.trace.rounds)
        report.flipped_mass_sum += rec.flipped_mass;
    if (!report.trace.rounds.empty()) {
        report.initial_potential = report.trace.rounds.front().potential_before;
        report.final_potential = report.trace.rounds.back().potential_after;
    }

    const VertexMeasure mu_uniform =
        measure ? VertexMeasure(*measure)
                : VertexMeasure::uniform(std::max<Vertex>(g.vertex_count(), 1));
    const ClaimVariant variant = measure ? ClaimVariant::Quasi : ClaimVariant::Invariant;

    if (verify.round_claims) {
        for (const auto& rec : report.trace.rounds) {
            if (!verify_round_claim(g, mu_uniform, rec, variant)) {
                report.claims_ok = false;
                report.failure = "round claim failed at round " +
                                 std::to_string(rec.round_index) + ": drop " +
                                 to_string(rec.potential_before - rec.potential_after) +
                                 " < bound for mu(B_n) = " + to_string(rec.flipped_mass);
                break;
            }
        }
    }
    if (verify.telescoping && report.claims_ok) {
        if (!verify_telescoping(report.trace, g, mu_uniform, variant)) {
            report.telescoping_ok = false;
            report.failure = "telescoping bound failed: sum mu(B_n) = " +
                             to_string(report.flipped_mass_sum);
        }
    }
    if (verify.unfriendliness && report.converged) {
        auto bad = unfriendly_violators(g, report.trace.final_coloring);
        if (!bad.empty()) {
            report.unfriendly_ok = false;
            report.failure = "final coloring not unfriendly, first violator " +
                             std::to_string(bad.front());
        }
    }
    if (verify.oracle_cross_check) {
        if (g.vertex_count() > oracle::kMaxOracleVertices) {
            report.oracle_ok = false;
            report.failure = "oracle cross-check requires n <= 24";
        } else {
            auto enumeration = oracle::enumerate(g);
            std::uint32_t code = 0;
            for (Vertex x = 0; x < g.vertex_count(); ++x)
                code |= std::uint32_t{report.trace.final_coloring[static_cast<std::size_t>(x)]}
                        << x;
            if (report.converged && !enumeration.results[code].unfriendly) {
                report.oracle_ok = false;
                report.failure = "converged coloring absent from the oracle's unfriendly set";
            }
        }
    }
    return report;
}

// One JSON object per round, line-delimited. Exact rationals go out as
// strings so nothing is rounded.
inline void write_trace(std::ostream& os, const RunTrace& trace) {
    for (const auto& rec : trace.rounds) {
        nlohmann::json j;
        j["n"] = rec.round_index;
        j["class_index"] = rec.class_index;
        j["flipped"] = rec.flipped;
        j["flipped_mass"] = to_string(rec.flipped_mass);
        j["potential_before"] = to_string(rec.potential_before);
        j["potential_after"] = to_string(rec.potential_after);
        os << j.dump() << '\n';
    }
}

// Decimal approximations for plotting; the trace keeps the exact values.
inline void write_summary_csv(std::ostream& os, const RunTrace& trace) {
    os << "round,class_index,flips,flipped_mass,potential_before,potential_after\n";
    for (const auto& rec : trace.rounds) {
        os << rec.round_index << ',' << rec.class_index << ',' << rec.flipped.size()
           << ',' << to_double(rec.flipped_mass) << ','
           << to_double(rec.potential_before) << ','
           << to_double(rec.potential_after) << '\n';
    }
}

struct BoundaryReport {
    Vertex center = 0;
    std::int64_t interior_radius = 0;
    std::int64_t ball_radius = 0;
    Vertex ball_size = 0;
    Vertex shell_size = 0;
    bool interior_stable = false;
    RunStatus status = RunStatus::MaxRoundsExceeded;
    std::uint64_t total_flips = 0;
    // flips_by_distance[r] = total flips at distance r from the center.
    std::vector<std::uint64_t> flips_by_distance;
};

// Frozen-boundary truncation experiment: runs the dynamics on the ball
// B(x, R) with the sphere shell at distance R frozen, and reports flip
// activity binned by distance from the center. Purely empirical; the
// schedule deliberately violates the repetitiveness hypothesis at the
// shell, so no convergence theorem applies.
inline BoundaryReport boundary_experiment(const FiniteGraph& g, Vertex center,
                                          std::int64_t interior_radius,
                                          std::int64_t ball_radius,
                                          std::uint64_t max_rounds) {
    if (interior_radius >= ball_radius)
        throw std::invalid_argument("boundary_experiment: need r < R");
    const auto dist = graph_distance(g, center);

    // Induced subgraph on the ball, breadth-first local ids.
    std::vector<Vertex> ball;
    std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Vertex d = dist[static_cast<std::size_t>(v)];
        if (d != kUnreachable && d <= ball_radius) {
            local[static_cast<std::size_t>(v)] = static_cast<Vertex>(ball.size());
            ball.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (Vertex v : ball)
        for (Vertex w : g.neighbors(v))
            if (v < w && local[static_cast<std::size_t>(w)] != kUnreachable)
                edges.emplace_back(local[static_cast<std::size_t>(v)],
                                   local[static_cast<std::size_t>(w)]);
    FiniteGraph sub = validate_graph(static_cast<Vertex>(ball.size()), edges);

    // Greedy color the ball, then strip the shell out of every class.
    std::vector<Vertex> frozen;
    Schedule full = greedy_schedule(sub);
    std::vector<std::vector<Vertex>> classes;
    for (const auto& cls : full.classes()) {
        std::vector<Vertex> kept;
        for (Vertex v : cls) {
            if (dist[static_cast<std::size_t>(ball[static_cast<std::size_t>(v)])] ==
                ball_radius)
                frozen.push_back(v);
            else
                kept.push_back(v);
        }
        if (!kept.empty()) classes.push_back(std::move(kept));
    }
    if (classes.empty()) classes.emplace_back();
    Schedule schedule(sub, std::move(classes), ScheduleMode::FrozenBoundary, frozen);

    RunOptions opts;
    opts.max_rounds = max_rounds;
    RunTrace trace = run(sub, schedule, zeros_coloring(sub.vertex_count()), opts);

    BoundaryReport report;
    report.center = center;
    report.interior_radius = interior_radius;
    report.ball_radius = ball_radius;
    report.ball_size = static_cast<Vertex>(ball.size());
    report.shell_size = static_cast<Vertex>(frozen.size());
    report.status = trace.status;
    report.total_flips = trace.total_flips;
    report.flips_by_distance.assign(static_cast<std::size_t>(ball_radius) + 1, 0);
    for (const auto& rec : trace.rounds)
        for (Vertex v : rec.flipped) {
            Vertex orig = ball[static_cast<std::size_t>(v)];
            ++report.flips_by_distance[static_cast<std::size_t>(
                dist[static_cast<std::size_t>(orig)])];
        }

    // Interior stability: no flips within B(x, r) during the last full period.
    const std::uint64_t period = schedule.period();
    report.interior_stable = true;
    for (const auto& rec : trace.rounds) {
        if (rec.round_index + period < trace.rounds.back().round_index + 1) continue;
        for (Vertex v : rec.flipped) {
            Vertex orig = ball[static_cast<std::size_t>(v)];
            if (dist[static_cast<std::size_t>(orig)] <= interior_radius)
                report.interior_stable = false;
        }
    }
    return report;
}

}  // namespace unfriendly
