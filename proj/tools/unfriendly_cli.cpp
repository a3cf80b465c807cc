// Command-line driver for the flip-dynamics library: graph generation,
// dynamics runs with exact verification, brute-force oracle reports,
// growth profiles and frozen-boundary truncation experiments.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unfriendly/unfriendly.hpp"

namespace uf = unfriendly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

uf::FiniteGraph load_graph(const std::string& graph_file, const std::string& gen_spec,
                           std::uint64_t seed) {
    if (!graph_file.empty()) {
        std::ifstream in(graph_file);
        if (!in) throw CLI::ValidationError("--graph", "cannot open " + graph_file);
        return uf::read_graph(in);
    }
    if (!gen_spec.empty())
        return uf::generate(uf::parse_generator_spec(gen_spec, seed));
    throw CLI::ValidationError("graph", "need --graph FILE or --gen SPEC");
}

// "uniform", a measure file path, or "ball:CENTER:EPS" with EPS rational.
std::optional<uf::VertexMeasure> load_measure(const std::string& spec,
                                              const uf::FiniteGraph& g) {
    if (spec.empty() || spec == "uniform") return std::nullopt;
    if (spec.rfind("ball:", 0) == 0) {
        std::size_t c1 = spec.find(':', 5);
        if (c1 == std::string::npos)
            throw CLI::ValidationError("--measure", "expected ball:CENTER:EPS");
        uf::Vertex center = std::stoll(spec.substr(5, c1 - 5));
        uf::Rational eps = uf::parse_rational(spec.substr(c1 + 1));
        auto bm = uf::ball_measure(g, center, eps);
        if (static_cast<uf::Vertex>(bm.component.size()) != g.vertex_count())
            throw CLI::ValidationError(
                "--measure", "ball measure needs a connected graph (or run on the component)");
        return uf::VertexMeasure(std::move(bm.weights));
    }
    std::ifstream in(spec);
    if (!in) throw CLI::ValidationError("--measure", "cannot open " + spec);
    auto mu = uf::read_measure(in);
    if (mu.vertex_count() != g.vertex_count())
        throw CLI::ValidationError("--measure", "measure size does not match graph");
    return mu;
}

uf::Schedule load_schedule(const std::string& spec, const uf::FiniteGraph& g,
                           std::uint64_t seed) {
    if (spec.empty() || spec == "greedy") return uf::greedy_schedule(g);
    if (spec == "singleton:id" || spec == "singleton") {
        std::vector<uf::Vertex> order(static_cast<std::size_t>(g.vertex_count()));
        std::iota(order.begin(), order.end(), 0);
        return uf::singleton_schedule(g, order);
    }
    if (spec == "singleton:shuffle") {
        std::vector<uf::Vertex> order(static_cast<std::size_t>(g.vertex_count()));
        std::iota(order.begin(), order.end(), 0);
        uf::SplitMix64 rng(seed);
        rng.shuffle(order);
        return uf::singleton_schedule(g, order);
    }
    throw CLI::ValidationError("--schedule",
                               "expected greedy, singleton:id or singleton:shuffle");
}

uf::Coloring load_c0(const std::string& spec, const uf::FiniteGraph& g) {
    if (spec.empty() || spec == "zeros") return uf::zeros_coloring(g.vertex_count());
    std::ifstream in(spec);
    if (!in) throw CLI::ValidationError("--c0", "cannot open " + spec);
    auto c = uf::read_coloring(in);
    if (static_cast<uf::Vertex>(c.size()) != g.vertex_count())
        throw CLI::ValidationError("--c0", "coloring size does not match graph");
    return c;
}

uf::VerifyToggles parse_verify(const std::string& list) {
    uf::VerifyToggles v;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "claims") v.round_claims = true;
        else if (item == "telescope") v.telescoping = true;
        else if (item == "unfriendly") v.unfriendliness = true;
        else if (item == "oracle") v.oracle_cross_check = true;
        else throw CLI::ValidationError("--verify", "unknown verifier '" + item + "'");
    }
    return v;
}

std::ofstream open_out(const std::string& path, const char* flag) {
    std::ofstream out(path);
    if (!out) throw CLI::ValidationError(flag, "cannot open " + path);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unfriendly 2-colorings via anti-majority flip dynamics"};
    app.require_subcommand(1);

    std::string graph_file, gen_spec, measure_spec, schedule_spec, c0_spec;
    std::string trace_file, summary_file, out_file, coloring_file, verify_list, table_file;
    std::uint64_t seed = 0, max_rounds = 0;
    uf::Vertex center = 0;
    std::int64_t r_max = 10, interior_radius = 0, ball_radius = 0;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_file, "graph file (\"n m\" header + edge lines)");
        cmd->add_option("--gen", gen_spec,
                        "generator spec: grid:W:H | torus:W:H | cycle:N | path:N | "
                        "complete:N | random_regular:N:D | tree:D:DEPTH | "
                        "erdos_renyi:N:M:CAP");
        cmd->add_option("--seed", seed, "seed for generators and shuffled schedules");
    };

    auto* cmd_generate = app.add_subcommand("generate", "emit a generated graph");
    add_graph_opts(cmd_generate);
    cmd_generate->add_option("--out", out_file, "output file (default stdout)");

    auto* cmd_run = app.add_subcommand("run", "run the flip dynamics");
    add_graph_opts(cmd_run);
    cmd_run->add_option("--measure", measure_spec, "uniform | FILE | ball:CENTER:EPS");
    cmd_run->add_option("--schedule", schedule_spec,
                        "greedy | singleton:id | singleton:shuffle");
    cmd_run->add_option("--c0", c0_spec, "zeros | FILE with one 0/1 per line");
    cmd_run->add_option("--max-rounds", max_rounds, "round budget (0 = provable default)");
    cmd_run->add_option("--verify", verify_list,
                        "comma list of claims,telescope,unfriendly,oracle");
    cmd_run->add_option("--trace", trace_file, "per-round JSON-lines trace output");
    cmd_run->add_option("--summary", summary_file, "per-round CSV summary output");

    auto* cmd_verify = app.add_subcommand("verify", "check a coloring for unfriendliness");
    add_graph_opts(cmd_verify);
    cmd_verify->add_option("--coloring", coloring_file, "coloring file, one 0/1 per line")
        ->required();

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive small-graph report");
    add_graph_opts(cmd_oracle);
    cmd_oracle->add_option("--table", table_file, "emit the full flag table as CSV");

    auto* cmd_growth = app.add_subcommand("growth", "ball growth profile from a center");
    add_graph_opts(cmd_growth);
    cmd_growth->add_option("--center", center, "center vertex");
    cmd_growth->add_option("--rmax", r_max, "maximum radius");
    cmd_growth->add_option("--out", out_file, "output file (default stdout)");

    auto* cmd_boundary =
        app.add_subcommand("boundary", "frozen-boundary truncation experiment");
    add_graph_opts(cmd_boundary);
    cmd_boundary->add_option("--center", center, "center vertex");
    cmd_boundary->add_option("--interior", interior_radius, "interior radius r")->required();
    cmd_boundary->add_option("--radius", ball_radius, "ball radius R")->required();
    cmd_boundary->add_option("--max-rounds", max_rounds, "round budget")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_generate->parsed()) {
            auto g = load_graph(graph_file, gen_spec, seed);
            if (out_file.empty()) {
                uf::write_graph(std::cout, g);
            } else {
                auto out = open_out(out_file, "--out");
                uf::write_graph(out, g);
            }
            return kExitOk;
        }

        if (cmd_run->parsed()) {
            auto g = load_graph(graph_file, gen_spec, seed);
            auto mu = load_measure(measure_spec, g);
            auto schedule = load_schedule(schedule_spec, g, seed);
            auto c0 = load_c0(c0_spec, g);
            auto verify = parse_verify(verify_list);
            auto report = uf::run_experiment(g, schedule, c0,
                                             mu ? &*mu : nullptr, verify, max_rounds);
            if (!trace_file.empty()) {
                auto out = open_out(trace_file, "--trace");
                uf::write_trace(out, report.trace);
            }
            if (!summary_file.empty()) {
                auto out = open_out(summary_file, "--summary");
                uf::write_summary_csv(out, report.trace);
            }
            std::cout << "converged " << (report.converged ? "yes" : "no")
                      << "\nrounds " << report.rounds_executed
                      << "\ntotal_flips " << report.trace.total_flips
                      << "\nflipped_mass_sum " << uf::to_string(report.flipped_mass_sum)
                      << "\ninitial_potential " << uf::to_string(report.initial_potential)
                      << "\nfinal_potential " << uf::to_string(report.final_potential)
                      << "\nviolations "
                      << (report.failure.empty() ? "none" : report.failure) << '\n';
            return report.failure.empty() ? kExitOk : kExitVerifyFail;
        }

        if (cmd_verify->parsed()) {
            auto g = load_graph(graph_file, gen_spec, seed);
            std::ifstream in(coloring_file);
            if (!in) throw CLI::ValidationError("--coloring", "cannot open " + coloring_file);
            auto c = uf::read_coloring(in);
            if (static_cast<uf::Vertex>(c.size()) != g.vertex_count())
                throw CLI::ValidationError("--coloring", "size does not match graph");
            auto bad = uf::unfriendly_violators(g, c);
            if (bad.empty()) {
                std::cout << "unfriendly yes\n";
                return kExitOk;
            }
            std::cout << "unfriendly no\nviolators";
            for (auto v : bad) std::cout << ' ' << v;
            std::cout << '\n';
            return kExitVerifyFail;
        }

        if (cmd_oracle->parsed()) {
            auto g = load_graph(graph_file, gen_spec, seed);
            auto enumeration = uf::oracle::enumerate(g);
            bool equiv = uf::oracle::check_fixed_point_equivalence(g);
            auto [best, mono] = uf::oracle::min_monochrome_coloring(g);
            std::cout << "colorings " << enumeration.results.size()
                      << "\nunfriendly_count " << enumeration.unfriendly_count
                      << "\nequivalence " << (equiv ? "yes" : "no")
                      << "\nmin_monochrome_edges " << mono << '\n';
            if (!table_file.empty()) {
                auto out = open_out(table_file, "--table");
                out << "coloring,unfriendly,flip_fixed_point,local_max_cut\n";
                for (const auto& f : enumeration.results)
                    out << f.coloring << ',' << f.unfriendly << ','
                        << f.flip_fixed_point << ',' << f.local_max_cut << '\n';
            }
            return equiv ? kExitOk : kExitVerifyFail;
        }

        if (cmd_growth->parsed()) {
            auto g = load_graph(graph_file, gen_spec, seed);
            auto profile = uf::growth_profile(g, center, r_max);
            std::ostringstream body;
            body << "r,ball_size\n";
            for (std::size_t r = 0; r < profile.size(); ++r)
                body << r << ',' << profile[r] << '\n';
            // log-slope over the last step as a raw summary; no
            // subexponentiality verdict is asserted from a finite sample.
            if (profile.size() >= 2 && profile[profile.size() - 2] > 0)
                body << "log_slope_last,"
                     << std::log(double(profile.back()) /
                                 double(profile[profile.size() - 2]))
                     << '\n';
            if (out_file.empty()) {
                std::cout << body.str();
            } else {
                auto out = open_out(out_file, "--out");
                out << body.str();
            }
            return kExitOk;
        }

        if (cmd_boundary->parsed()) {
            auto g = load_graph(graph_file, gen_spec, seed);
            auto report = uf::boundary_experiment(g, center, interior_radius,
                                                  ball_radius, max_rounds);
            std::cout << "experiment frozen-boundary-truncation (empirical, no theorem)\n"
                      << "ball_size " << report.ball_size
                      << "\nshell_size " << report.shell_size
                      << "\ntotal_flips " << report.total_flips
                      << "\ninterior_stable " << (report.interior_stable ? "yes" : "no")
                      << "\ndistance,flips\n";
            for (std::size_t r = 0; r < report.flips_by_distance.size(); ++r)
                std::cout << r << ',' << report.flips_by_distance[r] << '\n';
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
