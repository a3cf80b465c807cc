#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "unfriendly/experiment.hpp"
#include "unfriendly/generate.hpp"

using namespace unfriendly;

TEST_CASE("generator families") {
    auto torus = generate(parse_generator_spec("torus:3:3", 0));
    CHECK(torus.vertex_count() == 9);
    for (Vertex x = 0; x < 9; ++x) CHECK(torus.degree(x) == 4);

    auto cyc = generate(parse_generator_spec("cycle:5", 0));
    CHECK(cyc.vertex_count() == 5);
    for (Vertex x = 0; x < 5; ++x) CHECK(cyc.degree(x) == 2);

    auto reg = generate(parse_generator_spec("random_regular:10:3", 7));
    CHECK(reg.vertex_count() == 10);
    for (Vertex x = 0; x < 10; ++x) CHECK(reg.degree(x) == 3);
    CHECK(reg.edge_count() == 15);

    auto tree = generate(parse_generator_spec("tree:3:2", 0));
    CHECK(tree.vertex_count() == 10);
    CHECK(tree.degree(0) == 3);

    auto er = generate(parse_generator_spec("erdos_renyi:50:80:5", 3));
    CHECK(er.vertex_count() == 50);
    CHECK(er.max_degree() <= 5);

    CHECK_THROWS(parse_generator_spec("moebius:4", 0));
    CHECK_THROWS(generate(parse_generator_spec("random_regular:5:3", 0)));  // n*d odd
}

TEST_CASE("generation is seed-deterministic") {
    for (const char* spec : {"random_regular:40:4", "erdos_renyi:40:70:6"}) {
        auto a = generate(parse_generator_spec(spec, 99));
        auto b = generate(parse_generator_spec(spec, 99));
        auto c = generate(parse_generator_spec(spec, 100));
        CHECK(graph_to_string(a) == graph_to_string(b));
        CHECK(graph_to_string(a) != graph_to_string(c));
    }
}

TEST_CASE("run_experiment with all verifiers on a torus") {
    auto g = generate(parse_generator_spec("torus:8:8", 0));
    VerifyToggles v;
    v.round_claims = v.telescoping = v.unfriendliness = true;
    auto report = run_experiment(g, greedy_schedule(g), zeros_coloring(64), nullptr, v);
    CHECK(report.converged);
    CHECK(report.failure.empty());
    CHECK(report.trace.total_flips <= static_cast<std::uint64_t>(g.edge_count()));
}

TEST_CASE("run_experiment oracle cross-check") {
    auto g = make_cycle(6);
    VerifyToggles v;
    v.unfriendliness = v.oracle_cross_check = true;
    auto report = run_experiment(g, greedy_schedule(g), zeros_coloring(6), nullptr, v);
    CHECK(report.converged);
    CHECK(report.oracle_ok);
    CHECK(report.failure.empty());

    auto big = make_path(30);
    VerifyToggles vo;
    vo.oracle_cross_check = true;
    auto bad = run_experiment(big, greedy_schedule(big), zeros_coloring(30), nullptr, vo);
    CHECK(!bad.oracle_ok);
}

TEST_CASE("already-unfriendly start means zero flips") {
    auto g = make_cycle(4);
    VerifyToggles v;
    v.unfriendliness = true;
    auto report = run_experiment(g, greedy_schedule(g), {1, 0, 1, 0}, nullptr, v);
    CHECK(report.converged);
    CHECK(report.trace.total_flips == 0);
    CHECK(report.rounds_executed == greedy_schedule(g).period());
}

TEST_CASE("trace and summary emission") {
    auto g = make_cycle(4);
    auto trace = run(g, greedy_schedule(g), zeros_coloring(4));
    std::ostringstream tr;
    write_trace(tr, trace);
    auto first_line = tr.str().substr(0, tr.str().find('\n'));
    auto j = nlohmann::json::parse(first_line);
    CHECK(j["n"] == 0);
    CHECK(j["flipped"] == std::vector<int>{0, 2});
    CHECK(j["flipped_mass"] == "1/2");
    CHECK(j["potential_before"] == "2");
    CHECK(j["potential_after"] == "0");

    std::ostringstream csv;
    write_summary_csv(csv, trace);
    CHECK(csv.str().rfind("round,class_index,flips,", 0) == 0);
}

TEST_CASE("identical runs produce byte-identical traces") {
    auto g = generate(parse_generator_spec("erdos_renyi:60:110:6", 5));
    auto make_trace = [&]() {
        auto trace = run(g, greedy_schedule(g), zeros_coloring(60));
        std::ostringstream os;
        write_trace(os, trace);
        return os.str();
    };
    CHECK(make_trace() == make_trace());
}

TEST_CASE("boundary experiment on a grid") {
    auto g = make_grid(41, 41, false);
    Vertex center = 20 * 41 + 20;
    auto report = boundary_experiment(g, center, 5, 12, 4000);
    CHECK(report.ball_size > 0);
    CHECK(report.shell_size > 0);
    CHECK(report.flips_by_distance.size() == 13);
    // frozen shell never flips
    CHECK(report.flips_by_distance[12] == 0);
    CHECK(report.interior_stable);
}

TEST_CASE("boundary experiment minimal shell smoke case") {
    auto g = make_grid(9, 9, false);
    auto report = boundary_experiment(g, 4 * 9 + 4, 2, 3, 500);
    CHECK(report.ball_size > 0);
    CHECK(report.flips_by_distance.size() == 4);
    CHECK_THROWS_AS(boundary_experiment(g, 0, 3, 3, 10), std::invalid_argument);
}
