#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

#include "unfriendly/generate.hpp"
#include "unfriendly/schedule.hpp"

using namespace unfriendly;

namespace {

// Oracle: no class of the schedule contains both endpoints of any edge,
// and every vertex is scheduled exactly once per period.
void check_schedule_contract(const FiniteGraph& g, const Schedule& s) {
    std::vector<int> appearances(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& cls : s.classes()) {
        for (Vertex x : cls) {
            ++appearances[static_cast<std::size_t>(x)];
            for (Vertex y : g.neighbors(x))
                CHECK(!std::binary_search(cls.begin(), cls.end(), y));
        }
    }
    for (Vertex f : s.frozen()) ++appearances[static_cast<std::size_t>(f)];
    for (int a : appearances) CHECK(a == 1);
}

}  // namespace

TEST_CASE("greedy schedule on small graphs") {
    auto edge = validate_graph(2, {{0, 1}});
    auto s = greedy_schedule(edge);
    CHECK(s.classes() == std::vector<std::vector<Vertex>>{{0}, {1}});

    auto triangle = make_cycle(3);
    CHECK(greedy_schedule(triangle).period() == 3);

    auto c4 = make_cycle(4);
    CHECK(greedy_schedule(c4).classes() == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
}

TEST_CASE("greedy schedule uses at most d+1 classes") {
    for (std::uint64_t seed : {1, 2, 3, 7, 9}) {
        auto g = make_erdos_renyi_capped(80, 160, 7, seed);
        auto s = greedy_schedule(g);
        CHECK(static_cast<std::int64_t>(s.period()) <= g.max_degree() + 1);
        check_schedule_contract(g, s);
    }
}

TEST_CASE("singleton schedules") {
    auto g = make_path(3);
    auto s = singleton_schedule(g, {0, 1, 2});
    CHECK(s.period() == 3);
    CHECK(s.nth_class(0) == std::vector<Vertex>{0});
    auto rev = singleton_schedule(g, {2, 1, 0});
    CHECK(rev.nth_class(0) == std::vector<Vertex>{2});
    check_schedule_contract(g, rev);

    auto one = singleton_schedule(validate_graph(1, {}), {0});
    CHECK(one.period() == 1);

    CHECK_THROWS_AS(singleton_schedule(g, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(singleton_schedule(g, {0, 1}), std::invalid_argument);
}

TEST_CASE("nth_class cycles") {
    auto g = make_cycle(4);
    auto s = greedy_schedule(g);
    REQUIRE(s.period() == 2);
    CHECK(s.nth_class(5) == s.classes()[1]);
    CHECK(s.nth_class(0) == s.classes()[0]);
    // covering: every vertex appears within one period
    std::vector<char> seen(4, 0);
    for (std::uint64_t n = 0; n < s.period(); ++n)
        for (Vertex x : s.nth_class(n)) seen[static_cast<std::size_t>(x)] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == 4);
}

TEST_CASE("schedule rejects dependent classes") {
    auto g = validate_graph(2, {{0, 1}});
    CHECK_THROWS_AS(Schedule(g, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("schedule serialization round trip") {
    auto g = make_cycle(4);
    auto s = greedy_schedule(g);
    std::ostringstream os;
    write_schedule(os, s);
    CHECK(os.str() == "period 2 mode cyclic\n0 2\n1 3\n");
    std::istringstream is(os.str());
    auto back = read_schedule(is, g);
    CHECK(back.classes() == s.classes());

    Schedule frozen(g, {{0, 2}, {1}}, ScheduleMode::FrozenBoundary, {3});
    std::ostringstream os2;
    write_schedule(os2, frozen);
    std::istringstream is2(os2.str());
    auto back2 = read_schedule(is2, g);
    CHECK(back2.mode() == ScheduleMode::FrozenBoundary);
    CHECK(back2.frozen() == std::vector<Vertex>{3});
}
