#include <doctest.h>

#include "../oracles.hpp"
#include "rentmin/feasibility.hpp"
#include "rentmin/generators.hpp"

using namespace rentmin;

namespace {

std::vector<Job> jobs_of(std::initializer_list<std::pair<Time, Time>> windows) {
    std::vector<Job> out;
    JobId id = 1;
    for (auto [r, d] : windows) out.push_back({id++, r, d});
    return out;
}

// Every rent multiset of at most `k` length-T intervals with starts in [lo, hi].
template <class F>
void for_each_rent_set(Time T, Time lo, Time hi, int k, F&& visit) {
    std::vector<Time> starts;
    auto rec = [&](auto&& self, Time from) -> void {
        RentSet I;
        for (auto s : starts) I.add({s, s + T});
        visit(I);
        if (static_cast<int>(starts.size()) == k) return;
        for (Time s = from; s <= hi; ++s) {
            starts.push_back(s);
            self(self, s);
            starts.pop_back();
        }
    };
    rec(rec, lo);
}

}  // namespace

TEST_CASE("active_units_at") {
    CHECK(active_units_at({}, 5) == 0);
    CHECK(active_units_at({{0, 10}, {0, 10}, {5, 15}}, 7) == 3);
    CHECK(active_units_at({{0, 10}}, 10) == 0);
    CHECK(active_units_at({{-10, 20}}, -10) == 1);
}

TEST_CASE("active_units_range") {
    CHECK(active_units_range({{0, 10}}, 0, 10) == 10);
    CHECK(active_units_range({{0, 10}}, 5, 20) == 5);
    CHECK(active_units_range({{-10, 20}}, 0, 5) == 5);
    CHECK(active_units_range({{0, 10}}, 3, 3) == 0);
    CHECK(active_units_range({{0, 10}}, 12, 20) == 0);
    CHECK_THROWS_AS(active_units_range({{0, 10}}, 5, 4), ValidationError);
}

TEST_CASE("active_units_range is additive and monotone in I") {
    RentSet I{{-3, 2}, {0, 4}, {1, 7}, {1, 7}};
    for (Time a = -5; a <= 9; ++a)
        for (Time b = a; b <= 9; ++b) {
            CHECK(active_units_range(I, a, b) == oracle::units_range(I, a, b));
            for (Time c = b; c <= 9; ++c)
                CHECK(active_units_range(I, a, b) + active_units_range(I, b, c) == active_units_range(I, a, c));
            RentSet more = I;
            more.add({a, a + 3});
            CHECK(active_units_range(more, a, b) >= active_units_range(I, a, b));
        }
}

TEST_CASE("jobs_in_window") {
    CHECK(jobs_in_window(jobs_of({{0, 5}}), 0, 5) == 1);
    CHECK(jobs_in_window(jobs_of({{0, 5}}), 1, 5) == 0);
    CHECK(jobs_in_window(jobs_of({{0, 100}, {90, 100}}), 90, 100) == 1);
}

TEST_CASE("hall_violation examples") {
    CHECK(hall_feasible({}, {}));
    auto w = hall_violation(jobs_of({{0, 2}, {0, 2}, {0, 2}}), {{0, 2}});
    REQUIRE(w.has_value());
    CHECK(*w == HallWitness{0, 2, 2, 3});
    CHECK(hall_feasible(jobs_of({{0, 5}}), {{-10, 20}}));
    CHECK_FALSE(hall_feasible(jobs_of({{0, 1}}), {}));
    CHECK(hall_feasible(jobs_of({{0, 100}, {90, 100}}), {{80, 110}}));
}

TEST_CASE("hall witness is a genuine violating window") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = 1 + static_cast<std::int64_t>(seed % 7);
        spec.horizon = 10;
        spec.max_window = 6;
        auto inst = gen_random(spec);
        SplitMix64 rng(seed * 7919);
        RentSet I;
        auto k = rng.uniform(0, 3);
        for (int i = 0; i < k; ++i) {
            auto s = rng.uniform(-3, 9);
            I.add({s, s + rng.uniform(1, 4)});
        }
        auto w = hall_violation(inst.jobs, I);
        auto expected = oracle::hall_violation(inst.jobs, I);
        CHECK(w.has_value() == expected.has_value());
        CHECK(w.has_value() == !oracle::matching_feasible(inst.jobs, I));
        if (w) {
            CHECK(w->supply == oracle::units_range(I, w->r_star, w->d_star));
            CHECK(w->demand == oracle::confined(inst.jobs, w->r_star, w->d_star));
            CHECK(w->supply < w->demand);
        }
    }
}

TEST_CASE("edf examples") {
    auto empty = edf({}, {});
    REQUIRE(succeeded(empty));
    CHECK(std::get<EdfSuccess>(empty).schedule.size() == 0);

    auto none = edf(jobs_of({{0, 1}}), {});
    REQUIRE_FALSE(succeeded(none));
    CHECK(std::get<EdfFailure>(none).fail_time == 1);

    auto jobs = jobs_of({{0, 100}, {90, 100}});
    RentSet I{{80, 110}};
    auto out = edf(jobs, I);
    REQUIRE(succeeded(out));
    const auto& s = std::get<EdfSuccess>(out).schedule;
    CHECK(s.find(1)->slot == 80);
    CHECK(s.find(2)->slot == 90);
    CHECK_FALSE(schedule_problem(jobs, I, s).has_value());
}

TEST_CASE("edf tie-break uses smaller id among equal deadlines") {
    std::vector<Job> jobs{{5, 0, 3}, {2, 0, 3}};
    auto out = edf(jobs, {{0, 1}, {1, 2}});
    REQUIRE(succeeded(out));
    auto s = std::get<EdfSuccess>(out).schedule;
    CHECK(s.find(2)->slot == 0);
    CHECK(s.find(5)->slot == 1);
    CHECK(s.assignments[0].id == 5);
}

TEST_CASE("edf fail time on a gap: pending job dies when coverage ends") {
    auto jobs = jobs_of({{0, 3}, {0, 3}, {5, 9}});
    CHECK(edf_fail_time(jobs, {{0, 1}, {6, 7}}) == Time{3});
    CHECK(edf_fail_time(jobs, {{0, 2}, {6, 7}}) == std::nullopt);
    CHECK(edf_fail_time(jobs_of({{4, 6}}), {{0, 4}}) == Time{6});
}

TEST_CASE("edf and hall agree; fail time is the first unsatisfiable deadline") {
    for (Time T : {1, 2, 3}) {
        for_each_exhaustive(T, 6, 3, [&](const Instance& inst) {
            for_each_rent_set(T, -T, 6, 2, [&](const RentSet& I) {
                auto out = edf(inst.jobs, I);
                bool feasible = hall_feasible(inst.jobs, I);
                REQUIRE(succeeded(out) == feasible);
                REQUIRE(edf_fail_time(inst.jobs, I).has_value() == !feasible);
                if (feasible) {
                    REQUIRE_FALSE(schedule_problem(inst.jobs, I, std::get<EdfSuccess>(out).schedule).has_value());
                } else {
                    Time d = std::get<EdfFailure>(out).fail_time;
                    REQUIRE(edf_fail_time(inst.jobs, I) == d);
                    REQUIRE_FALSE(oracle::hall_violation(inst.jobs, I, d - 1).has_value());
                    auto w = oracle::hall_violation(inst.jobs, I, d);
                    REQUIRE(w.has_value());
                    REQUIRE(w->d_star == d);
                }
            });
        });
    }
}

TEST_CASE("edf scales with the number of events, not the time span") {
    std::vector<Job> jobs;
    RentSet I;
    for (JobId i = 0; i < 2000; ++i) {
        Time base = i * 1'000'000'000LL;
        jobs.push_back({i + 1, base, base + 5});
        I.add({base + 2, base + 3});
    }
    CHECK(succeeded(edf(jobs, I)));
    jobs.push_back({5000, 0, 2});
    CHECK(edf_fail_time(jobs, I) == Time{2});
}
