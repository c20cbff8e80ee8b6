#include <doctest.h>

#include "../oracles.hpp"
#include "rentmin/delay.hpp"
#include "rentmin/feasibility.hpp"
#include "rentmin/generators.hpp"
#include "rentmin/offline.hpp"

using namespace rentmin;

TEST_CASE("strip_delay examples") {
    Instance plain{10, 0, {{1, 0, 5}, {2, 3, 9}}};
    CHECK(strip_delay(plain) == plain);

    auto out = strip_delay({10, 2, {{1, 0, 5}}});
    CHECK(out == Instance{10, 0, {{1, 0, 3}}});

    CHECK_THROWS_AS(strip_delay({10, 5, {{1, 0, 5}}}), ValidationError);
}

TEST_CASE("simulate_with_delay shifts rents and slots by lambda") {
    Instance inst{10, 2, {{1, 0, 7}}};
    auto trace = simulate_with_delay(inst);
    CHECK(trace.lambda == 2);
    CHECK(trace.inner.total_rents == 6);
    REQUIRE(trace.inner.steps.size() == 1);
    CHECK(trace.inner.steps[0].t == 0);
    CHECK(same_multiset(trace.shifted_rents, RentSet{{2, 12}, {2, 12}, {2, 12}, {2, 12}, {12, 22}, {12, 22}}));
    CHECK(trace.real_schedule.find(1)->slot == 2);
    CHECK_FALSE(schedule_problem(inst.jobs, trace.shifted_rents, trace.real_schedule).has_value());
}

TEST_CASE("delay reduction is feasible and within 6(lambda+1) of OPT") {
    for (Time lambda : {1, 2, 3}) {
        for (Time T : {1, 2, 3}) {
            for_each_exhaustive(T, 7, 3, [&](const Instance& base) {
                for (const auto& j : base.jobs)
                    if (j.d - j.r < lambda + 1) return;
                Instance inst = base;
                inst.lambda = lambda;
                auto trace = simulate_with_delay(inst);

                REQUIRE(oracle::matching_feasible(inst.jobs, trace.shifted_rents));
                REQUIRE_FALSE(schedule_problem(inst.jobs, trace.shifted_rents, trace.real_schedule).has_value());
                REQUIRE(trace.shifted_rents.size() == trace.inner.total_rents);

                std::size_t k = 0;
                for (const auto& step : trace.inner.steps)
                    for (std::size_t i = 0; i < step.rents.size(); ++i, ++k)
                        REQUIRE(trace.shifted_rents.intervals[k].s >= step.t + lambda);

                if (inst.jobs.empty()) return;
                auto opt = brute_force_opt(inst.jobs, T).count;
                auto stripped = brute_force_opt(strip_delay(inst).jobs, T).count;
                REQUIRE(static_cast<std::int64_t>(trace.inner.total_rents) <= 6 * (lambda + 1) * opt);
                REQUIRE(stripped <= (lambda + 1) * opt);
            });
        }
    }
}
