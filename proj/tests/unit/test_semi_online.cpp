#include <doctest.h>

#include <map>

#include "../oracles.hpp"
#include "rentmin/feasibility.hpp"
#include "rentmin/generators.hpp"
#include "rentmin/offline.hpp"
#include "rentmin/semi_online.hpp"

using namespace rentmin;

namespace {

// Replays the incremental oracle batch by batch.
RentSet replay(const std::vector<Job>& jobs, Time T) {
    std::map<Time, std::vector<Job>> batches;
    for (const auto& j : jobs) batches[tau(j, T)].push_back(j);
    OracleState state(T);
    for (auto& [t, batch] : batches) state.push(t, batch);
    return state.rents();
}

}  // namespace

TEST_CASE("tau") {
    CHECK(tau({1, 0, 5}, 10) == 0);
    CHECK(tau({1, 0, 100}, 10) == 90);
    CHECK(tau({1, 7, 10}, 3) == 7);
}

TEST_CASE("semi_online examples") {
    CHECK(semi_online({}, 3).empty());

    std::vector<Job> one{{1, 0, 5}};
    CHECK(same_multiset(semi_online(one, 10), RentSet{{-10, 20}}));

    std::vector<Job> late{{1, 0, 100}, {2, 90, 100}};
    CHECK(same_multiset(semi_online(late, 10), RentSet{{80, 110}}));
}

TEST_CASE("processing order is (tau, d, r, id)") {
    std::vector<Job> jobs{{4, 2, 6}, {3, 0, 6}, {2, 0, 5}, {1, 3, 4}, {9, 0, 5}};
    auto order = semi_online_order(jobs, 3);
    std::vector<JobId> ids;
    for (const auto& j : order) ids.push_back(j.id);
    CHECK(ids == std::vector<JobId>{2, 9, 1, 3, 4});
}

TEST_CASE("oracle_push examples") {
    OracleState state(10);
    CHECK(state.push(0, std::vector<Job>{}) == 0);
    CHECK(state.rents().empty());
    CHECK_FALSE(state.last_tau().has_value());

    CHECK(state.push(0, std::vector<Job>{{1, 0, 5}}) == 1);
    CHECK(same_multiset(state.rents(), RentSet{{-10, 20}}));
    CHECK(state.last_tau() == Time{0});

    // A second (0,5) job still fits: the 3T rent offers five slots in [0, 5).
    CHECK(state.push(0, std::vector<Job>{{2, 0, 5}}) == 0);
    CHECK(state.rents().size() == 1);
    std::vector<Job> both{{1, 0, 5}, {2, 0, 5}};
    CHECK(succeeded(edf(both, state.rents())));
    CHECK(state.slot_of(0) != state.slot_of(1));
}

TEST_CASE("oracle_push rejects out-of-order or mislabelled batches") {
    OracleState state(10);
    state.push(5, std::vector<Job>{{1, 5, 12}});
    CHECK_THROWS_AS(state.push(4, std::vector<Job>{{2, 4, 6}}), ValidationError);
    CHECK_THROWS_AS(state.push(6, std::vector<Job>{{3, 0, 30}}), ValidationError);
    CHECK(state.accepted().size() == 1);
    CHECK_THROWS_AS(OracleState(0), ValidationError);
}

TEST_CASE("incremental oracle matches the from-scratch reference") {
    for (Time T : {1, 2, 3, 5}) {
        for_each_exhaustive(T, 7, 4, [&](const Instance& inst) {
            auto ref = semi_online(inst.jobs, T);
            REQUIRE(ref.sorted() == replay(inst.jobs, T).sorted());
        });
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = 60;
        spec.horizon = 80;
        spec.T = 1 + static_cast<Time>(seed % 9);
        spec.max_window = 25;
        auto inst = gen_random(spec);
        REQUIRE(semi_online(inst.jobs, spec.T).sorted() == replay(inst.jobs, spec.T).sorted());
    }
}

TEST_CASE("incremental oracle keeps a valid matching") {
    GenSpec spec;
    spec.seed = 77;
    spec.n = 400;
    spec.horizon = 300;
    spec.T = 6;
    spec.max_window = 40;
    auto inst = gen_random(spec);
    std::map<Time, std::vector<Job>> batches;
    for (const auto& j : inst.jobs) batches[tau(j, spec.T)].push_back(j);
    OracleState state(spec.T);
    for (auto& [t, batch] : batches) state.push(t, batch);

    std::map<Time, std::int64_t> load;
    for (std::size_t i = 0; i < state.accepted().size(); ++i) {
        const auto& j = state.accepted()[i];
        Time s = state.slot_of(i);
        CHECK(s >= j.r);
        CHECK(s < j.d);
        ++load[s];
    }
    for (auto [s, n] : load) CHECK(n <= active_units_at(state.rents(), s));
}

TEST_CASE("semi_online is feasible and never exceeds OPT") {
    for (Time T : {1, 2, 3}) {
        for_each_exhaustive(T, 6, 4, [&](const Instance& inst) {
            auto rents = semi_online(inst.jobs, T);
            REQUIRE(oracle::matching_feasible(inst.jobs, rents));
            REQUIRE(static_cast<std::int64_t>(rents.size()) <= brute_force_opt(inst.jobs, T).count);
            for (const auto& iv : rents.intervals) REQUIRE(iv.length() == kOracleStretch * T);
        });
    }
}

TEST_CASE("strong monotonicity over event-time prefixes") {
    for (Time T : {1, 2, 3}) {
        for_each_exhaustive(T, 7, 4, [&](const Instance& inst) {
            std::map<Time, std::vector<Job>> batches;
            for (const auto& j : inst.jobs) batches[tau(j, T)].push_back(j);
            OracleState state(T);
            RentSet before;
            for (auto& [t, batch] : batches) {
                state.push(t, batch);
                const auto& after = state.rents();
                REQUIRE(before.is_submultiset_of(after));
                for (const auto& iv : before.difference_from(after).intervals) REQUIRE(iv == oracle_rent(t, T));
                before = after;
            }
        });
    }
}
