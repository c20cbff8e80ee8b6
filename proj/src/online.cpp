#include "rentmin/online.hpp"

#include <algorithm>
#include <numeric>
#include <variant>

#include "rentmin/feasibility.hpp"
#include "rentmin/semi_online.hpp"

namespace rentmin {

BatchRent BatchRent::at(Time t, Time T) {
    BatchRent b{t, {}};
    for (std::size_t i = 0; i < kBatchNow; ++i) b.intervals[i] = {t, t + T};
    for (std::size_t i = kBatchNow; i < kBatchSize; ++i) b.intervals[i] = {t + T, t + 2 * T};
    return b;
}

std::vector<Time> event_times(std::span<const Job> jobs, Time T) {
    std::vector<Time> times;
    times.reserve(jobs.size());
    for (const auto& j : jobs) times.push_back(emergent_entry_time(j, T));
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

RentSet OnlineTrace::rent_set() const {
    RentSet out;
    out.intervals.reserve(total_rents);
    for (const auto& step : steps) out.intervals.insert(out.intervals.end(), step.rents.begin(), step.rents.end());
    return out;
}

OnlineRun simulate_online(const Instance& inst) {
    if (inst.lambda != 0) throw ValidationError("simulate_online needs lambda = 0; use simulate_with_delay");
    const Time T = inst.T;
    const auto& jobs = inst.jobs;

    std::vector<std::size_t> order(jobs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return emergent_entry_time(jobs[a], T) < emergent_entry_time(jobs[b], T);
    });

    OracleState oracle(T);
    OnlineRun run;
    RentSet rents;
    std::vector<Job> batch;
    std::vector<std::pair<std::size_t, std::size_t>> step_members;  // (step, job index)

    for (std::size_t i = 0; i < order.size();) {
        Time t = emergent_entry_time(jobs[order[i]], T);
        batch.clear();
        std::size_t step = run.trace.steps.size();
        for (; i < order.size() && emergent_entry_time(jobs[order[i]], T) == t; ++i) {
            batch.push_back(jobs[order[i]]);
            step_members.emplace_back(step, order[i]);
        }
        std::size_t delta = oracle.push(t, batch);

        TraceStep s;
        s.t = t;
        s.delta = delta;
        auto b = BatchRent::at(t, T);
        for (std::size_t k = 0; k < delta; ++k) s.rents.insert(s.rents.end(), b.intervals.begin(), b.intervals.end());
        rents.intervals.insert(rents.intervals.end(), s.rents.begin(), s.rents.end());
        run.trace.total_batches += delta;
        run.trace.steps.push_back(std::move(s));
    }
    run.trace.total_rents = rents.size();
    run.trace.oracle_size = oracle.rents().size();

    // EDF only compares released jobs and rents already active, so running it
    // over the final rent set reproduces the per-step online schedule.
    auto outcome = edf(jobs, rents);
    if (auto* fail = std::get_if<EdfFailure>(&outcome))
        throw InvariantError("online rents infeasible: EDF fails at " + std::to_string(fail->fail_time));
    run.schedule = std::move(std::get<EdfSuccess>(outcome).schedule);

    for (auto [step, idx] : step_members)
        run.trace.steps[step].assigned.push_back({jobs[idx].id, run.schedule.assignments[idx].slot});
    return run;
}

Ratio competitive_ratio(const OnlineTrace& trace, std::int64_t opt) {
    if (opt <= 0) throw ValidationError("competitive ratio needs opt >= 1");
    auto num = static_cast<std::int64_t>(trace.total_rents);
    auto g = std::gcd(num, opt);
    return {num / g, opt / g};
}

}  // namespace rentmin
