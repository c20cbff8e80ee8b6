#include "rentmin/delay.hpp"

namespace rentmin {

Instance strip_delay(const Instance& inst) {
    validate_instance(inst);
    Instance out{inst.T, 0, inst.jobs};
    for (auto& j : out.jobs) j.d -= inst.lambda;
    return out;
}

DelayTrace simulate_with_delay(const Instance& inst) {
    auto run = simulate_online(strip_delay(inst));

    DelayTrace out;
    out.lambda = inst.lambda;
    out.shifted_rents = run.trace.rent_set().shifted(inst.lambda);
    // Inner slot t in [r, d - lambda - 1] maps to t + lambda in [r, d - 1],
    // inside the same rent copy after its shift.
    out.real_schedule = std::move(run.schedule);
    for (auto& a : out.real_schedule.assignments) a.slot += inst.lambda;
    out.inner = std::move(run.trace);
    return out;
}

}  // namespace rentmin
