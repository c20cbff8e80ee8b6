#pragma once

/**
 * Renting with activation delay lambda: a machine rented at t is active on
 * [t + lambda, t + lambda + T). Handled by reduction. Deadlines are pulled in
 * by lambda, the no-delay algorithm runs on the result and every rent it
 * issues is activated lambda later. The cost is unchanged and stays within
 * 6 (lambda + 1) of the optimum.
 */

#include "rentmin/model.hpp"
#include "rentmin/online.hpp"

namespace rentmin {

/// Same jobs with d reduced by lambda, lambda set to 0. Requires d - r >= lambda + 1.
Instance strip_delay(const Instance& inst);

struct DelayTrace {
    Time lambda = 0;
    OnlineTrace inner;       // run on strip_delay(inst); rents at issue time
    RentSet shifted_rents;   // inner rents moved lambda later, same order
    Schedule real_schedule;  // against the original deadlines and shifted_rents
};

/// Runs the reduction. Throws ValidationError for invalid instances.
DelayTrace simulate_with_delay(const Instance& inst);

}  // namespace rentmin
