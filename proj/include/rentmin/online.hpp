#pragma once

/**
 * Event-driven simulation of the 6-competitive online renting algorithm.
 *
 * A job joins the oracle's input J_t once it is visible (r <= t) and emergent
 * (d <= t + T). Whenever the oracle grows by Delta at time t, the algorithm
 * performs Delta batch rents at t, each four machines on [t, t+T) and two on
 * [t+T, t+2T). Jobs run by EDF on the rents made so far.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rentmin/model.hpp"

namespace rentmin {

inline constexpr std::size_t kBatchNow = 4;
inline constexpr std::size_t kBatchLater = 2;
inline constexpr std::size_t kBatchSize = kBatchNow + kBatchLater;

/// The six machines rented in response to one oracle increment at time t.
struct BatchRent {
    Time t = 0;
    std::array<RentInterval, kBatchSize> intervals{};

    static BatchRent at(Time t, Time T);
};

/// The time a job enters J_t: the first t with r <= t and d <= t + T.
inline Time emergent_entry_time(const Job& j, Time T) { return j.r > j.d - T ? j.r : j.d - T; }

/// Distinct entry times of `jobs`, ascending.
std::vector<Time> event_times(std::span<const Job> jobs, Time T);

struct PlacedJob {
    JobId id = 0;
    Time slot = 0;

    friend bool operator==(const PlacedJob&, const PlacedJob&) = default;
};

/**
 * One event time. `rents` are the copies issued at t (delta batches).
 * `assigned` lists the jobs that entered J_t at t with the slot EDF gave them.
 */
struct TraceStep {
    Time t = 0;
    std::size_t delta = 0;
    std::vector<RentInterval> rents;
    std::vector<PlacedJob> assigned;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct OnlineTrace {
    std::vector<TraceStep> steps;
    std::size_t total_rents = 0;
    std::size_t total_batches = 0;
    std::size_t oracle_size = 0;

    /// Every rent issued, in issue order.
    RentSet rent_set() const;

    friend bool operator==(const OnlineTrace&, const OnlineTrace&) = default;
};

/// Result of a simulation: the trace plus the full schedule (rent copies
/// index into trace.rent_set()).
struct OnlineRun {
    OnlineTrace trace;
    Schedule schedule;
};

/**
 * Run the online algorithm on a validated instance with lambda = 0. Throws
 * ValidationError if lambda != 0 and InvariantError if the final rents do not
 * admit an EDF schedule.
 */
OnlineRun simulate_online(const Instance& inst);

/// Exact non-negative rational.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
};

/// total_rents / opt in lowest terms. Throws ValidationError if opt == 0.
Ratio competitive_ratio(const OnlineTrace& trace, std::int64_t opt);

}  // namespace rentmin
