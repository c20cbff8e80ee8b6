#pragma once

/**
 * Active-unit accounting over rent multisets, the window (Hall) condition for
 * feasibility, and the earliest-deadline-first scheduler that doubles as an
 * O(n log n) feasibility checker.
 *
 * A rent set I is feasible for jobs J iff for every window [r*, d*)
 *
 *     A_I(r*, d*) >= |J(r*, d*)|
 *
 * where A_I(r*, d*) is the number of machine-slots I provides in the window
 * and J(r*, d*) are the jobs whose whole [r, d) lies inside it.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "rentmin/model.hpp"

namespace rentmin {

/// A_I(t): number of copies in I whose interval contains slot t.
std::int64_t active_units_at(const RentSet& rents, Time t);

/// A_I(r*, d*): sum of A_I(t) over [r*, d*). Throws ValidationError if r* > d*.
std::int64_t active_units_range(const RentSet& rents, Time r_star, Time d_star);

/// |J(r*, d*)|: jobs with r* <= r and d <= d*.
std::int64_t jobs_in_window(std::span<const Job> jobs, Time r_star, Time d_star);

/// A window whose supply falls short of the jobs confined to it.
struct HallWitness {
    Time r_star = 0;
    Time d_star = 0;
    std::int64_t supply = 0;
    std::int64_t demand = 0;

    friend bool operator==(const HallWitness&, const HallWitness&) = default;
};

/**
 * Window-condition check. Returns nullopt when I is feasible for J, otherwise a
 * violating window. Only windows with r* a release time and d* a deadline are
 * examined; shrinking any window to those endpoints keeps its demand and never
 * adds supply. Runs in O((n + m) log n) with a range-add/range-min tree.
 */
std::optional<HallWitness> hall_violation(std::span<const Job> jobs, const RentSet& rents);

inline bool hall_feasible(std::span<const Job> jobs, const RentSet& rents) {
    return !hall_violation(jobs, rents).has_value();
}

struct EdfSuccess {
    Schedule schedule;
};

struct EdfFailure {
    Time fail_time = 0;
};

using EdfOutcome = std::variant<EdfSuccess, EdfFailure>;

inline bool succeeded(const EdfOutcome& o) { return std::holds_alternative<EdfSuccess>(o); }

/**
 * Earliest deadline first over the slots covered by `rents`.
 *
 * At each covered slot t the scheduler places up to A_I(t) released, pending
 * jobs, smallest deadline first and smaller id on ties. Each placed job takes
 * the lowest-indexed free rent copy covering t. Empty time is skipped, so the
 * cost is O((n + m) log(n + m)) regardless of the time span.
 *
 * On failure the result carries the fail time: the smallest deadline d of a
 * job that is still pending once slot d-1 has passed.
 */
EdfOutcome edf(std::span<const Job> jobs, const RentSet& rents);

/// Same sweep as edf() without building the schedule. nullopt means success.
std::optional<Time> edf_fail_time(std::span<const Job> jobs, const RentSet& rents);

}  // namespace rentmin
