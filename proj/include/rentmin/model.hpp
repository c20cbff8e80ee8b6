#pragma once

/**
 * Domain types for rent minimization with unit-size jobs: jobs with integer
 * release times and deadlines, half-open machine rent intervals, multisets of
 * rents, problem instances and job-to-slot schedules.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rentmin {

using Time = std::int64_t;
using JobId = std::int64_t;

/// A unit-length job. It must run in one slot [t, t+1) with r <= t <= d-1.
struct Job {
    JobId id = 0;
    Time r = 0;
    Time d = 0;

    friend bool operator==(const Job&, const Job&) = default;
};

/// Half-open interval [s, c) during which one rented machine is active.
struct RentInterval {
    Time s = 0;
    Time c = 0;

    Time length() const { return c - s; }
    bool covers(Time t) const { return s <= t && t < c; }

    friend bool operator==(const RentInterval&, const RentInterval&) = default;
    friend auto operator<=>(const RentInterval&, const RentInterval&) = default;
};

/**
 * Multiset of rent intervals. Duplicates are parallel machines, so adding the
 * same interval twice raises the cardinality by two. Copies are addressed by
 * their position in `intervals`.
 */
struct RentSet {
    std::vector<RentInterval> intervals;

    RentSet() = default;
    RentSet(std::initializer_list<RentInterval> init) : intervals(init) {}
    explicit RentSet(std::vector<RentInterval> v) : intervals(std::move(v)) {}

    std::size_t size() const { return intervals.size(); }
    bool empty() const { return intervals.empty(); }

    void add(RentInterval iv, std::size_t copies = 1) { intervals.insert(intervals.end(), copies, iv); }
    void add(const RentSet& other) { intervals.insert(intervals.end(), other.intervals.begin(), other.intervals.end()); }

    /// Number of copies of `iv`.
    std::size_t count(RentInterval iv) const;

    /// Intervals sorted ascending; two rent sets are equal as multisets iff
    /// their sorted forms are equal.
    std::vector<RentInterval> sorted() const;

    /// Every interval shifted by `delta`.
    RentSet shifted(Time delta) const;

    /// True when every copy in *this also occurs (with multiplicity) in `other`.
    bool is_submultiset_of(const RentSet& other) const;

    /// Multiset difference other \ *this, assuming *this is a sub-multiset.
    RentSet difference_from(const RentSet& other) const;

    friend bool same_multiset(const RentSet& a, const RentSet& b) { return a.sorted() == b.sorted(); }
};

struct Instance {
    Time T = 1;
    Time lambda = 0;
    std::vector<Job> jobs;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// One placed job: its slot and the index of the rent copy that runs it.
struct Assignment {
    JobId id = 0;
    Time slot = 0;
    std::size_t rent = 0;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Placements in the same order as the job list the schedule was built for.
struct Schedule {
    std::vector<Assignment> assignments;

    std::size_t size() const { return assignments.size(); }
    std::optional<Assignment> find(JobId id) const;
};

/// Input that breaks a documented precondition or invariant.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what, std::optional<JobId> job = std::nullopt)
        : std::invalid_argument(what), job_(job) {}

    std::optional<JobId> job() const { return job_; }

private:
    std::optional<JobId> job_;
};

/// An internal guarantee failed. Always an implementation bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Check every Instance and Job invariant. Returns the instance unchanged, or
 * throws ValidationError naming the first offending job.
 */
const Instance& validate_instance(const Instance& inst);

/// Checks a job list on its own (d >= r+1, d-r >= lambda+1, positive unique ids).
void validate_jobs(std::span<const Job> jobs, Time lambda = 0);

/**
 * Check a schedule against its jobs and rents: one placement per job, slot in
 * [r, d-1], the assigned copy covers the slot, and no (copy, slot) pair is used
 * twice. Returns a description of the first problem found.
 */
std::optional<std::string> schedule_problem(std::span<const Job> jobs, const RentSet& rents, const Schedule& schedule);

}  // namespace rentmin
