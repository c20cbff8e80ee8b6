#pragma once

/**
 * The 3T-augmented semi-online oracle. Jobs are taken in non-decreasing order
 * of tau_j = max(r_j, d_j - T); whenever the accepted jobs stop fitting, one
 * rent [tau_j - T, tau_j + 2T) is added. Its cardinality never exceeds the
 * offline optimum and it only ever grows as the online job set J_t grows.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rentmin/model.hpp"

namespace rentmin {

/// Augmentation factor of the oracle's rents (length 3T).
inline constexpr Time kOracleStretch = 3;

/// tau_j = max(r_j, d_j - T).
inline Time tau(const Job& j, Time T) { return std::max(j.r, j.d - T); }

/// The oracle rent opened for jobs with tau = t: [t - T, t + 2T).
inline RentInterval oracle_rent(Time t, Time T) { return {t - T, t - T + kOracleStretch * T}; }

/// Processing order: (tau, d, r, id) ascending.
std::vector<Job> semi_online_order(std::span<const Job> jobs, Time T);

/**
 * Reference implementation. Follows the processing order and re-runs EDF on
 * the accepted jobs after every insertion.
 */
RentSet semi_online(std::span<const Job> jobs, Time T);

/**
 * Incrementally maintained oracle.
 *
 * Feed it the jobs of each event time t = tau in increasing t. Rather than
 * re-running EDF per job, the state keeps an explicit job-to-slot matching and
 * searches for an augmenting path inside the closure of the new job's window,
 * so the work per job is proportional to the contested neighbourhood instead
 * of the whole instance. Feasibility is a property of (jobs, rents), so the
 * rent sequence is identical to semi_online().
 */
class OracleState {
public:
    explicit OracleState(Time T);

    Time T() const { return T_; }
    const std::vector<Job>& accepted() const { return accepted_; }
    const RentSet& rents() const { return rents_; }
    std::optional<Time> last_tau() const { return last_tau_; }

    /// Slot currently holding accepted job i.
    Time slot_of(std::size_t i) const { return slot_of_[i]; }

    /**
     * Insert the jobs whose tau equals t, in (d, r, id) order. Returns how many
     * [t-T, t+2T) copies were added. Throws ValidationError if t precedes an
     * earlier push or a job's tau differs from t. An empty batch leaves the
     * state unchanged.
     */
    std::size_t push(Time t, std::span<const Job> batch);

private:
    std::size_t at(Time x) const { return static_cast<std::size_t>(x - base_); }
    void cover(Time lo, Time hi);
    bool try_place(std::uint32_t job);
    void link(std::uint32_t job, Time slot);
    void unlink(std::uint32_t job);

    static constexpr std::uint32_t kNone = 0xffffffffu;

    Time T_;
    std::vector<Job> accepted_;
    RentSet rents_;
    std::optional<Time> last_tau_;

    // Dense slot table over [base_, base_ + cap_.size()).
    Time base_ = 0;
    std::vector<std::int32_t> cap_;
    std::vector<std::int32_t> occupied_;
    std::vector<std::uint32_t> head_;      // first job in the slot's list
    std::vector<std::uint32_t> parent_;    // job whose window discovered the slot

    // Per accepted job.
    std::vector<Time> slot_of_;
    std::vector<std::uint32_t> next_, prev_;
    std::vector<std::uint32_t> queued_;    // search stamp per job

    std::uint32_t stamp_ = 0;
    std::vector<std::uint32_t> queue_;
};

}  // namespace rentmin
