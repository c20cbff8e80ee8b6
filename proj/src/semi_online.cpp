#include "rentmin/semi_online.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "rentmin/feasibility.hpp"

namespace rentmin {

namespace {

constexpr Time kUnplaced = std::numeric_limits<Time>::min();

bool batch_order(const Job& a, const Job& b) { return std::tie(a.d, a.r, a.id) < std::tie(b.d, b.r, b.id); }

}  // namespace

std::vector<Job> semi_online_order(std::span<const Job> jobs, Time T) {
    std::vector<Job> order(jobs.begin(), jobs.end());
    std::sort(order.begin(), order.end(), [T](const Job& a, const Job& b) {
        Time ta = tau(a, T), tb = tau(b, T);
        if (ta != tb) return ta < tb;
        return batch_order(a, b);
    });
    return order;
}

RentSet semi_online(std::span<const Job> jobs, Time T) {
    RentSet rents;
    std::vector<Job> accepted;
    accepted.reserve(jobs.size());
    for (const auto& j : semi_online_order(jobs, T)) {
        accepted.push_back(j);
        if (edf_fail_time(accepted, rents)) rents.add(oracle_rent(tau(j, T), T));
    }
    return rents;
}

OracleState::OracleState(Time T) : T_(T) {
    if (T < 1) throw ValidationError("T >= 1 violated");
}

std::size_t OracleState::push(Time t, std::span<const Job> batch) {
    if (last_tau_ && t < *last_tau_)
        throw ValidationError("tau-order violation: batch at " + std::to_string(t) + " after " + std::to_string(*last_tau_));
    for (const auto& j : batch) {
        if (j.d < j.r + 1) throw ValidationError("d >= r+1 violated for job " + std::to_string(j.id), j.id);
        if (tau(j, T_) != t)
            throw ValidationError("job " + std::to_string(j.id) + " has tau " + std::to_string(tau(j, T_)) +
                                      ", batch is at " + std::to_string(t),
                                  j.id);
    }
    if (batch.empty()) return 0;

    std::vector<Job> sorted(batch.begin(), batch.end());
    std::sort(sorted.begin(), sorted.end(), batch_order);

    std::size_t added = 0;
    for (const auto& j : sorted) {
        auto idx = static_cast<std::uint32_t>(accepted_.size());
        accepted_.push_back(j);
        slot_of_.push_back(kUnplaced);
        next_.push_back(kNone);
        prev_.push_back(kNone);
        queued_.push_back(0);
        cover(j.r, j.d);
        if (try_place(idx)) continue;

        auto rent = oracle_rent(t, T_);
        rents_.add(rent);
        cover(rent.s, rent.c);
        for (Time x = rent.s; x < rent.c; ++x) ++cap_[at(x)];
        ++added;
        if (!try_place(idx))
            throw InvariantError("oracle: job " + std::to_string(j.id) + " does not fit after adding its rent");
    }
    last_tau_ = t;
    return added;
}

void OracleState::cover(Time lo, Time hi) {
    if (hi <= lo) return;
    Time old_lo = base_;
    Time old_hi = base_ + static_cast<Time>(cap_.size());
    if (!cap_.empty() && lo >= old_lo && hi <= old_hi) return;

    Time new_lo = lo, new_hi = hi;
    if (!cap_.empty()) {
        // Grow geometrically in whichever direction is short.
        Time span = old_hi - old_lo;
        new_lo = lo < old_lo ? std::min(lo, old_lo - span) : old_lo;
        new_hi = hi > old_hi ? std::max(hi, old_hi + span) : old_hi;
    }
    auto size = static_cast<std::size_t>(new_hi - new_lo);
    auto offset = static_cast<std::size_t>(old_lo - new_lo);

    auto regrow = [&](auto& v, auto fill) {
        std::remove_reference_t<decltype(v)> grown(size, fill);
        std::copy(v.begin(), v.end(), grown.begin() + static_cast<std::ptrdiff_t>(v.empty() ? 0 : offset));
        v.swap(grown);
    };
    regrow(cap_, 0);
    regrow(occupied_, 0);
    regrow(head_, kNone);
    regrow(parent_, kNone);
    base_ = new_lo;
}

void OracleState::link(std::uint32_t job, Time slot) {
    auto s = at(slot);
    prev_[job] = kNone;
    next_[job] = head_[s];
    if (head_[s] != kNone) prev_[head_[s]] = job;
    head_[s] = job;
    ++occupied_[s];
    slot_of_[job] = slot;
}

void OracleState::unlink(std::uint32_t job) {
    auto s = at(slot_of_[job]);
    if (prev_[job] != kNone)
        next_[prev_[job]] = next_[job];
    else
        head_[s] = next_[job];
    if (next_[job] != kNone) prev_[next_[job]] = prev_[job];
    --occupied_[s];
    slot_of_[job] = kUnplaced;
}

// Breadth-first search for an augmenting path. The slots reachable from the
// new job always form one contiguous range [lo, hi): every job found in the
// range has a window that contains its slot. A free unit anywhere in that
// closure means the job fits; none means it cannot fit under any matching.
bool OracleState::try_place(std::uint32_t job) {
    if (++stamp_ == 0) {
        std::fill(queued_.begin(), queued_.end(), 0u);
        stamp_ = 1;
    }
    queue_.clear();
    queue_.push_back(job);
    queued_[job] = stamp_;

    Time free_slot = kUnplaced;
    auto scan = [&](std::uint32_t from, Time a, Time b) {
        for (Time x = a; x < b; ++x) {
            auto s = at(x);
            parent_[s] = from;
            if (occupied_[s] < cap_[s]) {
                free_slot = x;
                return true;
            }
            for (auto m = head_[s]; m != kNone; m = next_[m]) {
                if (queued_[m] == stamp_) continue;
                queued_[m] = stamp_;
                queue_.push_back(m);
            }
        }
        return false;
    };

    Time lo = accepted_[job].r;
    Time hi = accepted_[job].d;
    bool found = scan(job, lo, hi);
    for (std::size_t q = 1; !found && q < queue_.size(); ++q) {
        auto k = queue_[q];
        const auto& jk = accepted_[k];
        if (jk.r < lo) {
            found = scan(k, jk.r, lo);
            lo = jk.r;
        }
        if (!found && jk.d > hi) {
            found = scan(k, hi, jk.d);
            hi = jk.d;
        }
    }
    if (!found) return false;

    // Walk the discovery chain back to the new job, shifting each job into
    // the slot its window reached.
    Time x = free_slot;
    for (;;) {
        auto k = parent_[at(x)];
        Time previous = slot_of_[k];
        if (previous != kUnplaced) unlink(k);
        link(k, x);
        if (k == job) break;
        x = previous;
    }
    return true;
}

}  // namespace rentmin
