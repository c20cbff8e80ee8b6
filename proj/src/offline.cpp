#include "rentmin/offline.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "rentmin/feasibility.hpp"

namespace rentmin {

const char* to_string(OptMethod m) { return m == OptMethod::exact ? "exact" : "lower-bound-only"; }

RentSet offline_two_approx(std::span<const Job> jobs, Time T) {
    RentSet rents;
    // Each round strictly shrinks the optimal complement of the current set,
    // so there are at most OPT <= |J| rounds.
    const std::size_t max_rounds = jobs.size();
    for (std::size_t round = 0;; ++round) {
        auto fail = edf_fail_time(jobs, rents);
        if (!fail) return rents;
        if (round == max_rounds)
            throw InvariantError("offline_two_approx: more than |J| = " + std::to_string(jobs.size()) + " rounds");
        rents.add({*fail - T, *fail});
        rents.add({*fail, *fail + T});
    }
}

std::int64_t density_lower_bound(std::span<const Job> jobs, Time T) {
    if (jobs.empty()) return 0;
    auto ceil_div = [](std::int64_t a, std::int64_t b) { return (a + b - 1) / b; };

    Time lo = jobs.front().r, hi = jobs.front().d;
    for (const auto& j : jobs) {
        lo = std::min(lo, j.r);
        hi = std::max(hi, j.d);
    }
    // Windows at least T long: the widest one holds every job.
    std::int64_t best = hi - lo >= T ? ceil_div(static_cast<std::int64_t>(jobs.size()), T) : 0;

    // Windows shorter than T: sweep r* downward, counting added jobs by
    // deadline in a Fenwick tree, and try every deadline in (r*, r* + T).
    std::vector<Time> deadlines;
    deadlines.reserve(jobs.size());
    for (const auto& j : jobs) deadlines.push_back(j.d);
    std::sort(deadlines.begin(), deadlines.end());
    deadlines.erase(std::unique(deadlines.begin(), deadlines.end()), deadlines.end());
    std::vector<std::int64_t> fenwick(deadlines.size() + 1, 0);
    auto index_of = [&](Time d) {
        return static_cast<std::size_t>(std::lower_bound(deadlines.begin(), deadlines.end(), d) - deadlines.begin());
    };
    auto add = [&](std::size_t i) {
        for (++i; i < fenwick.size(); i += i & (~i + 1)) ++fenwick[i];
    };
    auto prefix = [&](std::size_t i) {  // count with deadline index <= i
        std::int64_t s = 0;
        for (++i; i > 0; i -= i & (~i + 1)) s += fenwick[i];
        return s;
    };

    std::vector<Job> by_release(jobs.begin(), jobs.end());
    std::sort(by_release.begin(), by_release.end(), [](const Job& a, const Job& b) { return a.r > b.r; });
    for (std::size_t i = 0; i < by_release.size();) {
        Time r_star = by_release[i].r;
        for (; i < by_release.size() && by_release[i].r == r_star; ++i) add(index_of(by_release[i].d));
        for (auto k = index_of(r_star + 1); k < deadlines.size() && deadlines[k] - r_star < T; ++k)
            best = std::max(best, ceil_div(prefix(k), deadlines[k] - r_star));
    }
    return best;
}

namespace {

// Depth-first search over non-decreasing start offsets with a dense capacity
// profile on [lo, hi). Feasibility is EDF on that profile.
class StartSearch {
public:
    StartSearch(std::span<const Job> jobs, Time T) : T_(T) {
        lo_ = jobs.front().r;
        Time hi = jobs.front().d;
        for (const auto& j : jobs) {
            lo_ = std::min(lo_, j.r);
            hi = std::max(hi, j.d);
        }
        horizon_ = hi - lo_;
        cap_.assign(static_cast<std::size_t>(horizon_), 0);
        std::vector<Job> sorted(jobs.begin(), jobs.end());
        std::sort(sorted.begin(), sorted.end(), [](const Job& a, const Job& b) {
            return a.d != b.d ? a.d < b.d : a.r < b.r;
        });
        for (const auto& j : sorted) {
            release_.push_back(j.r - lo_);
            deadline_.push_back(j.d - lo_);
        }
        done_.assign(sorted.size(), 0);
    }

    bool search(std::int64_t k) {
        starts_.clear();
        return extend(0, k);
    }

    RentSet rents() const {
        RentSet out;
        for (auto s : starts_) out.add({lo_ + s, lo_ + s + T_});
        return out;
    }

private:
    bool extend(Time from, std::int64_t remaining) {
        if (remaining == 0) return fits();
        for (Time s = from; s < horizon_; ++s) {
            place(s, +1);
            starts_.push_back(s);
            if (extend(s, remaining - 1)) return true;
            starts_.pop_back();
            place(s, -1);
        }
        return false;
    }

    void place(Time s, int delta) {
        Time end = std::min(s + T_, horizon_);
        for (Time x = s; x < end; ++x) cap_[static_cast<std::size_t>(x)] += delta;
    }

    bool fits() {
        std::fill(done_.begin(), done_.end(), 0);
        std::size_t first_open = 0;
        for (Time x = 0; x < horizon_; ++x) {
            int free = cap_[static_cast<std::size_t>(x)];
            for (std::size_t i = first_open; i < deadline_.size() && free > 0; ++i) {
                if (done_[i] || release_[i] > x) continue;
                done_[i] = 1;
                --free;
            }
            for (; first_open < deadline_.size() && done_[first_open]; ++first_open) {
            }
            if (first_open < deadline_.size() && deadline_[first_open] <= x + 1) return false;
        }
        return first_open == deadline_.size();
    }

    Time T_;
    Time lo_ = 0;
    Time horizon_ = 0;
    std::vector<int> cap_;
    std::vector<Time> release_, deadline_;  // sorted by deadline
    std::vector<char> done_;
    std::vector<Time> starts_;
};

}  // namespace

OptResult brute_force_opt(std::span<const Job> jobs, Time T, BruteForceOptions opts) {
    if (jobs.empty()) return {};
    const std::int64_t k_max = opts.k_max < 0 ? static_cast<std::int64_t>(jobs.size()) : opts.k_max;
    const std::int64_t lower = density_lower_bound(jobs, T);

    StartSearch search(jobs, T);
    for (std::int64_t k = lower; k <= k_max; ++k) {
        if (!search.search(k)) continue;
        OptResult result{k, search.rents(), OptMethod::exact};
        if (opts.cross_check && (edf_fail_time(jobs, result.rents) || !hall_feasible(jobs, result.rents)))
            throw InvariantError("brute_force_opt: dense search and EDF disagree");
        return result;
    }
    return {std::max(lower, k_max + 1), {}, OptMethod::lower_bound_only};
}

}  // namespace rentmin
