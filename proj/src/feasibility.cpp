#include "rentmin/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

namespace rentmin {

std::int64_t active_units_at(const RentSet& rents, Time t) {
    return std::count_if(rents.intervals.begin(), rents.intervals.end(), [t](RentInterval iv) { return iv.covers(t); });
}

std::int64_t active_units_range(const RentSet& rents, Time r_star, Time d_star) {
    if (r_star > d_star) throw ValidationError("active_units_range: r* > d*");
    std::int64_t total = 0;
    for (auto iv : rents.intervals) total += std::max<Time>(0, std::min(iv.c, d_star) - std::max(iv.s, r_star));
    return total;
}

std::int64_t jobs_in_window(std::span<const Job> jobs, Time r_star, Time d_star) {
    return std::count_if(jobs.begin(), jobs.end(), [&](const Job& j) { return r_star <= j.r && j.d <= d_star; });
}

namespace {

// P(x) = A_I(-inf, x) evaluated at ascending points. P is piecewise linear
// with slope A_I(t), which changes by +1 at each start and -1 at each end.
void supply_prefix(const RentSet& rents, std::span<const Time> points, std::vector<std::int64_t>& out) {
    thread_local std::vector<std::pair<Time, int>> events;
    events.clear();
    for (auto iv : rents.intervals) {
        if (iv.c <= iv.s) continue;
        events.emplace_back(iv.s, +1);
        events.emplace_back(iv.c, -1);
    }
    std::sort(events.begin(), events.end());
    out.resize(points.size());
    std::int64_t value = 0;
    std::int64_t slope = 0;
    Time x = events.empty() ? 0 : events.front().first;
    std::size_t e = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Time p = points[i];
        while (e < events.size() && events[e].first <= p) {
            value += slope * (events[e].first - x);
            x = events[e].first;
            slope += events[e].second;
            ++e;
        }
        out[i] = value + slope * (p - x);
    }
}

// Range add, range min (with argmin) over a fixed number of leaves.
class MinAddTree {
public:
    void assign(std::span<const std::int64_t> leaves) {
        n_ = leaves.size();
        size_ = 1;
        while (size_ < n_) size_ <<= 1;
        min_.assign(2 * size_, std::numeric_limits<std::int64_t>::max());
        arg_.assign(2 * size_, 0);
        lazy_.assign(2 * size_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            min_[size_ + i] = leaves[i];
            arg_[size_ + i] = i;
        }
        for (std::size_t v = size_ - 1; v >= 1; --v) pull(v);
    }

    void add(std::size_t lo, std::size_t hi, std::int64_t delta) { add(1, 0, size_, lo, hi, delta); }

    std::pair<std::int64_t, std::size_t> min(std::size_t lo, std::size_t hi) const {
        return min(1, 0, size_, lo, hi);
    }

private:
    void pull(std::size_t v) {
        std::size_t pick = min_[2 * v] <= min_[2 * v + 1] ? 2 * v : 2 * v + 1;
        min_[v] = min_[pick] + lazy_[v];
        arg_[v] = arg_[pick];
    }

    void add(std::size_t v, std::size_t l, std::size_t r, std::size_t lo, std::size_t hi, std::int64_t delta) {
        if (hi <= l || r <= lo) return;
        if (lo <= l && r <= hi) {
            min_[v] += delta;
            lazy_[v] += delta;
            return;
        }
        std::size_t mid = (l + r) / 2;
        add(2 * v, l, mid, lo, hi, delta);
        add(2 * v + 1, mid, r, lo, hi, delta);
        pull(v);
    }

    std::pair<std::int64_t, std::size_t> min(std::size_t v, std::size_t l, std::size_t r, std::size_t lo,
                                             std::size_t hi) const {
        if (hi <= l || r <= lo) return {std::numeric_limits<std::int64_t>::max(), 0};
        if (lo <= l && r <= hi) return {min_[v], arg_[v]};
        std::size_t mid = (l + r) / 2;
        auto a = min(2 * v, l, mid, lo, hi);
        auto b = min(2 * v + 1, mid, r, lo, hi);
        auto best = a.first <= b.first ? a : b;
        if (best.first != std::numeric_limits<std::int64_t>::max()) best.first += lazy_[v];
        return best;
    }

    std::size_t n_ = 0;
    std::size_t size_ = 1;
    std::vector<std::int64_t> min_;
    std::vector<std::size_t> arg_;
    std::vector<std::int64_t> lazy_;
};

}  // namespace

std::optional<HallWitness> hall_violation(std::span<const Job> jobs, const RentSet& rents) {
    if (jobs.empty()) return std::nullopt;

    thread_local std::vector<Time> releases, deadlines;
    thread_local std::vector<std::int64_t> p_release, p_deadline;
    thread_local std::vector<std::size_t> order;
    thread_local MinAddTree tree;

    releases.clear();
    deadlines.clear();
    for (const auto& j : jobs) {
        releases.push_back(j.r);
        deadlines.push_back(j.d);
    }
    std::sort(releases.begin(), releases.end());
    releases.erase(std::unique(releases.begin(), releases.end()), releases.end());
    std::sort(deadlines.begin(), deadlines.end());
    deadlines.erase(std::unique(deadlines.begin(), deadlines.end()), deadlines.end());

    supply_prefix(rents, releases, p_release);
    supply_prefix(rents, deadlines, p_deadline);

    // Leaf k holds P(D_k) - |{added jobs with d <= D_k}|. Sweeping r* downward
    // adds jobs released at r*, so leaf k minus P(r*) is the slack of [r*, D_k).
    tree.assign(p_deadline);
    order.resize(jobs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return jobs[a].r > jobs[b].r; });

    std::size_t next = 0;
    for (std::size_t i = releases.size(); i-- > 0;) {
        Time r_star = releases[i];
        for (; next < order.size() && jobs[order[next]].r == r_star; ++next) {
            auto k = static_cast<std::size_t>(std::lower_bound(deadlines.begin(), deadlines.end(), jobs[order[next]].d) -
                                              deadlines.begin());
            tree.add(k, deadlines.size(), -1);
        }
        auto lo = static_cast<std::size_t>(std::upper_bound(deadlines.begin(), deadlines.end(), r_star) - deadlines.begin());
        if (lo == deadlines.size()) continue;
        auto [value, k] = tree.min(lo, deadlines.size());
        std::int64_t slack = value - p_release[i];
        if (slack < 0) {
            std::int64_t supply = p_deadline[k] - p_release[i];
            return HallWitness{r_star, deadlines[k], supply, supply - slack};
        }
    }
    return std::nullopt;
}

namespace {

struct Pending {
    Time d;
    JobId id;
    std::uint32_t index;
};

// std heap functions build a max-heap; invert so the top is the smallest (d, id).
struct LaterDeadline {
    bool operator()(const Pending& a, const Pending& b) const {
        if (a.d != b.d) return a.d > b.d;
        if (a.id != b.id) return a.id > b.id;
        return a.index > b.index;
    }
};

template <bool Record>
std::optional<Time> edf_sweep(std::span<const Job> jobs, const RentSet& rents, Schedule* out) {
    const std::size_t n = jobs.size();
    const std::size_t m = rents.size();
    if constexpr (Record) out->assignments.assign(n, Assignment{});
    if (n == 0) return std::nullopt;

    thread_local std::vector<std::uint32_t> by_release, by_start;
    thread_local std::vector<Time> suffix_min_d;
    thread_local std::vector<Pending> heap;
    thread_local std::vector<std::pair<Time, std::uint32_t>> ends;

    by_release.resize(n);
    std::iota(by_release.begin(), by_release.end(), 0u);
    std::stable_sort(by_release.begin(), by_release.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return jobs[a].r < jobs[b].r; });
    suffix_min_d.resize(n + 1);
    suffix_min_d[n] = std::numeric_limits<Time>::max();
    for (std::size_t i = n; i-- > 0;) suffix_min_d[i] = std::min(suffix_min_d[i + 1], jobs[by_release[i]].d);

    by_start.clear();
    for (std::uint32_t i = 0; i < m; ++i)
        if (rents.intervals[i].c > rents.intervals[i].s) by_start.push_back(i);
    std::stable_sort(by_start.begin(), by_start.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rents.intervals[a].s < rents.intervals[b].s;
    });

    heap.clear();
    ends.clear();
    std::set<std::uint32_t> active;  // only used when recording copies
    std::size_t active_count = 0;
    auto end_later = [](const auto& a, const auto& b) { return a.first > b.first; };

    std::size_t next_job = 0;
    std::size_t next_rent = 0;
    Time t = jobs[by_release[0]].r;

    for (;;) {
        if (heap.empty()) {
            if (next_job == n) return std::nullopt;
            t = std::max(t, jobs[by_release[next_job]].r);
        }
        for (; next_job < n && jobs[by_release[next_job]].r <= t; ++next_job) {
            const auto& j = jobs[by_release[next_job]];
            heap.push_back({j.d, j.id, by_release[next_job]});
            std::push_heap(heap.begin(), heap.end(), LaterDeadline{});
        }
        for (; next_rent < by_start.size() && rents.intervals[by_start[next_rent]].s <= t; ++next_rent) {
            auto idx = by_start[next_rent];
            if (rents.intervals[idx].c <= t) continue;
            ends.emplace_back(rents.intervals[idx].c, idx);
            std::push_heap(ends.begin(), ends.end(), end_later);
            ++active_count;
            if constexpr (Record) active.insert(idx);
        }
        while (!ends.empty() && ends.front().first <= t) {
            if constexpr (Record) active.erase(ends.front().second);
            std::pop_heap(ends.begin(), ends.end(), end_later);
            ends.pop_back();
            --active_count;
        }

        if (heap.front().d <= t) return heap.front().d;

        if (active_count == 0) {
            if (next_rent == by_start.size()) return std::min(heap.front().d, suffix_min_d[next_job]);
            t = rents.intervals[by_start[next_rent]].s;
            continue;
        }

        auto copy = active.begin();
        for (std::size_t used = 0; used < active_count && !heap.empty(); ++used) {
            std::pop_heap(heap.begin(), heap.end(), LaterDeadline{});
            Pending p = heap.back();
            heap.pop_back();
            if constexpr (Record) {
                out->assignments[p.index] = Assignment{p.id, t, *copy};
                ++copy;
            }
        }
        ++t;
    }
}

}  // namespace

EdfOutcome edf(std::span<const Job> jobs, const RentSet& rents) {
    Schedule schedule;
    if (auto fail = edf_sweep<true>(jobs, rents, &schedule)) return EdfFailure{*fail};
    return EdfSuccess{std::move(schedule)};
}

std::optional<Time> edf_fail_time(std::span<const Job> jobs, const RentSet& rents) {
    return edf_sweep<false>(jobs, rents, nullptr);
}

}  // namespace rentmin
