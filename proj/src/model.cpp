#include "rentmin/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace rentmin {

std::size_t RentSet::count(RentInterval iv) const {
    return static_cast<std::size_t>(std::count(intervals.begin(), intervals.end(), iv));
}

std::vector<RentInterval> RentSet::sorted() const {
    auto out = intervals;
    std::sort(out.begin(), out.end());
    return out;
}

RentSet RentSet::shifted(Time delta) const {
    RentSet out;
    out.intervals.reserve(intervals.size());
    for (auto iv : intervals) out.intervals.push_back({iv.s + delta, iv.c + delta});
    return out;
}

bool RentSet::is_submultiset_of(const RentSet& other) const {
    auto a = sorted();
    auto b = other.sorted();
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RentSet RentSet::difference_from(const RentSet& other) const {
    auto a = sorted();
    auto b = other.sorted();
    RentSet out;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.intervals));
    return out;
}

std::optional<Assignment> Schedule::find(JobId id) const {
    for (const auto& a : assignments)
        if (a.id == id) return a;
    return std::nullopt;
}

void validate_jobs(std::span<const Job> jobs, Time lambda) {
    if (lambda < 0) throw ValidationError("lambda >= 0 violated");
    std::unordered_set<JobId> seen;
    seen.reserve(jobs.size());
    for (const auto& j : jobs) {
        if (j.id <= 0) throw ValidationError("job id must be positive (job " + std::to_string(j.id) + ")", j.id);
        if (!seen.insert(j.id).second) throw ValidationError("duplicate job id " + std::to_string(j.id), j.id);
        if (j.d < j.r + 1) throw ValidationError("d >= r+1 violated for job " + std::to_string(j.id), j.id);
        if (j.d - j.r < lambda + 1)
            throw ValidationError("d-r >= lambda+1 violated for job " + std::to_string(j.id), j.id);
    }
}

const Instance& validate_instance(const Instance& inst) {
    if (inst.T < 1) throw ValidationError("T >= 1 violated");
    validate_jobs(inst.jobs, inst.lambda);
    return inst;
}

std::optional<std::string> schedule_problem(std::span<const Job> jobs, const RentSet& rents, const Schedule& schedule) {
    if (schedule.size() != jobs.size())
        return "schedule has " + std::to_string(schedule.size()) + " placements for " + std::to_string(jobs.size()) + " jobs";
    std::set<std::pair<std::size_t, Time>> used;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& j = jobs[i];
        const auto& a = schedule.assignments[i];
        std::string tag = "job " + std::to_string(j.id);
        if (a.id != j.id) return tag + ": placement belongs to job " + std::to_string(a.id);
        if (a.slot < j.r || a.slot > j.d - 1) return tag + ": slot " + std::to_string(a.slot) + " outside [r, d-1]";
        if (a.rent >= rents.size()) return tag + ": rent copy " + std::to_string(a.rent) + " does not exist";
        if (!rents.intervals[a.rent].covers(a.slot)) return tag + ": rent copy does not cover slot " + std::to_string(a.slot);
        if (!used.emplace(a.rent, a.slot).second)
            return tag + ": rent copy " + std::to_string(a.rent) + " already busy at slot " + std::to_string(a.slot);
    }
    return std::nullopt;
}

}  // namespace rentmin
