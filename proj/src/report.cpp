#include "rentmin/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <thread>
#include <unordered_map>

#include "rentmin/delay.hpp"
#include "rentmin/semi_online.hpp"

namespace rentmin {

namespace {

std::string show(RentInterval iv) { return "[" + std::to_string(iv.s) + "," + std::to_string(iv.c) + ")"; }

// A_I at each of the ascending `slots`, from sorted starts and ends.
std::vector<std::int64_t> capacity_at(const RentSet& rents, const std::vector<Time>& slots) {
    std::vector<Time> starts, ends;
    for (auto iv : rents.intervals) {
        starts.push_back(iv.s);
        ends.push_back(iv.c);
    }
    std::sort(starts.begin(), starts.end());
    std::sort(ends.begin(), ends.end());
    std::vector<std::int64_t> out;
    out.reserve(slots.size());
    for (Time t : slots) {
        auto begun = std::upper_bound(starts.begin(), starts.end(), t) - starts.begin();
        auto over = std::upper_bound(ends.begin(), ends.end(), t) - ends.begin();
        out.push_back(begun - over);
    }
    return out;
}

std::string format_ratio(const std::optional<Ratio>& r) {
    if (!r) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r->value());
    return buf;
}

}  // namespace

CheckResult check_trace(const Instance& inst, const TraceFile& file) {
    CheckResult res;
    auto problem = [&](std::string s) { res.problems.push_back(std::move(s)); };
    const auto& trace = file.trace;
    const Time T = inst.T;
    const Time lambda = inst.lambda;

    if (file.lambda && *file.lambda != lambda)
        problem("trace lambda " + std::to_string(*file.lambda) + " differs from instance lambda " + std::to_string(lambda));

    // Batches: composition, causality, totals.
    std::size_t rents_seen = 0, batches_seen = 0;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        std::string at = "step t=" + std::to_string(s.t);
        if (i > 0 && s.t <= trace.steps[i - 1].t) problem(at + ": step times must increase");
        RentSet expected;
        auto batch = BatchRent::at(s.t, T);
        for (std::size_t k = 0; k < s.delta; ++k) expected.intervals.insert(expected.intervals.end(), batch.intervals.begin(), batch.intervals.end());
        if (!same_multiset(expected, RentSet(s.rents)))
            problem(at + ": rents are not " + std::to_string(s.delta) + " batch(es) of 4x" + show(batch.intervals[0]) +
                    " + 2x" + show(batch.intervals[kBatchNow]));
        for (auto iv : s.rents)
            if (iv.s < s.t) problem(at + ": rent " + show(iv) + " starts before its decision time");
        rents_seen += s.rents.size();
        batches_seen += s.delta;
    }
    if (trace.total_rents != rents_seen)
        problem("total_rents " + std::to_string(trace.total_rents) + " but steps hold " + std::to_string(rents_seen));
    if (trace.total_batches != batches_seen)
        problem("total_batches " + std::to_string(trace.total_batches) + " but deltas sum to " + std::to_string(batches_seen));
    if (trace.total_rents != kBatchSize * trace.total_batches)
        problem("total_rents " + std::to_string(trace.total_rents) + " != 6 x total_batches " +
                std::to_string(trace.total_batches));

    // Oracle increments per event time on the delay-stripped jobs.
    auto inner = strip_delay(inst);
    std::map<Time, std::vector<Job>> entering;
    for (const auto& j : inner.jobs) entering[tau(j, T)].push_back(j);
    OracleState oracle(T);
    std::map<Time, std::size_t> expected_delta;
    for (const auto& [t, batch] : entering) expected_delta[t] = oracle.push(t, batch);
    if (oracle.rents().size() != trace.total_batches)
        problem("total_batches " + std::to_string(trace.total_batches) + " but the oracle holds " +
                std::to_string(oracle.rents().size()) + " rents");
    for (const auto& s : trace.steps) {
        auto it = expected_delta.find(s.t);
        std::size_t want = it == expected_delta.end() ? 0 : it->second;
        if (s.delta != want)
            problem("step t=" + std::to_string(s.t) + ": delta " + std::to_string(s.delta) + ", oracle grew by " + std::to_string(want));
    }

    // Effective rents.
    RentSet effective = trace.rent_set().shifted(lambda);
    if (file.shifted_rents && !same_multiset(*file.shifted_rents, effective))
        problem("shifted_rents do not match the step rents moved by lambda");

    // Placements.
    std::unordered_map<JobId, std::size_t> index_of;
    for (std::size_t i = 0; i < inst.jobs.size(); ++i) index_of[inst.jobs[i].id] = i;
    std::vector<int> placed(inst.jobs.size(), 0);
    std::map<Time, std::int64_t> load;
    for (const auto& s : trace.steps) {
        for (const auto& p : s.assigned) {
            auto it = index_of.find(p.id);
            if (it == index_of.end()) {
                problem("assigned job " + std::to_string(p.id) + " is not in the instance");
                continue;
            }
            const auto& job = inst.jobs[it->second];
            ++placed[it->second];
            if (tau(inner.jobs[it->second], T) != s.t)
                problem("job " + std::to_string(p.id) + " listed at step " + std::to_string(s.t) + " but enters J_t at " +
                        std::to_string(tau(inner.jobs[it->second], T)));
            if (p.slot < job.r || p.slot > job.d - 1)
                problem("job " + std::to_string(p.id) + ": slot " + std::to_string(p.slot) + " outside [r, d-1]");
            ++load[p.slot];
        }
    }
    for (std::size_t i = 0; i < placed.size(); ++i)
        if (placed[i] != 1)
            problem("job " + std::to_string(inst.jobs[i].id) + " placed " + std::to_string(placed[i]) + " times");
    std::vector<Time> slots;
    for (const auto& [slot, count] : load) slots.push_back(slot);
    auto capacity = capacity_at(effective, slots);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (load[slots[i]] > capacity[i])
            problem("slot " + std::to_string(slots[i]) + ": " + std::to_string(load[slots[i]]) + " jobs on " +
                    std::to_string(capacity[i]) + " machines");

    if (auto w = hall_violation(inst.jobs, effective)) {
        res.witness = w;
        problem("infeasible: window [" + std::to_string(w->r_star) + "," + std::to_string(w->d_star) + ") supplies " +
                std::to_string(w->supply) + " units for " + std::to_string(w->demand) + " jobs");
    }
    return res;
}

bool RatioRow::violation() const {
    if (method != OptMethod::exact || !ratio) return false;
    return Ratio{static_cast<std::int64_t>(kBatchSize) * (lambda + 1), 1} < *ratio;
}

RatioRow evaluate_instance(const Instance& inst, const EvalOptions& opts) {
    validate_instance(inst);
    auto run = simulate_with_delay(inst);
    if (auto w = hall_violation(inst.jobs, run.shifted_rents))
        throw InvariantError("online rents infeasible on window [" + std::to_string(w->r_star) + "," +
                             std::to_string(w->d_star) + ")");

    RatioRow row;
    row.digest = digest_value(inst);
    row.n = inst.jobs.size();
    row.T = inst.T;
    row.lambda = inst.lambda;
    row.online_rents = run.inner.total_rents;
    row.semi_count = run.inner.oracle_size;

    Time span = 0;
    if (!inst.jobs.empty()) {
        Time min_r = inst.jobs.front().r, max_d = inst.jobs.front().d;
        for (const auto& j : inst.jobs) {
            min_r = std::min(min_r, j.r);
            max_d = std::max(max_d, j.d);
        }
        span = max_d - min_r;
    }
    if (static_cast<std::int64_t>(row.n) <= opts.brute_force_max_jobs && span <= opts.brute_force_max_horizon) {
        auto opt = brute_force_opt(inst.jobs, inst.T, {opts.k_max, false});
        row.opt = opt.count;
        row.method = opt.method;
    } else {
        row.opt = density_lower_bound(inst.jobs, inst.T);
        row.method = OptMethod::lower_bound_only;
    }
    if (row.opt > 0) row.ratio = competitive_ratio(run.inner, row.opt);
    return row;
}

std::size_t RatioReport::violations() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RatioRow& r) { return r.violation(); }));
}

std::size_t RatioReport::exact_rows() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const RatioRow& r) { return r.method == OptMethod::exact; }));
}

std::optional<Ratio> RatioReport::max_ratio() const {
    std::optional<Ratio> best;
    for (const auto& r : rows)
        if (r.ratio && (!best || *best < *r.ratio)) best = r.ratio;
    return best;
}

double RatioReport::mean_ratio() const {
    double sum = 0;
    std::size_t k = 0;
    for (const auto& r : rows)
        if (r.ratio) {
            sum += r.ratio->value();
            ++k;
        }
    return k == 0 ? 0.0 : sum / static_cast<double>(k);
}

RatioReport sweep(const SweepConfig& config) {
    const auto& g = config.gen;
    RatioReport report;
    unsigned workers = std::max(1u, config.workers);

    if (g.kind == GenKind::exhaustive) {
        // Every worker walks the same deterministic stream and keeps its share.
        std::uint64_t total = exhaustive_count(g.horizon, config.max_jobs);
        std::vector<std::optional<RatioRow>> slots(total);
        std::vector<std::exception_ptr> errors(workers);
        auto work = [&](unsigned w) {
            try {
                std::uint64_t index = 0;
                Instance scratch;
                for_each_exhaustive(g.T, g.horizon, config.max_jobs, [&](const Instance& inst) {
                    auto i = index++;
                    if (i % workers != w) return;
                    scratch = inst;
                    scratch.lambda = g.lambda;
                    bool wide = std::all_of(scratch.jobs.begin(), scratch.jobs.end(),
                                            [&](const Job& j) { return j.d - j.r >= g.lambda + 1; });
                    if (wide) slots[i] = evaluate_instance(scratch, config.eval);
                });
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
        work(0);
        pool.clear();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        report.rows.reserve(total);
        for (auto& s : slots) {
            if (s)
                report.rows.push_back(*s);
            else
                ++report.skipped;
        }
        return report;
    }

    std::vector<GenSpec> specs;
    if (g.kind == GenKind::random) {
        for (std::int64_t i = 0; i < config.count; ++i) {
            specs.push_back(g);
            specs.back().seed = g.seed + static_cast<std::uint64_t>(i);
        }
    } else {
        specs.push_back(g);
    }
    report.rows.resize(specs.size());
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < specs.size(); i += workers) report.rows[i] = evaluate_instance(generate(specs[i]), config.eval);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    pool.clear();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return report;
}

void write_csv(const RatioReport& report, std::ostream& out) {
    out << "instance_digest,n,T,lambda,online_rents,semi_count,opt,opt_method,ratio\n";
    for (const auto& r : report.rows)
        out << format_digest(r.digest) << ',' << r.n << ',' << r.T << ',' << r.lambda << ',' << r.online_rents << ','
            << r.semi_count << ',' << r.opt << ',' << to_string(r.method) << ',' << format_ratio(r.ratio) << '\n';
}

void write_json(const RatioReport& report, std::ostream& out) {
    // Streamed by hand: exhaustive sweeps produce hundreds of thousands of rows.
    out << "{\"rows\":[";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        auto ratio = format_ratio(r.ratio);
        out << (i ? "," : "") << "{\"instance_digest\":\"" << format_digest(r.digest) << "\",\"n\":" << r.n
            << ",\"T\":" << r.T << ",\"lambda\":" << r.lambda << ",\"online_rents\":" << r.online_rents
            << ",\"semi_count\":" << r.semi_count << ",\"opt\":" << r.opt << ",\"opt_method\":\"" << to_string(r.method)
            << "\",\"ratio\":" << (ratio.empty() ? "null" : ratio) << "}";
    }
    out << "],\"aggregate\":" << aggregate_json(report) << "}\n";
}

std::string aggregate_json(const RatioReport& report) {
    nlohmann::json j = {{"instances", report.rows.size()},
                        {"skipped", report.skipped},
                        {"exact_rows", report.exact_rows()},
                        {"violations", report.violations()},
                        {"mean_ratio", report.mean_ratio()}};
    auto best = report.max_ratio();
    j["max_ratio"] = best ? nlohmann::json(best->value()) : nlohmann::json(nullptr);
    return j.dump();
}

}  // namespace rentmin
