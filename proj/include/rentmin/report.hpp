#pragma once

/**
 * Trace verification and ratio sweeps.
 *
 * Report CSV columns (fixed):
 *   instance_digest,n,T,lambda,online_rents,semi_count,opt,opt_method,ratio
 * The JSON report carries the same rows under "rows" plus an "aggregate"
 * object. Ratios are online_rents / opt printed with six decimals; rows with
 * no jobs leave it empty (CSV) or null (JSON).
 */

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rentmin/feasibility.hpp"
#include "rentmin/generators.hpp"
#include "rentmin/io.hpp"
#include "rentmin/offline.hpp"
#include "rentmin/online.hpp"

namespace rentmin {

struct CheckResult {
    std::vector<std::string> problems;
    std::optional<HallWitness> witness;

    bool ok() const { return problems.empty(); }
};

/**
 * Verify a trace against its instance: batch composition and causality,
 * totals, per-step oracle increments, job placements and final feasibility
 * of the (shifted) rents.
 */
CheckResult check_trace(const Instance& inst, const TraceFile& file);

struct EvalOptions {
    std::int64_t brute_force_max_jobs = 8;
    Time brute_force_max_horizon = 16;
    std::int64_t k_max = -1;
};

struct RatioRow {
    std::uint64_t digest = 0;
    std::size_t n = 0;
    Time T = 0;
    Time lambda = 0;
    std::size_t online_rents = 0;
    std::size_t semi_count = 0;
    std::int64_t opt = 0;
    OptMethod method = OptMethod::exact;
    std::optional<Ratio> ratio;

    /// Only exact optima can certify a violation of 6 (lambda + 1).
    bool violation() const;
};

/// Simulates (with delay when lambda > 0), checks feasibility and compares
/// against brute-force OPT when the instance is small enough.
RatioRow evaluate_instance(const Instance& inst, const EvalOptions& opts = {});

struct SweepConfig {
    GenSpec gen;                 // kind, T, lambda, horizon, windows, seed, n
    std::int64_t max_jobs = 5;   // exhaustive
    std::int64_t count = 100;    // random: seeds gen.seed .. gen.seed + count - 1
    unsigned workers = 1;
    EvalOptions eval;
};

struct RatioReport {
    std::vector<RatioRow> rows;
    std::size_t skipped = 0;  // exhaustive instances with a window shorter than lambda + 1

    std::size_t violations() const;
    std::size_t exact_rows() const;
    std::optional<Ratio> max_ratio() const;
    double mean_ratio() const;
};

RatioReport sweep(const SweepConfig& config);

void write_csv(const RatioReport& report, std::ostream& out);
void write_json(const RatioReport& report, std::ostream& out);
std::string aggregate_json(const RatioReport& report);

}  // namespace rentmin
