#pragma once

/**
 * Offline reference points for the online algorithm: the EDF-driven
 * 2-approximation, an exact brute-force optimum for desk-sized instances and a
 * window-density lower bound for everything larger.
 */

#include <cstdint>
#include <span>

#include "rentmin/model.hpp"

namespace rentmin {

enum class OptMethod { exact, lower_bound_only };

const char* to_string(OptMethod m);

/// OPT(J, T) or, when the search budget ran out, a lower bound on it.
struct OptResult {
    std::int64_t count = 0;
    RentSet rents;  // length-T rents; empty unless method == exact
    OptMethod method = OptMethod::exact;
};

/**
 * While EDF fails, take its fail time t and add [t-T, t) and [t, t+T).
 * Returns the final rent set; at most twice the optimum.
 */
RentSet offline_two_approx(std::span<const Job> jobs, Time T);

struct BruteForceOptions {
    std::int64_t k_max = -1;   // negative: |J|, which always suffices
    bool cross_check = false;  // confirm the optimum with the window condition too
};

/**
 * Exact OPT by iterative deepening over multisets of rent starts in
 * [min r, max d - 1], starting at density_lower_bound(). A rent starting
 * earlier is dominated by one starting at min r; later starts cover nothing.
 * Intended for about 8 jobs over a dozen time units.
 */
OptResult brute_force_opt(std::span<const Job> jobs, Time T, BruteForceOptions opts = {});

/**
 * max over windows [r*, d*) of ceil(|J(r*, d*)| / min(T, d* - r*)), with r*
 * a release time and d* a deadline. Each length-T rent supplies at most
 * min(T, d* - r*) units to a window, so this never exceeds OPT.
 */
std::int64_t density_lower_bound(std::span<const Job> jobs, Time T);

}  // namespace rentmin
