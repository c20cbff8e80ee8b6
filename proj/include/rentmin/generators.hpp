#pragma once

/**
 * Deterministic instance generators.
 *
 * Random instances use SplitMix64 so other implementations can reproduce them
 * bit for bit: state += 0x9E3779B97F4A7C15, then the usual xor-shift-multiply
 * finalizer. A draw from [a, b] is a + next() % (b - a + 1). For job i (ids
 * 1..n, in order) the window w is drawn first from [min_window, max_window],
 * then r from [0, horizon - w]; d = r + w.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rentmin/model.hpp"

namespace rentmin {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform on [a, b] by modulo reduction.
    std::int64_t uniform(std::int64_t a, std::int64_t b) {
        return a + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(b - a + 1));
    }

private:
    std::uint64_t state_;
};

enum class GenKind { exhaustive, random, late_emergence, staircase };

const char* to_string(GenKind k);
GenKind gen_kind_from_string(const std::string& s);

struct GenSpec {
    GenKind kind = GenKind::random;
    std::uint64_t seed = 1;
    std::int64_t n = 10;  // jobs; waves for late-emergence
    Time horizon = 20;
    Time T = 5;
    Time lambda = 0;
    Time min_window = 1;
    Time max_window = 10;

    friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

GenSpec genspec_from_json(const std::string& text);
std::string genspec_to_json(const GenSpec& spec);

/// Number of job multisets of size <= max_jobs over windows 0 <= r < d <= horizon.
std::uint64_t exhaustive_count(Time horizon, std::int64_t max_jobs);

/**
 * Visit every multiset of at most max_jobs windows 0 <= r < d <= horizon, one
 * instance each (ids 1..k in window order), sizes ascending. The same
 * Instance object is reused between calls.
 */
void for_each_exhaustive(Time T, Time horizon, std::int64_t max_jobs, const std::function<void(const Instance&)>& visit);

std::vector<Instance> gen_exhaustive(Time T, Time horizon, std::int64_t max_jobs);

/// Throws ValidationError on an impossible parameter combination.
Instance gen_random(const GenSpec& spec);

/**
 * Waves of one long job [o, o + 10T) and one tight job [o + 9T, o + 10T);
 * both enter J_t at o + 9T, and consecutive waves are 13T + 1 apart so their
 * oracle rents never meet.
 */
Instance gen_late_emergence(Time T, std::int64_t waves);

/// n jobs [i, i + T) for i = 0..n-1: one new event per time unit.
Instance gen_staircase(Time T, std::int64_t n);

/// Dispatch on spec.kind (exhaustive is a stream; use for_each_exhaustive).
Instance generate(const GenSpec& spec);

}  // namespace rentmin
