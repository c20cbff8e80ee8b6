#pragma once

/**
 * On-disk formats (UTF-8 JSON).
 *
 * Instance:
 *   {"T": <int>, "lambda": <int>, "jobs": [{"id": <int>, "r": <int>, "d": <int>}, ...]}
 * Canonical form: keys sorted, jobs ascending by id, no whitespace.
 *
 * Trace:
 *   {"steps": [{"t": <int>, "delta": <int>, "rents": [[s, c], ...],
 *               "assigned": [{"id": <int>, "slot": <int>}, ...]}, ...],
 *    "total_rents": <int>, "total_batches": <int>}
 * Delay traces add "lambda" and "shifted_rents"; their step rents stay at
 * issue time while the assigned slots are the real (shifted) ones.
 */

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rentmin/delay.hpp"
#include "rentmin/model.hpp"
#include "rentmin/online.hpp"

namespace rentmin {

/// Parse and validate an instance. Throws ValidationError.
Instance parse_instance(const std::string& text);

/// Canonical serialization.
std::string serialize_instance(const Instance& inst);

/// FNV-1a 64 of the canonical serialization.
std::uint64_t digest_value(const Instance& inst);

/// digest_value() as 16 lowercase hex digits.
std::string instance_digest(const Instance& inst);
std::string format_digest(std::uint64_t digest);

nlohmann::json trace_to_json(const OnlineTrace& trace);
nlohmann::json trace_to_json(const DelayTrace& trace);

/// A trace file as read back for checking.
struct TraceFile {
    OnlineTrace trace;
    std::optional<Time> lambda;
    std::optional<RentSet> shifted_rents;
};

TraceFile parse_trace(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rentmin
