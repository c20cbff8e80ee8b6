#include "rentmin/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rentmin {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

std::int64_t integer_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw ValidationError(where + ": field '" + key + "' must be an integer");
    return v.get<std::int64_t>();
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_array()) throw ValidationError(where + ": field '" + key + "' must be an array");
    return v;
}

json rents_to_json(std::span<const RentInterval> rents) {
    json out = json::array();
    for (auto iv : rents) out.push_back({iv.s, iv.c});
    return out;
}

RentSet rents_from_json(const json& arr, const std::string& where) {
    RentSet out;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw ValidationError(where + ": rent must be [s, c] with integer ends");
        RentInterval iv{pair[0].get<Time>(), pair[1].get<Time>()};
        if (iv.c <= iv.s) throw ValidationError(where + ": rent [s, c) needs c > s");
        out.add(iv);
    }
    return out;
}

json steps_to_json(const OnlineTrace& trace, Time slot_shift) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json assigned = json::array();
        for (const auto& p : s.assigned) assigned.push_back({{"id", p.id}, {"slot", p.slot + slot_shift}});
        steps.push_back({{"t", s.t}, {"delta", s.delta}, {"rents", rents_to_json(s.rents)}, {"assigned", assigned}});
    }
    return steps;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j = parse_json(text, "instance");
    if (!j.is_object()) throw ValidationError("instance must be a JSON object");
    Instance inst;
    inst.T = integer_field(j, "T", "instance");
    inst.lambda = integer_field(j, "lambda", "instance");
    for (const auto& job : array_field(j, "jobs", "instance"))
        inst.jobs.push_back({integer_field(job, "id", "job"), integer_field(job, "r", "job"), integer_field(job, "d", "job")});
    validate_instance(inst);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::vector<Job> jobs = inst.jobs;
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
    json arr = json::array();
    for (const auto& job : jobs) arr.push_back({{"id", job.id}, {"r", job.r}, {"d", job.d}});
    json j = {{"T", inst.T}, {"lambda", inst.lambda}, {"jobs", arr}};
    return j.dump();
}

std::uint64_t digest_value(const Instance& inst) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : serialize_instance(inst)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string format_digest(std::uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

std::string instance_digest(const Instance& inst) { return format_digest(digest_value(inst)); }

json trace_to_json(const OnlineTrace& trace) {
    return {{"steps", steps_to_json(trace, 0)},
            {"total_rents", trace.total_rents},
            {"total_batches", trace.total_batches}};
}

json trace_to_json(const DelayTrace& trace) {
    return {{"steps", steps_to_json(trace.inner, trace.lambda)},
            {"total_rents", trace.inner.total_rents},
            {"total_batches", trace.inner.total_batches},
            {"lambda", trace.lambda},
            {"shifted_rents", rents_to_json(trace.shifted_rents.intervals)}};
}

TraceFile parse_trace(const std::string& text) {
    json j = parse_json(text, "trace");
    if (!j.is_object()) throw ValidationError("trace must be a JSON object");
    TraceFile out;
    for (const auto& s : array_field(j, "steps", "trace")) {
        TraceStep step;
        step.t = integer_field(s, "t", "step");
        auto delta = integer_field(s, "delta", "step");
        if (delta < 0) throw ValidationError("step: delta must be non-negative");
        step.delta = static_cast<std::size_t>(delta);
        step.rents = rents_from_json(array_field(s, "rents", "step"), "step").intervals;
        for (const auto& a : array_field(s, "assigned", "step"))
            step.assigned.push_back({integer_field(a, "id", "assigned"), integer_field(a, "slot", "assigned")});
        out.trace.steps.push_back(std::move(step));
    }
    auto total_rents = integer_field(j, "total_rents", "trace");
    auto total_batches = integer_field(j, "total_batches", "trace");
    if (total_rents < 0 || total_batches < 0) throw ValidationError("trace totals must be non-negative");
    out.trace.total_rents = static_cast<std::size_t>(total_rents);
    out.trace.total_batches = static_cast<std::size_t>(total_batches);
    if (j.contains("lambda")) out.lambda = integer_field(j, "lambda", "trace");
    if (j.contains("shifted_rents")) out.shifted_rents = rents_from_json(array_field(j, "shifted_rents", "trace"), "trace");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << content;
}

}  // namespace rentmin
