#include "rentmin/generators.hpp"

#include <json.hpp>

namespace rentmin {

const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::exhaustive: return "exhaustive";
        case GenKind::random: return "random";
        case GenKind::late_emergence: return "late-emergence";
        case GenKind::staircase: return "staircase";
    }
    return "?";
}

GenKind gen_kind_from_string(const std::string& s) {
    for (auto k : {GenKind::exhaustive, GenKind::random, GenKind::late_emergence, GenKind::staircase})
        if (s == to_string(k)) return k;
    throw ValidationError("unknown generator kind '" + s + "'");
}

GenSpec genspec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed GenSpec JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("GenSpec must be a JSON object");
    GenSpec spec;
    auto read = [&](const char* key, auto& field) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer()) throw ValidationError(std::string("GenSpec field '") + key + "' must be an integer");
        field = j[key].get<std::remove_reference_t<decltype(field)>>();
    };
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) throw ValidationError("GenSpec field 'kind' must be a string");
        spec.kind = gen_kind_from_string(j["kind"].get<std::string>());
    }
    read("seed", spec.seed);
    read("n", spec.n);
    read("horizon", spec.horizon);
    read("T", spec.T);
    read("lambda", spec.lambda);
    read("min_window", spec.min_window);
    read("max_window", spec.max_window);
    return spec;
}

std::string genspec_to_json(const GenSpec& spec) {
    nlohmann::json j = {{"kind", to_string(spec.kind)}, {"seed", spec.seed},     {"n", spec.n},
                        {"horizon", spec.horizon},      {"T", spec.T},           {"lambda", spec.lambda},
                        {"min_window", spec.min_window}, {"max_window", spec.max_window}};
    return j.dump();
}

std::uint64_t exhaustive_count(Time horizon, std::int64_t max_jobs) {
    auto windows = static_cast<std::uint64_t>(horizon * (horizon + 1) / 2);
    std::uint64_t total = 0;
    std::uint64_t multisets = 1;  // C(W + k - 1, k)
    for (std::int64_t k = 0; k <= max_jobs; ++k) {
        if (k > 0) multisets = multisets * (windows + static_cast<std::uint64_t>(k) - 1) / static_cast<std::uint64_t>(k);
        total += multisets;
    }
    return total;
}

void for_each_exhaustive(Time T, Time horizon, std::int64_t max_jobs, const std::function<void(const Instance&)>& visit) {
    std::vector<std::pair<Time, Time>> windows;
    for (Time r = 0; r < horizon; ++r)
        for (Time d = r + 1; d <= horizon; ++d) windows.emplace_back(r, d);

    Instance inst{T, 0, {}};
    std::vector<std::size_t> pick;
    for (std::int64_t k = 0; k <= max_jobs; ++k) {
        if (k > 0 && windows.empty()) break;
        pick.assign(static_cast<std::size_t>(k), 0);
        inst.jobs.resize(static_cast<std::size_t>(k));
        for (;;) {
            for (std::size_t i = 0; i < pick.size(); ++i)
                inst.jobs[i] = Job{static_cast<JobId>(i + 1), windows[pick[i]].first, windows[pick[i]].second};
            visit(inst);
            // Next non-decreasing index vector.
            std::size_t i = pick.size();
            while (i > 0 && pick[i - 1] == windows.size() - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[i - 1];
        }
    }
}

std::vector<Instance> gen_exhaustive(Time T, Time horizon, std::int64_t max_jobs) {
    std::vector<Instance> out;
    for_each_exhaustive(T, horizon, max_jobs, [&](const Instance& inst) { out.push_back(inst); });
    return out;
}

Instance gen_random(const GenSpec& spec) {
    if (spec.n < 0) throw ValidationError("n >= 0 violated");
    if (spec.T < 1) throw ValidationError("T >= 1 violated");
    if (spec.lambda < 0) throw ValidationError("lambda >= 0 violated");
    if (spec.min_window < spec.lambda + 1) throw ValidationError("min_window must be at least lambda + 1");
    if (spec.max_window < spec.min_window) throw ValidationError("max_window < min_window");
    if (spec.max_window > spec.horizon) throw ValidationError("window larger than horizon");

    SplitMix64 rng(spec.seed);
    Instance inst{spec.T, spec.lambda, {}};
    inst.jobs.reserve(static_cast<std::size_t>(spec.n));
    for (std::int64_t i = 0; i < spec.n; ++i) {
        Time w = rng.uniform(spec.min_window, spec.max_window);
        Time r = rng.uniform(0, spec.horizon - w);
        inst.jobs.push_back({i + 1, r, r + w});
    }
    return inst;
}

Instance gen_late_emergence(Time T, std::int64_t waves) {
    if (T < 1) throw ValidationError("T >= 1 violated");
    if (waves < 1) throw ValidationError("late-emergence needs waves >= 1");
    Instance inst{T, 0, {}};
    const Time spacing = 13 * T + 1;
    for (std::int64_t w = 0; w < waves; ++w) {
        Time o = w * spacing;
        inst.jobs.push_back({2 * w + 1, o, o + 10 * T});
        inst.jobs.push_back({2 * w + 2, o + 9 * T, o + 10 * T});
    }
    return inst;
}

Instance gen_staircase(Time T, std::int64_t n) {
    if (T < 1) throw ValidationError("T >= 1 violated");
    if (n < 0) throw ValidationError("n >= 0 violated");
    Instance inst{T, 0, {}};
    for (std::int64_t i = 0; i < n; ++i) inst.jobs.push_back({i + 1, i, i + T});
    return inst;
}

Instance generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::random: return gen_random(spec);
        case GenKind::late_emergence:
        case GenKind::staircase: {
            auto inst = spec.kind == GenKind::staircase ? gen_staircase(spec.T, spec.n) : gen_late_emergence(spec.T, spec.n);
            inst.lambda = spec.lambda;
            return validate_instance(inst);
        }
        case GenKind::exhaustive: break;
    }
    throw ValidationError("exhaustive generation yields a stream of instances");
}

}  // namespace rentmin
