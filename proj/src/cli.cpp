#include "rentmin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rentmin/delay.hpp"
#include "rentmin/generators.hpp"
#include "rentmin/io.hpp"
#include "rentmin/offline.hpp"
#include "rentmin/report.hpp"
#include "rentmin/semi_online.hpp"

namespace rentmin::cli {

namespace {

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

// Strip a trailing .csv or .json so `--out report.csv` and `--out report` agree.
std::string report_stem(std::string path) {
    for (const char* ext : {".csv", ".json"}) {
        std::string e(ext);
        if (path.size() > e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0) return path.substr(0, path.size() - e.size());
    }
    return path;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Online machine renting with unit jobs: simulation, baselines and checks", "rentmin"};
    app.require_subcommand(1);

    GenSpec spec;
    std::string kind = "random";
    std::string instance_path, out_path, trace_path, spec_path, method = "all";
    std::int64_t max_jobs = 5, k_max = -1, count = 100;
    unsigned workers = 1;
    bool exhaustive_flag = false;

    auto add_gen_flags = [&](CLI::App* sub) {
        sub->add_option("--kind", kind, "exhaustive | random | late-emergence | staircase")
            ->check(CLI::IsMember({"exhaustive", "random", "late-emergence", "staircase"}));
        sub->add_option("--seed", spec.seed, "Random seed (SplitMix64)");
        sub->add_option("--n", spec.n, "Jobs (waves for late-emergence)");
        sub->add_option("--horizon", spec.horizon, "Time horizon");
        sub->add_option("--T", spec.T, "Rent length");
        sub->add_option("--lambda", spec.lambda, "Activation delay");
        sub->add_option("--min-window", spec.min_window, "Smallest d - r (random)");
        sub->add_option("--max-window", spec.max_window, "Largest d - r (random)");
        sub->add_option("--max-jobs", max_jobs, "Largest job multiset (exhaustive)");
    };

    auto* gen = app.add_subcommand("gen", "Write an instance (JSON lines for exhaustive)");
    add_gen_flags(gen);
    gen->add_option("--spec", spec_path, "GenSpec JSON file, used instead of the generator flags");
    gen->add_option("--out", out_path, "Output path (default stdout)");

    auto* simulate = app.add_subcommand("simulate", "Run the online algorithm and write its trace");
    simulate->add_option("--instance", instance_path, "Instance JSON")->required();
    simulate->add_option("--out", out_path, "Trace path (default stdout)");

    auto* opt = app.add_subcommand("opt", "Offline baselines for an instance");
    opt->add_option("--instance", instance_path, "Instance JSON")->required();
    opt->add_option("--method", method, "exact | lower-bound | two-approx | all")
        ->check(CLI::IsMember({"exact", "lower-bound", "two-approx", "all"}));
    opt->add_option("--k-max", k_max, "Largest rent count tried by the exact search (default |J|)");

    auto* check = app.add_subcommand("check", "Verify a trace against its instance");
    check->add_option("--instance", instance_path, "Instance JSON")->required();
    check->add_option("--trace", trace_path, "Trace JSON")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Ratio report over generated instances");
    add_gen_flags(sweep_cmd);
    sweep_cmd->add_flag("--exhaustive", exhaustive_flag, "Same as --kind exhaustive");
    sweep_cmd->add_option("--count", count, "Random instances (seeds seed..seed+count-1)");
    sweep_cmd->add_option("--k-max", k_max, "Largest rent count tried by the exact search");
    sweep_cmd->add_option("--jobs", workers, "Parallel workers");
    sweep_cmd->add_option("--out", out_path, "Writes <out>.csv and <out>.json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }

    try {
        if (gen->parsed()) {
            if (!spec_path.empty())
                spec = genspec_from_json(read_file(spec_path));
            else
                spec.kind = gen_kind_from_string(kind);
            if (spec.kind == GenKind::exhaustive) {
                if (spec.horizon > 12 || max_jobs > 6)
                    err << "warning: exhaustive grid beyond horizon 12 / 6 jobs is large\n";
                std::ostringstream lines;
                for_each_exhaustive(spec.T, spec.horizon, max_jobs, [&](const Instance& inst) {
                    lines << serialize_instance(inst) << '\n';
                });
                emit(out_path, lines.str(), out);
            } else {
                emit(out_path, serialize_instance(validate_instance(generate(spec))) + "\n", out);
            }
            return kOk;
        }

        if (simulate->parsed()) {
            auto inst = parse_instance(read_file(instance_path));
            auto trace = inst.lambda == 0 ? trace_to_json(simulate_online(inst).trace) : trace_to_json(simulate_with_delay(inst));
            emit(out_path, trace.dump(2) + "\n", out);
            return kOk;
        }

        if (opt->parsed()) {
            auto inst = parse_instance(read_file(instance_path));
            nlohmann::json result = {{"n", inst.jobs.size()}, {"T", inst.T}};
            if (method == "exact" || method == "all") {
                auto best = brute_force_opt(inst.jobs, inst.T, {k_max, false});
                result["opt"] = best.count;
                result["opt_method"] = to_string(best.method);
            }
            if (method == "lower-bound" || method == "all") result["density_lower_bound"] = density_lower_bound(inst.jobs, inst.T);
            if (method == "two-approx" || method == "all") result["two_approx"] = offline_two_approx(inst.jobs, inst.T).size();
            out << result.dump() << "\n";
            return kOk;
        }

        if (check->parsed()) {
            auto inst = parse_instance(read_file(instance_path));
            auto result = check_trace(inst, parse_trace(read_file(trace_path)));
            if (result.ok()) {
                out << "ok\n";
                return kOk;
            }
            for (const auto& p : result.problems) err << "violation: " << p << "\n";
            if (result.witness)
                err << "hall witness: r*=" << result.witness->r_star << " d*=" << result.witness->d_star
                    << " supply=" << result.witness->supply << " demand=" << result.witness->demand << "\n";
            return kBreach;
        }

        if (sweep_cmd->parsed()) {
            spec.kind = exhaustive_flag ? GenKind::exhaustive : gen_kind_from_string(kind);
            if (spec.kind == GenKind::exhaustive && (spec.horizon > 12 || max_jobs > 6))
                err << "warning: exhaustive grid beyond horizon 12 / 6 jobs is large\n";
            SweepConfig config;
            config.gen = spec;
            config.max_jobs = max_jobs;
            config.count = count;
            config.workers = workers;
            config.eval.k_max = k_max;
            auto report = sweep(config);
            if (!out_path.empty()) {
                auto stem = report_stem(out_path);
                std::ofstream csv(stem + ".csv"), json(stem + ".json");
                if (!csv || !json) throw ValidationError("cannot write report files at '" + stem + "'");
                write_csv(report, csv);
                write_json(report, json);
            }
            out << aggregate_json(report) << "\n";
            return report.violations() == 0 ? kOk : kBreach;
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const InvariantError& e) {
        err << "invariant breach: " << e.what() << "\n";
        return kBreach;
    }
    return kInvalid;
}

}  // namespace rentmin::cli
