#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "gpsynth/evaluators.hpp"
#include "gpsynth/generators.hpp"
#include "gpsynth/helpful.hpp"
#include "gpsynth/landmarks.hpp"
#include "gpsynth/manifest.hpp"
#include "gpsynth/novelty.hpp"
#include "gpsynth/pddl.hpp"
#include "gpsynth/report.hpp"
#include "gpsynth/search.hpp"

using namespace gpsynth;

namespace {

unsigned env_seed() {
    if (const char* s = std::getenv("GPSYNTH_SEED")) return static_cast<unsigned>(std::atoi(s));
    return 0;
}

std::vector<ValidationRow> validate_rows(const PlanningProgram& prog, const GPProblem& problem,
                                         std::size_t from, std::int64_t budget) {
    std::vector<ValidationRow> rows;
    for (std::size_t i = from; i < problem.instance_count(); ++i) {
        std::string name = problem.numeric ? problem.num_instances[i].name
                                           : problem.instances[i].name;
        rows.push_back({name, run(prog, problem, i, budget)});
    }
    return rows;
}

int cmd_solve(const std::string& manifest_path, double time_limit, std::int64_t budget,
              bool no_novelty, bool with_validation, const std::string& machine_out) {
    Manifest m = load_manifest(manifest_path);
    SearchConfig cfg;
    cfg.time_limit_s = time_limit;
    if (budget) cfg.budget = budget;
    cfg.use_novelty = !no_novelty;
    SearchResult r = synthesize(m.problem, cfg);
    budget = budget ? budget : 1'000'000; // full budget when re-validating

    std::vector<ValidationRow> rows;
    if (r.solved) {
        rows = validate_rows(r.program, m.problem, 0, budget);
        if (with_validation && !m.validation_paths.empty()) {
            std::size_t first = append_validation(m);
            auto extra = validate_rows(r.program, m.problem, first, budget);
            rows.insert(rows.end(), extra.begin(), extra.end());
        }
    }
    std::cout << human_report(m.problem, r, rows);
    if (!machine_out.empty()) write_file(machine_out, machine_report(m.problem, r, rows));
    if (!r.solved) return r.stats.timed_out ? 3 : 2;
    for (const auto& row : rows)
        if (row.outcome.kind != RunOutcome::Kind::Solved) return 2;
    return 0;
}

int cmd_validate(const std::string& manifest_path, const std::string& program_path,
                 bool with_validation, std::int64_t budget) {
    budget = budget ? budget : 1'000'000;
    Manifest m = load_manifest(manifest_path);
    if (with_validation) append_validation(m);
    PlanningProgram prog = parse_program(read_file(program_path), m.problem);
    auto rows = validate_rows(prog, m.problem, 0, budget);
    bool ok = true;
    for (const auto& row : rows) {
        bool solved = row.outcome.kind == RunOutcome::Kind::Solved;
        ok = ok && solved;
        std::cout << row.instance << ": "
                  << (solved ? "solved"
                             : row.outcome.kind == RunOutcome::Kind::UndefinedLine
                                   ? "undefined-line"
                                   : fail_reason_name(row.outcome.reason))
                  << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_run(const std::string& manifest_path, const std::string& program_path, std::size_t inst,
            std::int64_t budget) {
    budget = budget ? budget : 1'000'000;
    Manifest m = load_manifest(manifest_path);
    PlanningProgram prog = parse_program(read_file(program_path), m.problem);
    std::string trace;
    RunOutcome o = run(prog, m.problem, inst, budget, nullptr, nullptr, &trace);
    std::cout << trace;
    switch (o.kind) {
    case RunOutcome::Kind::Solved: std::cout << "solved\n"; return 0;
    case RunOutcome::Kind::UndefinedLine:
        std::cout << "stopped at undefined line " << o.undefined_line << "\n";
        return 1;
    case RunOutcome::Kind::Failed:
        std::cout << "failed: " << fail_reason_name(o.reason) << "\n";
        return 1;
    }
    return 1;
}

int cmd_rank(const std::string& manifest_path, const std::string& program_path) {
    Manifest m = load_manifest(manifest_path);
    PlanningProgram prog = parse_program(read_file(program_path), m.problem);
    for (int i = 0; i < prog.capacity(); ++i) {
        const Instruction& w = prog.lines[static_cast<std::size_t>(i)];
        if (!w.defined()) continue;
        std::cout << i << ". " << print_instruction(w, m.problem) << "  rank ";
        // Rank of each instruction against the rest of the program.
        PlanningProgram rest = prog;
        rest.lines[static_cast<std::size_t>(i)] = Instruction{};
        if (action_identity(w))
            std::cout << novelty_rank(w, rest);
        else
            std::cout << "-";
        std::cout << "\n";
    }

    EvalContext ctx;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < m.problem.instance_count(); ++i) active.push_back(i);
    ctx.prepare(m.problem, active);
    std::vector<InstanceRunData> runs;
    for (std::size_t pos = 0; pos < active.size(); ++pos)
        runs.push_back(evaluate_run(prog, ctx, pos));
    std::vector<double> eval = evaluate(prog, ctx, runs);
    std::cout << "evaluation (";
    for (std::size_t i = 0; i < eval.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << eval_name(ctx.stack[i]) << "=" << eval[i];
    }
    std::cout << ")\n";
    return 0;
}

int cmd_inspect(const std::string& manifest_path, bool landmarks, bool helpful) {
    Manifest m = load_manifest(manifest_path);
    if (m.problem.numeric) {
        std::cout << "numeric task: no landmark or helpful-action analysis\n";
        return 1;
    }
    for (std::size_t i = 0; i < m.problem.instances.size(); ++i) {
        const auto& inst = m.problem.instances[i];
        std::cout << "-- " << inst.name << " --\n";
        if (landmarks)
            std::cout << print_landmark_graph(extract_landmark_graph(m.problem.domain, inst),
                                              inst);
        if (helpful)
            std::cout << print_helpful_actions(lifted_helpful_actions(m.problem.domain, inst));
    }
    return 0;
}

int cmd_gen(const std::string& name, const std::string& dir, unsigned seed) {
    if (name == "all") {
        for (const auto& n : benchmark_names())
            std::cout << write_benchmark_files(generate_benchmark(n, seed), dir + "/" + n) << "\n";
        return 0;
    }
    std::cout << write_benchmark_files(generate_benchmark(name, seed), dir) << "\n";
    return 0;
}

int cmd_bench(const std::string& names_csv, double time_limit, std::int64_t budget, unsigned seed,
              const std::string& machine_out) {
    std::vector<std::string> names =
        names_csv.empty() ? benchmark_names() : split(names_csv, ',');
    std::string machine;
    int failures = 0;
    for (const auto& name : names) {
        Benchmark b = generate_benchmark(trim(name), seed);
        GPProblem p = problem_from_benchmark(b);
        SearchConfig cfg;
        cfg.time_limit_s = time_limit;
        if (budget) cfg.budget = budget;
        SearchResult r = synthesize(p, cfg);

        std::vector<ValidationRow> rows;
        if (r.solved) {
            GPProblem full = problem_from_benchmark(b, true);
            rows = validate_rows(r.program, full, 0, budget ? budget : 1'000'000);
            for (const auto& row : rows)
                if (row.outcome.kind != RunOutcome::Kind::Solved) ++failures;
        } else {
            ++failures;
        }
        std::cout << human_report(p, r, rows) << "\n";
        if (!machine_out.empty()) machine += machine_report(p, r, rows);
    }
    if (!machine_out.empty()) write_file(machine_out, machine);
    return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized-planning synthesizer over programs with pointers"};
    app.require_subcommand(1);

    std::string manifest_path, program_path, machine_out, dir, names_csv;
    std::size_t instance = 0;
    double time_limit = 0.0;
    std::int64_t budget = 0; // 0: library defaults
    bool no_novelty = false, with_validation = false, landmarks = false, helpful = false;
    unsigned seed = env_seed();

    auto* solve = app.add_subcommand("solve", "synthesize a program for a manifest task");
    solve->add_option("manifest", manifest_path)->required();
    solve->add_option("--time-limit", time_limit, "seconds, 0 = unlimited");
    solve->add_option("--budget", budget, "VM steps per instance run");
    solve->add_flag("--no-novelty", no_novelty, "disable the action-occurrence bound");
    solve->add_flag("--validate-extra", with_validation, "also run held-out instances");
    solve->add_option("--machine", machine_out, "write a machine-readable record");

    auto* validate = app.add_subcommand("validate", "run a program file on a task's instances");
    validate->add_option("manifest", manifest_path)->required();
    validate->add_option("program", program_path)->required();
    validate->add_flag("--validate-extra", with_validation);
    validate->add_option("--budget", budget);

    auto* runc = app.add_subcommand("run", "trace a program on one instance");
    runc->add_option("manifest", manifest_path)->required();
    runc->add_option("program", program_path)->required();
    runc->add_option("--instance", instance);
    runc->add_option("--budget", budget);

    auto* rank = app.add_subcommand("rank", "per-instruction occurrence ranks and evaluation");
    rank->add_option("manifest", manifest_path)->required();
    rank->add_option("program", program_path)->required();

    auto* inspect = app.add_subcommand("inspect", "landmark and helpful-action analysis");
    inspect->add_option("manifest", manifest_path)->required();
    inspect->add_flag("--landmarks", landmarks);
    inspect->add_flag("--helpful", helpful);

    auto* gen = app.add_subcommand("gen", "write builtin benchmark files");
    gen->add_option("name", names_csv, "benchmark name or 'all'")->required();
    gen->add_option("dir", dir)->required();
    gen->add_option("--seed", seed);

    auto* bench = app.add_subcommand("bench", "solve builtin benchmarks and report");
    bench->add_option("--names", names_csv, "comma-separated subset");
    bench->add_option("--time-limit", time_limit);
    bench->add_option("--budget", budget);
    bench->add_option("--seed", seed);
    bench->add_option("--machine", machine_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(manifest_path, time_limit, budget, no_novelty, with_validation,
                             machine_out);
        if (validate->parsed())
            return cmd_validate(manifest_path, program_path, with_validation, budget);
        if (runc->parsed()) return cmd_run(manifest_path, program_path, instance, budget);
        if (rank->parsed()) return cmd_rank(manifest_path, program_path);
        if (inspect->parsed()) return cmd_inspect(manifest_path, landmarks || !helpful, helpful);
        if (gen->parsed()) return cmd_gen(names_csv, dir, seed);
        if (bench->parsed())
            return cmd_bench(names_csv, time_limit, budget, seed, machine_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
