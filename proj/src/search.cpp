#include "gpsynth/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "gpsynth/novelty.hpp"

namespace gpsynth {

namespace {

// All pointer tuples of the given arity, lexicographic.
void for_each_tuple(int pointers, int arity, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    while (true) {
        fn(tuple);
        int i = arity - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == pointers - 1) {
            tuple[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++tuple[static_cast<std::size_t>(i)];
    }
}

std::vector<int> sorted_by_name(const std::vector<std::string>& names) {
    std::vector<int> idx(names.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return names[static_cast<std::size_t>(a)] < names[static_cast<std::size_t>(b)];
    });
    return idx;
}

} // namespace

std::vector<Instruction> candidate_instructions(const GPProblem& problem,
                                                const PlanningProgram& program, int line,
                                                bool structural) {
    std::vector<Instruction> out;
    const int z = problem.pointers;
    const int n = program.capacity();

    // The last line is reserved for End.
    if (structural && line == n - 1) {
        out.push_back(make_end());
        return out;
    }

    // Planning actions: schemas by name, then pointer tuples.
    if (problem.numeric) {
        std::vector<std::string> names;
        for (const auto& s : problem.num_domain->schemas) names.push_back(s.name);
        for (int si : sorted_by_name(names)) {
            int arity = problem.num_domain->schemas[static_cast<std::size_t>(si)].arity;
            for_each_tuple(z, arity, [&](const std::vector<int>& t) {
                out.push_back(make_action(si, t));
            });
        }
    } else {
        std::vector<std::string> names;
        for (const auto& s : problem.domain.schemas) names.push_back(s.name);
        for (int si : sorted_by_name(names)) {
            int arity = problem.domain.schemas[static_cast<std::size_t>(si)].arity();
            for_each_tuple(z, arity, [&](const std::vector<int>& t) {
                out.push_back(make_action(si, t));
            });
        }
    }

    // Pointer arithmetic. The first line may not start with an instruction
    // that is a no-op on the initial pointer valuation (dec / clear / set of
    // all-zero pointers).
    bool first = structural && line == 0;
    for (int p = 0; p < z; ++p) out.push_back(make_ram(Op::Inc, p));
    if (!first)
        for (int p = 0; p < z; ++p) out.push_back(make_ram(Op::Dec, p));
    if (!first)
        for (int a = 0; a < z; ++a)
            for (int b = 0; b < z; ++b)
                if (a != b) out.push_back(make_ram(Op::Set, a, b));
    if (!first)
        for (int p = 0; p < z; ++p) out.push_back(make_ram(Op::Clear, p));

    if (problem.numeric) {
        for (int a = 0; a < z; ++a)
            for (int b = 0; b < z; ++b)
                if (a != b) out.push_back(make_ram(Op::Cmp, a, b));
        for (int a = 0; a < z; ++a)
            for (int b = 0; b < z; ++b)
                if (a != b) out.push_back(make_ram(Op::CmpVar, a, b));
    } else {
        std::vector<std::string> pnames;
        for (const auto& p : problem.domain.predicates) pnames.push_back(p.name);
        for (int pi : sorted_by_name(pnames)) {
            int arity = problem.domain.predicates[static_cast<std::size_t>(pi)].arity();
            for_each_tuple(z, arity, [&](const std::vector<int>& t) {
                out.push_back(make_test(pi, t));
            });
        }
    }

    // Gotos: a destination holding a goto is excluded, as is placing a goto
    // where another goto already jumps.
    bool targeted = false;
    if (structural)
        for (const auto& w : program.lines)
            if (w.op == Op::Goto && w.id == line) { targeted = true; break; }
    static const Cond kStrips[] = {Cond::Eq, Cond::Ne};
    static const Cond kNumeric[] = {Cond::Eq, Cond::Ne, Cond::Gt, Cond::Le, Cond::Lt, Cond::Ge};
    if (!targeted) {
        for (int t = 0; t + 1 < n; ++t) { // the reserved End line is no goto target
            if (structural &&
                (t == line || program.lines[static_cast<std::size_t>(t)].op == Op::Goto))
                continue;
            if (problem.numeric)
                for (Cond c : kNumeric) out.push_back(make_goto(t, c));
            else
                for (Cond c : kStrips) out.push_back(make_goto(t, c));
        }
    }

    out.push_back(make_end());
    return out;
}

namespace {

struct OpenEntry {
    std::vector<double> eval;
    std::uint64_t seq;
    PlanningProgram program;
};

struct OpenLess {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.eval != b.eval) return lex_less(a.eval, b.eval);
        return a.seq < b.seq;
    }
};

struct Searcher {
    const GPProblem& problem;
    const SearchConfig& config;
    EvalContext ctx;
    std::set<OpenEntry, OpenLess> open;
    std::uint64_t next_seq = 0;
    SearchStats stats;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Searcher(const GPProblem& p, const SearchConfig& c) : problem(p), config(c) {
        ctx.budget = c.budget; // prepare() fills the evaluator stack
    }

    bool out_of_time() {
        stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (config.time_limit_s > 0 && stats.wall_seconds > config.time_limit_s) {
            stats.timed_out = true;
            return true;
        }
        return false;
    }

    void activate(std::vector<std::size_t> active) {
        ctx.prepare(problem, std::move(active));
    }

    // Runs on every active instance; empty result marks a dead end.
    std::vector<InstanceRunData> run_all(const PlanningProgram& prog, bool* solved) {
        std::vector<InstanceRunData> runs;
        bool all = true;
        for (std::size_t pos = 0; pos < ctx.active.size(); ++pos) {
            runs.push_back(evaluate_run(prog, ctx, pos));
            const RunOutcome& o = runs.back().outcome;
            if (o.kind == RunOutcome::Kind::Failed) return {};
            if (o.kind != RunOutcome::Kind::Solved) all = false;
        }
        *solved = all;
        return runs;
    }

    void push(PlanningProgram prog, std::vector<double> eval, std::uint64_t seq) {
        open.insert(OpenEntry{std::move(eval), seq, std::move(prog)});
        if (config.max_open && open.size() >= config.max_open) {
            // Deterministic memory guard: drop the worst half of the queue.
            while (open.size() > config.max_open / 2) {
                open.erase(std::prev(open.end()));
                ++stats.dropped_open;
            }
        }
    }

    // Line to program next: the undefined line reached on the first active
    // instance; nodes whose execution ends elsewhere are terminal.
    int programmable_line(const PlanningProgram& prog) {
        RunOutcome o = run(prog, problem, ctx.active.front(), ctx.budget);
        // Falling off the end leaves nothing to program.
        if (o.kind == RunOutcome::Kind::UndefinedLine && o.undefined_line < prog.capacity())
            return o.undefined_line;
        return -1;
    }

    // Re-scores every open entry against the current active set, dropping
    // entries that now fail.
    void rescore_open() {
        std::vector<OpenEntry> entries(std::make_move_iterator(open.begin()),
                                       std::make_move_iterator(open.end()));
        open.clear();
        for (auto& e : entries) {
            bool solved = false;
            auto runs = run_all(e.program, &solved);
            if (runs.empty() && !solved) {
                ++stats.pruned_deadend;
                continue;
            }
            ++stats.evaluated;
            std::vector<double> eval = evaluate(e.program, ctx, runs);
            push(std::move(e.program), std::move(eval), e.seq);
        }
    }

    SearchResult finish(bool solved, PlanningProgram prog, std::vector<double> eval) {
        stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        SearchResult r;
        r.solved = solved;
        r.program = std::move(prog);
        r.final_eval = std::move(eval);
        r.stats = stats;
        return r;
    }

    SearchResult search() {
        const bool progressive = problem.mode == SearchMode::Pgp;
        std::vector<std::size_t> active;
        if (progressive) {
            active = {0};
        } else {
            for (std::size_t i = 0; i < problem.instance_count(); ++i) active.push_back(i);
        }
        activate(std::move(active));

        PlanningProgram root(problem.lines);
        {
            bool solved = false;
            auto runs = run_all(root, &solved);
            ++stats.evaluated;
            push(root, evaluate(root, ctx, runs), next_seq++);
        }

        while (!open.empty()) {
            if (out_of_time()) break;
            OpenEntry node = std::move(open.extract(open.begin()).value());
            ++stats.expanded;
            if (config.on_expand) config.on_expand(node.program);

            int line = programmable_line(node.program);
            if (line < 0) continue;

            for (const Instruction& cand :
                 candidate_instructions(problem, node.program, line, config.structural)) {
                ++stats.generated;
                if (config.use_novelty && should_prune(node.program, cand, problem.v)) {
                    ++stats.pruned_novelty;
                    continue;
                }
                PlanningProgram child = node.program;
                child.lines[static_cast<std::size_t>(line)] = cand;

                bool solved = false;
                auto runs = run_all(child, &solved);
                if (runs.empty() && !solved) {
                    ++stats.pruned_deadend;
                    continue;
                }
                ++stats.evaluated;

                if (solved) {
                    if (!progressive || ctx.active.size() == problem.instance_count())
                        return finish(true, std::move(child), evaluate(child, ctx, runs));

                    // Validate on the full family; activate the first
                    // instance the candidate fails or leaves unfinished.
                    std::size_t fail = problem.instance_count();
                    for (std::size_t i = 0; i < problem.instance_count(); ++i) {
                        if (std::find(ctx.active.begin(), ctx.active.end(), i) !=
                            ctx.active.end())
                            continue;
                        RunOutcome o = run(child, problem, i, ctx.budget);
                        if (o.kind != RunOutcome::Kind::Solved) { fail = i; break; }
                    }
                    if (fail == problem.instance_count())
                        return finish(true, std::move(child), evaluate(child, ctx, runs));

                    std::vector<std::size_t> grown = ctx.active;
                    grown.push_back(fail);
                    std::sort(grown.begin(), grown.end());
                    stats.escalations.push_back(fail);
                    activate(std::move(grown));
                    rescore_open();

                    bool child_ok = false;
                    auto child_runs = run_all(child, &child_ok);
                    if (!child_runs.empty() || child_ok) {
                        ++stats.evaluated;
                        std::vector<double> eval = evaluate(child, ctx, child_runs);
                        push(std::move(child), std::move(eval), next_seq++);
                    } else {
                        ++stats.pruned_deadend;
                    }
                    continue; // remaining candidates score against the grown set
                }

                std::vector<double> eval = evaluate(child, ctx, runs);
                push(std::move(child), std::move(eval), next_seq++);
            }
        }
        return finish(false, PlanningProgram(problem.lines), {});
    }
};

} // namespace

SearchResult synthesize(const GPProblem& problem, const SearchConfig& config) {
    Searcher s(problem, config);
    return s.search();
}

} // namespace gpsynth
