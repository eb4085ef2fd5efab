#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gpsynth/evaluators.hpp"
#include "gpsynth/program.hpp"

namespace gpsynth {

struct SearchConfig {
    std::int64_t budget = 2'000; // VM step budget per instance run during search
    double time_limit_s = 0.0;       // 0: unlimited
    bool use_novelty = true;
    bool structural = true; // first-line and goto-destination restrictions

    // Memory guard: once the open list holds this many entries, the worst
    // half (tail of the ordering) is discarded. 0 disables the guard.
    // Dropping makes the search incomplete, so an empty open list after any
    // drop is reported as a memory cutoff rather than exhaustion.
    std::size_t max_open = 10'000'000;

    // Called for every node popped for expansion, in order.
    std::function<void(const PlanningProgram&)> on_expand;
};

struct SearchStats {
    std::int64_t expanded = 0;
    std::int64_t generated = 0;
    std::int64_t evaluated = 0;
    std::int64_t pruned_novelty = 0;
    std::int64_t pruned_structural = 0;
    std::int64_t pruned_deadend = 0;
    std::int64_t dropped_open = 0; // discarded by the open-list memory guard
    std::vector<std::size_t> escalations; // instances activated after the first
    double wall_seconds = 0.0;
    bool timed_out = false;
};

struct SearchResult {
    bool solved = false;
    PlanningProgram program{0};
    std::vector<double> final_eval;
    SearchStats stats;
};

// All instructions admissible at the given line, in the fixed generation
// order: planning actions (schemas by name, pointer tuples lexicographic),
// pointer arithmetic, test / cmp, gotos (by target then condition), end.
// Applies the structural restrictions but not the novelty bound.
std::vector<Instruction> candidate_instructions(const GPProblem& problem,
                                                const PlanningProgram& program, int line,
                                                bool structural = true);

// Heuristic search over partial programs; runs plain best-first over all
// instances or the progressive variant that activates instances on demand,
// per problem.mode.
SearchResult synthesize(const GPProblem& problem, const SearchConfig& config = {});

} // namespace gpsynth
