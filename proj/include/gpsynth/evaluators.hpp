#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpsynth/helpful.hpp"
#include "gpsynth/landmarks.hpp"
#include "gpsynth/vm.hpp"

namespace gpsynth {

enum class EvalId { F1, H5, Flm, Fha, Fln, Fcn };

std::optional<EvalId> eval_id_from_name(const std::string& name);
const char* eval_name(EvalId id);

// Everything the evaluator stack needs about the problem and the currently
// active instances. prepare() recomputes landmark graphs and helpful actions
// whenever the active set changes.
struct EvalContext {
    const GPProblem* problem = nullptr;
    std::vector<EvalId> stack;
    std::vector<std::size_t> active;
    std::int64_t budget = 1'000'000;

    std::vector<LandmarkGraph> graphs; // parallel to active, Flm only
    HelpfulActionSet helpful;          // Fha only

    bool needs(EvalId id) const;
    void prepare(const GPProblem& prob, std::vector<std::size_t> active_set);
};

// Per-instance execution record a node evaluation is computed from.
struct InstanceRunData {
    RunOutcome outcome;
    std::size_t unaccepted_landmarks = 0;
    std::size_t uncovered = 0;
};

// Runs the program on active instance #pos with the observers the stack needs.
InstanceRunData evaluate_run(const PlanningProgram& program, const EvalContext& ctx,
                             std::size_t pos);

// Static evaluators read the program text; dynamic ones read the run data
// (ordered as ctx.active). Result is compared lexicographically, smaller
// values first.
std::vector<double> evaluate(const PlanningProgram& program, const EvalContext& ctx,
                             const std::vector<InstanceRunData>& runs);

bool lex_less(const std::vector<double>& a, const std::vector<double>& b);

// Individual evaluation functions (exposed for tests and the CLI).
int f1(const PlanningProgram& program);
int f_ln(const PlanningProgram& program);
int f_ha(const PlanningProgram& program, const GPProblem& problem, const HelpfulActionSet& h);
double h5_distance(const RunOutcome& outcome, const GPProblem& problem, std::size_t inst);
std::size_t count_unaccepted_landmarks(const PlanningProgram& program, const GPProblem& problem,
                                       std::size_t inst, const LandmarkGraph& graph,
                                       std::int64_t budget = 1'000'000);

} // namespace gpsynth
