#include "gpsynth/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "gpsynth/evaluators.hpp"
#include "gpsynth/program.hpp"

namespace gpsynth {

namespace {

const char* outcome_name(const RunOutcome& o) {
    switch (o.kind) {
    case RunOutcome::Kind::Solved: return "solved";
    case RunOutcome::Kind::UndefinedLine: return "undefined-line";
    case RunOutcome::Kind::Failed: return fail_reason_name(o.reason);
    }
    return "?";
}

} // namespace

std::string machine_report(const GPProblem& problem, const SearchResult& result,
                           const std::vector<ValidationRow>& validation) {
    nlohmann::ordered_json j;
    j["problem"] = problem.name;
    j["numeric"] = problem.numeric;
    j["pointers"] = problem.pointers;
    j["lines"] = problem.lines;
    j["v"] = problem.v;
    j["evaluators"] = problem.evaluator_names;
    j["mode"] = problem.mode == SearchMode::Pgp ? "pgp" : "bfs";
    j["instances"] = problem.instance_count();

    j["solved"] = result.solved;
    if (result.solved) {
        std::istringstream prog(print_program(result.program, problem));
        std::vector<std::string> lines;
        for (std::string l; std::getline(prog, l);) lines.push_back(l);
        j["program"] = lines;
        j["evaluation"] = result.final_eval;
    }

    j["stats"]["expanded"] = result.stats.expanded;
    j["stats"]["generated"] = result.stats.generated;
    j["stats"]["evaluated"] = result.stats.evaluated;
    j["stats"]["pruned_novelty"] = result.stats.pruned_novelty;
    j["stats"]["pruned_deadend"] = result.stats.pruned_deadend;
    j["stats"]["dropped_open"] = result.stats.dropped_open;
    j["stats"]["escalations"] = result.stats.escalations;

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : validation)
        rows.push_back({{"instance", row.instance}, {"outcome", outcome_name(row.outcome)}});
    j["validation"] = rows;
    return j.dump(2) + "\n";
}

std::string human_report(const GPProblem& problem, const SearchResult& result,
                         const std::vector<ValidationRow>& validation) {
    std::ostringstream out;
    out << "== " << problem.name << " ==\n";
    out << "mode " << (problem.mode == SearchMode::Pgp ? "pgp" : "bfs") << ", n="
        << problem.lines << ", z=" << problem.pointers << ", v=" << problem.v << ", evaluators";
    for (const auto& e : problem.evaluator_names) out << " " << e;
    out << "\n";
    if (result.solved) {
        out << "solved, evaluation (";
        for (std::size_t i = 0; i < result.final_eval.size(); ++i)
            out << (i ? ", " : "") << result.final_eval[i];
        out << ")\n" << print_program(result.program, problem);
    } else {
        if (result.stats.timed_out)
            out << "time limit reached\n";
        else if (result.stats.dropped_open > 0)
            out << "open list emptied after memory-guard drops (search incomplete)\n";
        else
            out << "search space exhausted\n";
    }
    out << "expanded " << result.stats.expanded << ", evaluated " << result.stats.evaluated
        << ", pruned " << result.stats.pruned_novelty << " (bound) + "
        << result.stats.pruned_deadend << " (dead ends)";
    if (result.stats.dropped_open > 0)
        out << ", dropped " << result.stats.dropped_open << " (memory guard)";
    if (!result.stats.escalations.empty()) {
        out << ", activated";
        for (std::size_t i : result.stats.escalations) out << " #" << i;
    }
    out << "\n";
    out << std::fixed << std::setprecision(2) << "time " << result.stats.wall_seconds << "s\n";
    for (const auto& row : validation)
        out << "  " << row.instance << ": " << outcome_name(row.outcome) << "\n";
    return out.str();
}

} // namespace gpsynth
