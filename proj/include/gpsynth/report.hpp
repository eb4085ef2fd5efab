#pragma once

#include <string>
#include <vector>

#include "gpsynth/search.hpp"
#include "gpsynth/vm.hpp"

namespace gpsynth {

// Outcome of re-running a program on one instance, for reporting.
struct ValidationRow {
    std::string instance;
    RunOutcome outcome;
};

// Deterministic machine-readable record: configuration, result program,
// evaluation, counters, and validation rows. Timing is deliberately excluded
// so identical runs serialize to identical bytes.
std::string machine_report(const GPProblem& problem, const SearchResult& result,
                           const std::vector<ValidationRow>& validation);

// Human-oriented summary; includes wall-clock time.
std::string human_report(const GPProblem& problem, const SearchResult& result,
                         const std::vector<ValidationRow>& validation);

} // namespace gpsynth
