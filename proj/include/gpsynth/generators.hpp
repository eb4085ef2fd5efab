#pragma once

#include <string>
#include <vector>

#include "gpsynth/model.hpp"

namespace gpsynth {

// A builtin benchmark family: domain, training instances, held-out larger
// validation instances, and the default synthesis configuration.
struct Benchmark {
    std::string name;
    bool numeric = false;

    std::string domain_pddl;                  // STRIPS families
    const NumericDomain* num_domain = nullptr;

    std::vector<std::string> training;   // instance texts
    std::vector<std::string> validation; // larger held-out instance texts

    int pointers = 2;
    int lines = 6;
    int v = 1;
    std::vector<std::string> evaluators{"h5", "f1"};
    SearchMode mode = SearchMode::Bfs;
};

std::vector<std::string> benchmark_names();
Benchmark generate_benchmark(const std::string& name, unsigned seed = 0);

// Builds a runnable problem from the benchmark; validation instances are
// appended after the training ones when requested.
GPProblem problem_from_benchmark(const Benchmark& b, bool include_validation = false);

} // namespace gpsynth
