#pragma once

#include <string>
#include <vector>

#include "gpsynth/generators.hpp"
#include "gpsynth/model.hpp"

namespace gpsynth {

// A synthesis task loaded from a key=value manifest file. File paths in the
// manifest resolve relative to the manifest's directory; numeric tasks name a
// builtin register-machine domain instead of a domain file.
struct Manifest {
    GPProblem problem;
    std::vector<std::string> validation_paths; // resolved held-out instance files
};

Manifest load_manifest(const std::string& path);

// Appends the validation instances to the problem's instance list and returns
// the index of the first one.
std::size_t append_validation(Manifest& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Writes domain, instances, and manifest for a builtin benchmark into dir.
// Returns the manifest path.
std::string write_benchmark_files(const Benchmark& b, const std::string& dir);

} // namespace gpsynth
