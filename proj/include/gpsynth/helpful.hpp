#pragma once

#include <set>
#include <string>
#include <vector>

#include "gpsynth/model.hpp"

namespace gpsynth {

// Lifted helpful actions: schemas supporting lifted unachieved predicates,
// found by layered regression over the lifted representation.
struct HelpfulActionSet {
    std::set<std::string> schemas; // H, union over layers
    struct Layer {
        std::set<std::string> unachieved; // U_i
        std::set<std::string> supporters; // S_i
    };
    std::vector<Layer> layers;

    bool contains(const std::string& schema) const { return schemas.count(schema) > 0; }
};

HelpfulActionSet lifted_helpful_actions(const StripsDomain& domain, const StripsInstance& inst);

// Union over the given instances (all when subset empty).
HelpfulActionSet lifted_helpful_actions(const GPProblem& problem,
                                        std::vector<std::size_t> subset = {});

std::string print_helpful_actions(const HelpfulActionSet& h);

} // namespace gpsynth
