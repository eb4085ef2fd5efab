#pragma once

#include <string>
#include <vector>

#include "gpsynth/model.hpp"

namespace gpsynth {

// Fact landmarks from delete-relaxation backchaining, enriched with pointer
// landmarks: each object of a fact landmark must be pointed at before the
// fact landmark is satisfied.
struct LandmarkGraph {
    struct Node {
        bool is_pointer = false;
        int atom = -1;   // fact landmark: atom id
        int object = -1; // pointer landmark: object index
        std::vector<int> preds; // node indices that must be accepted first
    };
    std::vector<Node> nodes;

    std::size_t size() const { return nodes.size(); }
    bool acyclic() const;
};

LandmarkGraph extract_landmark_graph(const StripsDomain& domain, const StripsInstance& inst);

std::string print_landmark_graph(const LandmarkGraph& graph, const StripsInstance& inst);

} // namespace gpsynth
