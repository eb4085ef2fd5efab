#include "gpsynth/landmarks.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gpsynth {

bool LandmarkGraph::acyclic() const {
    std::vector<int> state(nodes.size(), 0); // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<int, std::size_t>> stack;
    for (std::size_t root = 0; root < nodes.size(); ++root) {
        if (state[root]) continue;
        stack.push_back({static_cast<int>(root), 0});
        state[root] = 1;
        while (!stack.empty()) {
            auto& [n, i] = stack.back();
            const auto& preds = nodes[static_cast<std::size_t>(n)].preds;
            if (i == preds.size()) {
                state[static_cast<std::size_t>(n)] = 2;
                stack.pop_back();
                continue;
            }
            int next = preds[i++];
            if (state[static_cast<std::size_t>(next)] == 1) return false;
            if (state[static_cast<std::size_t>(next)] == 0) {
                state[static_cast<std::size_t>(next)] = 1;
                stack.push_back({next, 0});
            }
        }
    }
    return true;
}

namespace {

// Can `from` be reached from `to` along pred edges? Used to keep derived
// orderings acyclic.
bool reaches(const LandmarkGraph& g, int from, int to) {
    if (from == to) return true;
    std::vector<int> stack{from};
    std::vector<char> seen(g.nodes.size(), 0);
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        for (int p : g.nodes[static_cast<std::size_t>(n)].preds) {
            if (p == to) return true;
            if (!seen[static_cast<std::size_t>(p)]) {
                seen[static_cast<std::size_t>(p)] = 1;
                stack.push_back(p);
            }
        }
    }
    return false;
}

} // namespace

LandmarkGraph extract_landmark_graph(const StripsDomain& domain, const StripsInstance& inst) {
    (void)domain;
    // Delete-relaxed reachability fixpoint; records which ground actions are
    // reachable (these are the only admissible achievers).
    Bitset reachable = inst.init;
    std::vector<const GroundAction*> actions;
    inst.for_each_ground_action([&](const GroundAction& ga) { actions.push_back(&ga); });
    std::vector<char> fired(actions.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < actions.size(); ++i) {
            if (fired[i] || !reachable.contains_all(actions[i]->pre)) continue;
            fired[i] = 1;
            for (int a : actions[i]->add) {
                if (!reachable.test(static_cast<std::size_t>(a))) {
                    reachable.set(static_cast<std::size_t>(a));
                    changed = true;
                }
            }
        }
    }

    LandmarkGraph graph;
    std::vector<int> fact_node(inst.atoms.size(), -1);
    std::deque<int> queue; // atoms pending backchaining

    auto add_fact = [&](int atom) {
        if (fact_node[static_cast<std::size_t>(atom)] >= 0)
            return fact_node[static_cast<std::size_t>(atom)];
        LandmarkGraph::Node n;
        n.atom = atom;
        fact_node[static_cast<std::size_t>(atom)] = static_cast<int>(graph.nodes.size());
        graph.nodes.push_back(std::move(n));
        if (!inst.init.test(static_cast<std::size_t>(atom)))
            queue.push_back(atom);
        return fact_node[static_cast<std::size_t>(atom)];
    };

    for (int g : inst.goal) add_fact(g);

    // Backchaining: the intersection of the preconditions of every reachable
    // achiever of a landmark is itself made of landmarks.
    while (!queue.empty()) {
        int l = queue.front();
        queue.pop_front();
        std::vector<int> intersection;
        bool first = true;
        for (std::size_t i = 0; i < actions.size(); ++i) {
            if (!fired[i]) continue;
            const GroundAction& ga = *actions[i];
            if (std::find(ga.add.begin(), ga.add.end(), l) == ga.add.end()) continue;
            if (first) {
                intersection = ga.pre;
                std::sort(intersection.begin(), intersection.end());
                first = false;
            } else {
                std::vector<int> keep;
                for (int p : ga.pre)
                    if (std::binary_search(intersection.begin(), intersection.end(), p))
                        keep.push_back(p);
                std::sort(keep.begin(), keep.end());
                intersection = std::move(keep);
            }
            if (intersection.empty()) break;
        }
        if (first) continue; // no reachable achiever; nothing to derive
        int lnode = fact_node[static_cast<std::size_t>(l)];
        for (int p : intersection) {
            if (inst.init.test(static_cast<std::size_t>(p))) continue; // trivially true
            int pnode = add_fact(p);
            auto& preds = graph.nodes[static_cast<std::size_t>(lnode)].preds;
            if (std::find(preds.begin(), preds.end(), pnode) == preds.end() &&
                !reaches(graph, pnode, lnode))
                preds.push_back(pnode);
        }
    }

    // Pointer landmarks: one node per distinct object mentioned by any fact
    // landmark, preceding every fact landmark that mentions it.
    std::vector<int> ptr_node(inst.objects.size(), -1);
    std::size_t nfacts = graph.nodes.size();
    for (std::size_t f = 0; f < nfacts; ++f) {
        const GroundAtom& atom = inst.atoms[static_cast<std::size_t>(graph.nodes[f].atom)];
        for (int obj : atom.objects) {
            if (ptr_node[static_cast<std::size_t>(obj)] < 0) {
                LandmarkGraph::Node n;
                n.is_pointer = true;
                n.object = obj;
                ptr_node[static_cast<std::size_t>(obj)] = static_cast<int>(graph.nodes.size());
                graph.nodes.push_back(std::move(n));
            }
            int pn = ptr_node[static_cast<std::size_t>(obj)];
            auto& preds = graph.nodes[f].preds;
            if (std::find(preds.begin(), preds.end(), pn) == preds.end()) preds.push_back(pn);
        }
    }
    return graph;
}

std::string print_landmark_graph(const LandmarkGraph& graph, const StripsInstance& inst) {
    std::ostringstream out;
    for (const auto& n : graph.nodes) {
        if (n.is_pointer)
            out << "ptr(" << inst.objects[static_cast<std::size_t>(n.object)] << ")";
        else
            out << "fact " << inst.atom_name(n.atom);
        if (!n.preds.empty()) {
            out << " <-";
            for (int p : n.preds) {
                const auto& pn = graph.nodes[static_cast<std::size_t>(p)];
                if (pn.is_pointer)
                    out << " ptr(" << inst.objects[static_cast<std::size_t>(pn.object)] << ")";
                else
                    out << " " << inst.atom_name(pn.atom);
            }
        }
        out << "\n";
    }
    return out.str();
}

} // namespace gpsynth
