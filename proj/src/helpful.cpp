#include "gpsynth/helpful.hpp"

#include <sstream>

namespace gpsynth {

namespace {

std::set<std::string> lift_schema_atoms(const StripsDomain& domain,
                                        const std::vector<SchemaAtom>& atoms) {
    std::set<std::string> out;
    for (const auto& a : atoms)
        out.insert(domain.predicates[static_cast<std::size_t>(a.predicate)].name);
    return out;
}

bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
    for (const auto& x : a)
        if (b.count(x)) return true;
    return false;
}

} // namespace

HelpfulActionSet lifted_helpful_actions(const StripsDomain& domain, const StripsInstance& inst) {
    HelpfulActionSet out;

    std::set<std::string> lifted_init;
    for (std::size_t i = 0; i < inst.atoms.size(); ++i)
        if (inst.init.test(i))
            lifted_init.insert(
                domain.predicates[static_cast<std::size_t>(inst.atoms[i].predicate)].name);

    // U_0: lifted unachieved goal predicates.
    std::set<std::string> u;
    for (int g : inst.goal)
        if (!inst.init.test(static_cast<std::size_t>(g)))
            u.insert(domain.predicates[static_cast<std::size_t>(
                                           inst.atoms[static_cast<std::size_t>(g)].predicate)]
                         .name);

    // A schema supports at most one layer: once its added predicates meet
    // some U_j it never re-enters a later S_i.
    std::set<std::string> used;
    std::vector<std::set<std::string>> prior_u;

    while (true) {
        HelpfulActionSet::Layer layer;
        layer.unachieved = u;

        std::set<std::string> next;
        bool any = false;
        for (const auto& schema : domain.schemas) {
            if (used.count(schema.name)) continue;
            std::set<std::string> eff = lift_schema_atoms(domain, schema.add);
            if (!intersects(eff, u)) continue;
            bool earlier = false;
            for (const auto& pu : prior_u)
                if (intersects(eff, pu)) { earlier = true; break; }
            if (earlier) continue;

            layer.supporters.insert(schema.name);
            out.schemas.insert(schema.name);
            any = true;

            // Regression: U_i plus the schema's unsatisfied lifted
            // preconditions, minus what it achieves.
            std::set<std::string> regressed = u;
            for (const auto& p : lift_schema_atoms(domain, schema.pre))
                if (!lifted_init.count(p)) regressed.insert(p);
            for (const auto& e : eff) regressed.erase(e);
            next.insert(regressed.begin(), regressed.end());
        }
        for (const auto& s : layer.supporters) used.insert(s);
        out.layers.push_back(std::move(layer));

        if (!any) next = u; // no supporters: the layer cannot change
        if (next == u) break;
        if (out.layers.size() > 2 * domain.predicates.size() + 4) break; // termination guard
        prior_u.push_back(u);
        u = std::move(next);
    }
    return out;
}

HelpfulActionSet lifted_helpful_actions(const GPProblem& problem, std::vector<std::size_t> subset) {
    if (subset.empty())
        for (std::size_t i = 0; i < problem.instances.size(); ++i) subset.push_back(i);
    HelpfulActionSet out;
    for (std::size_t idx : subset) {
        HelpfulActionSet h = lifted_helpful_actions(problem.domain, problem.instances[idx]);
        out.schemas.insert(h.schemas.begin(), h.schemas.end());
        if (out.layers.empty()) out.layers = std::move(h.layers);
    }
    return out;
}

std::string print_helpful_actions(const HelpfulActionSet& h) {
    std::ostringstream out;
    out << "H:";
    for (const auto& s : h.schemas) out << " " << s;
    out << "\n";
    for (std::size_t i = 0; i < h.layers.size(); ++i) {
        out << "U" << i << ":";
        for (const auto& p : h.layers[i].unachieved) out << " " << p;
        out << "  S" << i << ":";
        for (const auto& s : h.layers[i].supporters) out << " " << s;
        out << "\n";
    }
    return out.str();
}

} // namespace gpsynth
