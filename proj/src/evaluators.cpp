#include "gpsynth/evaluators.hpp"

#include <algorithm>
#include <cmath>

namespace gpsynth {

std::optional<EvalId> eval_id_from_name(const std::string& name) {
    if (name == "f1") return EvalId::F1;
    if (name == "h5") return EvalId::H5;
    if (name == "flm") return EvalId::Flm;
    if (name == "fha") return EvalId::Fha;
    if (name == "fln") return EvalId::Fln;
    if (name == "fcn") return EvalId::Fcn;
    return std::nullopt;
}

const char* eval_name(EvalId id) {
    switch (id) {
    case EvalId::F1: return "f1";
    case EvalId::H5: return "h5";
    case EvalId::Flm: return "flm";
    case EvalId::Fha: return "fha";
    case EvalId::Fln: return "fln";
    case EvalId::Fcn: return "fcn";
    }
    return "?";
}

bool EvalContext::needs(EvalId id) const {
    for (EvalId e : stack)
        if (e == id) return true;
    return false;
}

void EvalContext::prepare(const GPProblem& prob, std::vector<std::size_t> active_set) {
    problem = &prob;
    active = std::move(active_set);
    stack.clear();
    for (const auto& name : prob.evaluator_names)
        if (auto id = eval_id_from_name(name)) stack.push_back(*id);
    graphs.clear();
    helpful = HelpfulActionSet{};
    if (!prob.numeric && needs(EvalId::Flm))
        for (std::size_t idx : active)
            graphs.push_back(extract_landmark_graph(prob.domain, prob.instances[idx]));
    if (!prob.numeric && needs(EvalId::Fha))
        helpful = lifted_helpful_actions(prob, active);
}

int f1(const PlanningProgram& program) {
    int c = 0;
    for (const auto& w : program.lines) c += w.op == Op::Goto;
    return c;
}

int f_ln(const PlanningProgram& program) {
    int c = 0;
    for (const auto& w : program.lines)
        c += w.defined() && w.op != Op::Goto && w.op != Op::Test && w.op != Op::Cmp &&
             w.op != Op::CmpVar;
    return c;
}

int f_ha(const PlanningProgram& program, const GPProblem& problem, const HelpfulActionSet& h) {
    int c = 0;
    for (const auto& w : program.lines)
        if (w.op == Op::Action &&
            !h.contains(problem.domain.schemas[static_cast<std::size_t>(w.id)].name))
            ++c;
    return c;
}

double h5_distance(const RunOutcome& outcome, const GPProblem& problem, std::size_t inst) {
    double sq = 0.0;
    if (problem.numeric) {
        const auto& ni = problem.num_instances[inst];
        for (const auto& [reg, target] : ni.goal) {
            double d = static_cast<double>(outcome.last.world.regs[static_cast<std::size_t>(reg)] -
                                           target);
            sq += d * d;
        }
    } else {
        const auto& si = problem.instances[inst];
        for (int g : si.goal)
            if (!outcome.last.world.bits.test(static_cast<std::size_t>(g))) sq += 1.0;
    }
    return std::sqrt(sq);
}

namespace {

// Marks landmark-graph nodes accepted along an execution. A pointer node is
// accepted once any pointer holds its object; a fact node once its atom holds
// and all its predecessors are accepted. Acceptance is never revoked.
class LandmarkObserver : public StateObserver {
public:
    LandmarkObserver(const LandmarkGraph& graph) : graph_(graph), accepted_(graph.size(), 0) {}

    void observe(const ExecState& s) override {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < graph_.nodes.size(); ++i) {
                if (accepted_[i]) continue;
                const auto& n = graph_.nodes[i];
                bool preds_ok = true;
                for (int p : n.preds)
                    if (!accepted_[static_cast<std::size_t>(p)]) { preds_ok = false; break; }
                if (!preds_ok) continue;
                bool holds;
                if (n.is_pointer) {
                    holds = false;
                    for (int ptr : s.ptrs)
                        if (ptr == n.object) { holds = true; break; }
                } else {
                    holds = s.world.bits.test(static_cast<std::size_t>(n.atom));
                }
                if (holds) {
                    accepted_[i] = 1;
                    changed = true;
                }
            }
        }
    }

    std::size_t unaccepted() const {
        std::size_t c = 0;
        for (char a : accepted_) c += !a;
        return c;
    }

private:
    const LandmarkGraph& graph_;
    std::vector<char> accepted_;
};

} // namespace

std::size_t count_unaccepted_landmarks(const PlanningProgram& program, const GPProblem& problem,
                                       std::size_t inst, const LandmarkGraph& graph,
                                       std::int64_t budget) {
    LandmarkObserver obs(graph);
    run(program, problem, inst, budget, &obs);
    return obs.unaccepted();
}

InstanceRunData evaluate_run(const PlanningProgram& program, const EvalContext& ctx,
                             std::size_t pos) {
    const GPProblem& prob = *ctx.problem;
    std::size_t inst = ctx.active[pos];
    InstanceRunData data;

    std::optional<LandmarkObserver> lm;
    StateObserver* obs = nullptr;
    if (!prob.numeric && ctx.needs(EvalId::Flm)) {
        lm.emplace(ctx.graphs[pos]);
        obs = &*lm;
    }
    Coverage cov;
    Coverage* covp = nullptr;
    if (ctx.needs(EvalId::Fcn)) {
        if (prob.numeric)
            cov.init_numeric(prob.pointer_domain_size(inst));
        else
            cov.init_strips(prob.instances[inst].atoms.size());
        covp = &cov;
    }

    data.outcome = run(program, prob, inst, ctx.budget, obs, covp);
    if (lm) data.unaccepted_landmarks = lm->unaccepted();
    if (covp) data.uncovered = cov.uncovered();
    return data;
}

std::vector<double> evaluate(const PlanningProgram& program, const EvalContext& ctx,
                             const std::vector<InstanceRunData>& runs) {
    std::vector<double> out;
    out.reserve(ctx.stack.size());
    for (EvalId id : ctx.stack) {
        double v = 0.0;
        switch (id) {
        case EvalId::F1: v = f1(program); break;
        case EvalId::Fln: v = f_ln(program); break;
        case EvalId::Fha: v = f_ha(program, *ctx.problem, ctx.helpful); break;
        case EvalId::H5:
            for (std::size_t p = 0; p < runs.size(); ++p)
                v += h5_distance(runs[p].outcome, *ctx.problem, ctx.active[p]);
            break;
        case EvalId::Flm:
            for (const auto& r : runs) v += static_cast<double>(r.unaccepted_landmarks);
            break;
        case EvalId::Fcn:
            for (const auto& r : runs) v += static_cast<double>(r.uncovered);
            break;
        }
        out.push_back(v);
    }
    return out;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace gpsynth
