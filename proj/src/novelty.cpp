#include "gpsynth/novelty.hpp"

namespace gpsynth {

std::optional<Instruction> action_identity(const Instruction& w) {
    switch (w.op) {
    case Op::Action: {
        Instruction id = w;
        id.nargs = 0;
        id.args = {};
        return id;
    }
    case Op::Inc:
    case Op::Dec:
    case Op::Set:
    case Op::Clear:
    case Op::Test:
    case Op::Cmp:
    case Op::CmpVar:
        return w;
    default:
        return std::nullopt;
    }
}

int novelty_rank(const Instruction& action, const PlanningProgram& program) {
    auto id = action_identity(action);
    int rank = 1;
    if (!id) return rank;
    for (const Instruction& w : program.lines) {
        if (!w.defined()) continue;
        auto wid = action_identity(w);
        if (wid && *wid == *id) ++rank;
    }
    return rank;
}

bool should_prune(const PlanningProgram& program, const Instruction& candidate, int v) {
    if (!action_identity(candidate)) return false; // goto and end are never pruned
    return novelty_rank(candidate, program) > v;
}

} // namespace gpsynth
