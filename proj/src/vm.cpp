#include "gpsynth/vm.hpp"

#include <cstdlib>
#include <sstream>

namespace gpsynth {

const char* fail_reason_name(FailReason r) {
    switch (r) {
    case FailReason::EndWithoutGoal: return "end-without-goal";
    case FailReason::InfiniteLoop: return "infinite-loop";
    case FailReason::StepBudget: return "step-budget";
    case FailReason::PointerFault: return "pointer-fault";
    case FailReason::Overflow: return "overflow";
    }
    return "?";
}

std::size_t Coverage::uncovered() const {
    std::size_t covered = 0;
    if (!tested_atoms.empty()) {
        for (char c : tested_atoms) covered += (c != 0);
        return tested_atoms.size() - covered;
    }
    for (char c : compared_pairs) covered += (c != 0);
    return static_cast<std::size_t>(pair_universe) - covered;
}

ExecState initial_exec_state(const GPProblem& problem, std::size_t inst) {
    ExecState s;
    if (problem.numeric)
        s.world.regs = problem.num_instances[inst].registers;
    else
        s.world.bits = problem.instances[inst].init;
    s.ptrs.assign(static_cast<std::size_t>(problem.pointers), 0);
    return s;
}

namespace {

struct StepEffect {
    bool has_res = false;
    std::int64_t res = 0;
    bool overflow = false;
};

std::int64_t numeric_action(const NumericSchema& schema, std::vector<std::int64_t>& regs,
                            const Instruction& w, const std::vector<int>& ptrs, bool* overflow) {
    auto reg = [&](int k) -> std::int64_t& {
        return regs[static_cast<std::size_t>(ptrs[static_cast<std::size_t>(w.args[static_cast<std::size_t>(k)])])];
    };
    // Checked addition: overflowing the register range aborts the run.
    auto add_to = [&](std::int64_t& dst, std::int64_t amount) {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(dst, amount, &sum) || sum > kRegisterCap ||
            sum < -kRegisterCap) {
            *overflow = true;
            return;
        }
        dst = sum;
    };
    switch (schema.op) {
    case NumOp::Add:
        add_to(reg(0), reg(1));
        return 1;
    case NumOp::CountEq: {
        // Applicable on ordered distinct pointers only, like the swaps.
        int a = ptrs[static_cast<std::size_t>(w.args[0])];
        int b = ptrs[static_cast<std::size_t>(w.args[1])];
        if (a < b && reg(0) == reg(1)) {
            add_to(reg(2), 1);
            return 1;
        }
        return 0;
    }
    case NumOp::TakeMin:
        if (reg(1) < reg(0)) {
            reg(0) = reg(1);
            return 1;
        }
        return 0;
    case NumOp::SwapLt: {
        int a = ptrs[static_cast<std::size_t>(w.args[0])];
        int b = ptrs[static_cast<std::size_t>(w.args[1])];
        if (a < b) {
            std::swap(regs[static_cast<std::size_t>(a)], regs[static_cast<std::size_t>(b)]);
            return 1;
        }
        return 0;
    }
    case NumOp::CSwapLt: {
        int a = ptrs[static_cast<std::size_t>(w.args[0])];
        int b = ptrs[static_cast<std::size_t>(w.args[1])];
        if (a < b && regs[static_cast<std::size_t>(a)] > regs[static_cast<std::size_t>(b)]) {
            std::swap(regs[static_cast<std::size_t>(a)], regs[static_cast<std::size_t>(b)]);
            return 1;
        }
        return 0;
    }
    }
    return 0;
}

StepEffect step_impl(const PlanningProgram& program, ExecState& exec, const GPProblem& problem,
                     std::size_t inst, Coverage* coverage) {
    const Instruction& w = program.lines[static_cast<std::size_t>(exec.line)];
    const int bound = problem.pointer_domain_size(inst);
    StepEffect eff;
    eff.has_res = true;

    switch (w.op) {
    case Op::Action: {
        if (problem.numeric) {
            const NumericSchema& schema =
                problem.num_domain->schemas[static_cast<std::size_t>(w.id)];
            eff.res = numeric_action(schema, exec.world.regs, w, exec.ptrs, &eff.overflow);
        } else {
            const StripsInstance& si = problem.instances[inst];
            int tuple[4];
            for (int k = 0; k < w.nargs; ++k)
                tuple[k] = exec.ptrs[static_cast<std::size_t>(w.args[static_cast<std::size_t>(k)])];
            const GroundAction& ga = si.ground(w.id, tuple, w.nargs);
            if (applicable(exec.world.bits, ga)) {
                exec.world.bits = apply(exec.world.bits, ga);
                eff.res = 1;
            } else {
                eff.res = 0; // s' = s
            }
        }
        ++exec.line;
        break;
    }
    case Op::Inc: {
        int& z = exec.ptrs[static_cast<std::size_t>(w.args[0])];
        eff.res = (z < bound - 1) ? (++z, 1) : 0;
        ++exec.line;
        break;
    }
    case Op::Dec: {
        int& z = exec.ptrs[static_cast<std::size_t>(w.args[0])];
        eff.res = (z > 0) ? (--z, 1) : 0;
        ++exec.line;
        break;
    }
    case Op::Set: {
        exec.ptrs[static_cast<std::size_t>(w.args[1])] = exec.ptrs[static_cast<std::size_t>(w.args[0])];
        eff.res = exec.ptrs[static_cast<std::size_t>(w.args[1])];
        ++exec.line;
        break;
    }
    case Op::Clear: {
        exec.ptrs[static_cast<std::size_t>(w.args[0])] = 0;
        eff.res = 0;
        ++exec.line;
        break;
    }
    case Op::Test: {
        const StripsInstance& si = problem.instances[inst];
        std::vector<int> objs;
        objs.reserve(static_cast<std::size_t>(w.nargs));
        for (int k = 0; k < w.nargs; ++k)
            objs.push_back(exec.ptrs[static_cast<std::size_t>(w.args[static_cast<std::size_t>(k)])]);
        int atom = si.atom_id(w.id, objs);
        // Type-inconsistent instantiations read as false.
        eff.res = (atom >= 0 && exec.world.bits.test(static_cast<std::size_t>(atom))) ? 1 : 0;
        if (coverage && atom >= 0) coverage->tested_atoms[static_cast<std::size_t>(atom)] = 1;
        ++exec.line;
        break;
    }
    case Op::Cmp:
    case Op::CmpVar: {
        int a = exec.ptrs[static_cast<std::size_t>(w.args[0])];
        int b = exec.ptrs[static_cast<std::size_t>(w.args[1])];
        if (w.op == Op::Cmp)
            eff.res = a - b;
        else
            eff.res = exec.world.regs[static_cast<std::size_t>(a)] -
                      exec.world.regs[static_cast<std::size_t>(b)];
        if (coverage && a != b) {
            int lo = std::min(a, b), hi = std::max(a, b);
            coverage->compared_pairs[static_cast<std::size_t>(lo) * static_cast<std::size_t>(bound) +
                                     static_cast<std::size_t>(hi)] = 1;
        }
        ++exec.line;
        break;
    }
    case Op::Goto: {
        eff.has_res = false; // flags unchanged
        exec.line = cond_holds(w.cond, exec.yz, exec.yc) ? w.id : exec.line + 1;
        break;
    }
    case Op::Empty:
    case Op::End:
        std::abort(); // contract violation, run() guards these
    }

    if (eff.has_res) {
        exec.yz = (eff.res == 0);
        exec.yc = (eff.res > 0);
    }
    ++exec.steps;
    return eff;
}

} // namespace

void step(const PlanningProgram& program, ExecState& exec, const GPProblem& problem,
          std::size_t inst) {
    step_impl(program, exec, problem, inst, nullptr);
}

RunOutcome run(const PlanningProgram& program, const GPProblem& problem, std::size_t inst,
               std::int64_t budget, StateObserver* observer, Coverage* coverage,
               std::string* trace) {
    if (coverage) {
        if (problem.numeric)
            coverage->init_numeric(static_cast<int>(problem.num_instances[inst].registers.size()));
        else
            coverage->init_strips(problem.instances[inst].atoms.size());
    }

    ExecState exec = initial_exec_state(problem, inst);
    if (observer) observer->observe(exec);

    // Brent cycle detection over exact machine configurations: execution is
    // deterministic, so revisiting a configuration proves divergence.
    ExecState anchor = exec;
    std::int64_t power = 1, lam = 0;

    RunOutcome out;
    std::ostringstream tr;
    while (true) {
        if (exec.line >= program.capacity() ||
            !program.lines[static_cast<std::size_t>(exec.line)].defined()) {
            out.kind = RunOutcome::Kind::UndefinedLine;
            out.undefined_line = exec.line;
            break;
        }
        const Instruction& w = program.lines[static_cast<std::size_t>(exec.line)];
        if (w.op == Op::End) {
            bool ok = problem.numeric
                          ? goal_satisfied_numeric(exec.world.regs, problem.num_instances[inst])
                          : goal_satisfied_strips(exec.world.bits, problem.instances[inst]);
            out.kind = ok ? RunOutcome::Kind::Solved : RunOutcome::Kind::Failed;
            out.reason = FailReason::EndWithoutGoal;
            break;
        }
        if (exec.steps >= budget) {
            out.kind = RunOutcome::Kind::Failed;
            out.reason = FailReason::StepBudget;
            break;
        }

        int at = exec.line;
        StepEffect eff = step_impl(program, exec, problem, inst, coverage);
        if (trace) {
            tr << at << " | " << print_instruction(program.lines[static_cast<std::size_t>(at)], problem)
               << " | " << (eff.has_res ? std::to_string(eff.res) : std::string("-")) << " | "
               << exec.yz << " " << exec.yc << " |";
            for (int p : exec.ptrs) tr << " " << p;
            tr << "\n";
        }
        if (observer) observer->observe(exec);
        if (eff.overflow) {
            out.kind = RunOutcome::Kind::Failed;
            out.reason = FailReason::Overflow;
            break;
        }
        if (exec.same_configuration(anchor)) {
            out.kind = RunOutcome::Kind::Failed;
            out.reason = FailReason::InfiniteLoop;
            break;
        }
        if (++lam == power) {
            anchor = exec;
            power *= 2;
            lam = 0;
        }
    }
    out.last = std::move(exec);
    if (trace) *trace = tr.str();
    return out;
}

std::vector<RunOutcome> validate(const PlanningProgram& program, const GPProblem& problem,
                                 std::vector<std::size_t> subset, std::int64_t budget) {
    if (subset.empty())
        for (std::size_t i = 0; i < problem.instance_count(); ++i) subset.push_back(i);
    std::vector<RunOutcome> out;
    out.reserve(subset.size());
    for (std::size_t idx : subset) out.push_back(run(program, problem, idx, budget));
    return out;
}

bool all_solved(const std::vector<RunOutcome>& outcomes) {
    for (const auto& o : outcomes)
        if (o.kind != RunOutcome::Kind::Solved) return false;
    return !outcomes.empty();
}

} // namespace gpsynth
