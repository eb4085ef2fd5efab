#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpsynth/program.hpp"

namespace gpsynth {

struct WorldState {
    Bitset bits;                      // STRIPS
    std::vector<std::int64_t> regs;   // numeric

    bool operator==(const WorldState&) const = default;
    std::size_t hash() const {
        std::size_t h = bits.hash();
        for (auto r : regs) hash_combine(h, static_cast<std::size_t>(r) * 0x9e3779b97f4a7c15ull);
        return h;
    }
};

// World state, program line, pointer values and FLAGS; the machine state a
// program execution steps through.
struct ExecState {
    WorldState world;
    int line = 0;
    std::vector<int> ptrs;
    bool yz = false, yc = false;
    std::int64_t steps = 0; // not part of identity

    bool same_configuration(const ExecState& o) const {
        return line == o.line && yz == o.yz && yc == o.yc && ptrs == o.ptrs && world == o.world;
    }
    std::size_t configuration_hash() const {
        std::size_t h = world.hash();
        hash_combine(h, static_cast<std::size_t>(line));
        hash_combine(h, (static_cast<std::size_t>(yz) << 1) | static_cast<std::size_t>(yc));
        for (int p : ptrs) hash_combine(h, static_cast<std::size_t>(p));
        return h;
    }
};

enum class FailReason { EndWithoutGoal, InfiniteLoop, StepBudget, PointerFault, Overflow };

const char* fail_reason_name(FailReason r);

// What a run touched with test / cmp; feeds the coverage evaluator.
struct Coverage {
    std::vector<char> tested_atoms;          // STRIPS, indexed by atom id
    std::vector<char> compared_pairs;        // numeric, index i*m+j for i<j
    int pair_universe = 0;

    void init_strips(std::size_t natoms) { tested_atoms.assign(natoms, 0); }
    void init_numeric(int nregs) {
        compared_pairs.assign(static_cast<std::size_t>(nregs) * nregs, 0);
        pair_universe = nregs * (nregs - 1) / 2;
    }
    std::size_t uncovered() const;
};

struct RunOutcome {
    enum class Kind { Solved, Failed, UndefinedLine };
    Kind kind = Kind::Failed;
    FailReason reason = FailReason::EndWithoutGoal;
    int undefined_line = -1;
    ExecState last; // last reached program state in every outcome
};

// Called on the initial state and after every executed step.
struct StateObserver {
    virtual ~StateObserver() = default;
    virtual void observe(const ExecState& s) = 0;
};

ExecState initial_exec_state(const GPProblem& problem, std::size_t inst);

// Single instruction semantics; the line must hold a defined, non-End
// instruction. Mutates exec in place.
void step(const PlanningProgram& program, ExecState& exec, const GPProblem& problem,
          std::size_t inst);

RunOutcome run(const PlanningProgram& program, const GPProblem& problem, std::size_t inst,
               std::int64_t budget = 1'000'000, StateObserver* observer = nullptr,
               Coverage* coverage = nullptr, std::string* trace = nullptr);

// Runs every instance in the subset (all instances when empty).
std::vector<RunOutcome> validate(const PlanningProgram& program, const GPProblem& problem,
                                 std::vector<std::size_t> subset = {},
                                 std::int64_t budget = 1'000'000);

bool all_solved(const std::vector<RunOutcome>& outcomes);

} // namespace gpsynth
