#pragma once

#include <optional>

#include "gpsynth/program.hpp"

namespace gpsynth {

// Identity under which instructions are counted for the novelty rank:
// planning actions at schema level (pointer arguments ignored), RAM actions
// with their exact arguments. Goto and end carry no identity.
std::optional<Instruction> action_identity(const Instruction& w);

// 1 + number of appearances of the action among the program's defined lines.
int novelty_rank(const Instruction& action, const PlanningProgram& program);

// True when writing the candidate into the current line would exceed the bound.
bool should_prune(const PlanningProgram& program, const Instruction& candidate, int v);

} // namespace gpsynth
