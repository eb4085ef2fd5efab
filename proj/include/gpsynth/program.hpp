#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gpsynth/model.hpp"

namespace gpsynth {

enum class Op : std::uint8_t {
    Empty,   // undefined line
    Action,  // planning action over pointers
    Inc,
    Dec,
    Set,   // set(z1,z2): z2 := z1
    Clear, // clear(z1): z1 := 0
    Test,  // test_<pred>(z...): STRIPS only
    Cmp,   // cmp(z1,z2): res = z1 - z2, numeric only
    CmpVar, // cmp_reg(z1,z2): res = v[z1] - v[z2], numeric only
    Goto,
    End,
};

// Flag valuations a goto may branch on, read off (y_z, y_c).
// STRIPS programs use Eq / Ne only (Y = {y_z}).
enum class Cond : std::uint8_t { Eq, Ne, Gt, Le, Lt, Ge };

inline bool cond_holds(Cond c, bool yz, bool yc) {
    switch (c) {
    case Cond::Eq: return yz;
    case Cond::Ne: return !yz;
    case Cond::Gt: return yc;
    case Cond::Le: return !yc;
    case Cond::Lt: return !yz && !yc;
    case Cond::Ge: return yz || yc;
    }
    return false;
}

struct Instruction {
    Op op = Op::Empty;
    std::int16_t id = -1;  // schema (Action), predicate (Test), target line (Goto)
    std::int8_t nargs = 0;
    std::array<std::int8_t, 4> args{}; // pointer indices
    Cond cond = Cond::Eq;

    bool operator==(const Instruction&) const = default;
    bool defined() const { return op != Op::Empty; }
};

// Fixed-capacity instruction sequence; Empty slots are not yet programmed.
struct PlanningProgram {
    std::vector<Instruction> lines;

    explicit PlanningProgram(int n = 0) : lines(static_cast<std::size_t>(n)) {}
    int capacity() const { return static_cast<int>(lines.size()); }
    int defined_count() const {
        int c = 0;
        for (const auto& w : lines) c += w.defined();
        return c;
    }
    bool operator==(const PlanningProgram&) const = default;
};

Instruction make_action(int schema, const std::vector<int>& ptrs);
Instruction make_ram(Op op, int z1, int z2 = -1);
Instruction make_test(int predicate, const std::vector<int>& ptrs);
Instruction make_goto(int target, Cond cond);
Instruction make_end();

// Textual program format: one "<line>. <instr>" per line.
PlanningProgram parse_program(const std::string& text, const GPProblem& problem);
std::string print_program(const PlanningProgram& program, const GPProblem& problem);
std::string print_instruction(const Instruction& w, const GPProblem& problem);

} // namespace gpsynth
