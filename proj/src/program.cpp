#include "gpsynth/program.hpp"

#include <sstream>
#include <stdexcept>

#include "gpsynth/util.hpp"

namespace gpsynth {

Instruction make_action(int schema, const std::vector<int>& ptrs) {
    Instruction w;
    w.op = Op::Action;
    w.id = static_cast<std::int16_t>(schema);
    w.nargs = static_cast<std::int8_t>(ptrs.size());
    for (std::size_t i = 0; i < ptrs.size(); ++i) w.args[i] = static_cast<std::int8_t>(ptrs[i]);
    return w;
}

Instruction make_ram(Op op, int z1, int z2) {
    Instruction w;
    w.op = op;
    w.args[0] = static_cast<std::int8_t>(z1);
    w.nargs = 1;
    if (z2 >= 0) {
        w.args[1] = static_cast<std::int8_t>(z2);
        w.nargs = 2;
    }
    return w;
}

Instruction make_test(int predicate, const std::vector<int>& ptrs) {
    Instruction w;
    w.op = Op::Test;
    w.id = static_cast<std::int16_t>(predicate);
    w.nargs = static_cast<std::int8_t>(ptrs.size());
    for (std::size_t i = 0; i < ptrs.size(); ++i) w.args[i] = static_cast<std::int8_t>(ptrs[i]);
    return w;
}

Instruction make_goto(int target, Cond cond) {
    Instruction w;
    w.op = Op::Goto;
    w.id = static_cast<std::int16_t>(target);
    w.cond = cond;
    return w;
}

Instruction make_end() {
    Instruction w;
    w.op = Op::End;
    return w;
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("program line " + std::to_string(line) + ": " + msg);
}

std::string cond_text(Cond c, bool numeric) {
    if (!numeric) return c == Cond::Eq ? "y_z=1" : "y_z=0";
    switch (c) {
    case Cond::Eq: return "==0";
    case Cond::Ne: return "!=0";
    case Cond::Gt: return ">0";
    case Cond::Le: return "<=0";
    case Cond::Lt: return "<0";
    case Cond::Ge: return ">=0";
    }
    return "?";
}

Cond parse_cond(const std::string& tok, bool numeric, int lineno) {
    if (tok == "y_z=1" || tok == "==0") return Cond::Eq;
    if (tok == "y_z=0" || tok == "!=0") return Cond::Ne;
    if (numeric) {
        if (tok == ">0") return Cond::Gt;
        if (tok == "<=0") return Cond::Le;
        if (tok == "<0") return Cond::Lt;
        if (tok == ">=0") return Cond::Ge;
    }
    fail(lineno, "unknown goto condition '" + tok + "'");
}

int parse_pointer(const std::string& tok, int nz, int lineno) {
    if (tok.size() < 2 || tok[0] != 'z') fail(lineno, "expected pointer, got '" + tok + "'");
    int idx = 0;
    try {
        idx = std::stoi(tok.substr(1));
    } catch (...) {
        fail(lineno, "expected pointer, got '" + tok + "'");
    }
    if (idx < 1 || idx > nz)
        fail(lineno, "pointer " + tok + " out of range (|Z|=" + std::to_string(nz) + ")");
    return idx - 1;
}

} // namespace

PlanningProgram parse_program(const std::string& text, const GPProblem& problem) {
    PlanningProgram program(problem.lines);
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;

        auto dot = line.find('.');
        if (dot == std::string::npos) fail(lineno, "expected '<line>. <instr>'");
        int slot = 0;
        try {
            slot = std::stoi(line.substr(0, dot));
        } catch (...) {
            fail(lineno, "bad line number '" + line.substr(0, dot) + "'");
        }
        if (slot < 0 || slot >= problem.lines)
            fail(lineno, "line " + std::to_string(slot) + " outside program of " +
                             std::to_string(problem.lines) + " lines");
        if (program.lines[static_cast<std::size_t>(slot)].defined())
            fail(lineno, "line " + std::to_string(slot) + " defined twice");

        std::string body = trim(line.substr(dot + 1));
        std::string head = body;
        std::vector<std::string> argtoks;
        auto paren = body.find('(');
        if (paren != std::string::npos) {
            if (body.back() != ')') fail(lineno, "missing ')'");
            head = trim(body.substr(0, paren));
            argtoks = split(body.substr(paren + 1, body.size() - paren - 2), ',');
        }

        Instruction w;
        auto want_args = [&](std::size_t k) {
            if (argtoks.size() != k)
                fail(lineno, head + " takes " + std::to_string(k) + " argument(s)");
        };
        if (head == "end") {
            want_args(0);
            w = make_end();
        } else if (head == "goto") {
            want_args(2);
            int target = 0;
            try {
                target = std::stoi(argtoks[0]);
            } catch (...) {
                fail(lineno, "bad goto target '" + argtoks[0] + "'");
            }
            if (target < 0 || target >= problem.lines)
                fail(lineno, "goto target " + std::to_string(target) + " outside program of " +
                                 std::to_string(problem.lines) + " lines");
            w = make_goto(target, parse_cond(argtoks[1], problem.numeric, lineno));
        } else if (head == "inc" || head == "dec" || head == "clear") {
            want_args(1);
            Op op = head == "inc" ? Op::Inc : head == "dec" ? Op::Dec : Op::Clear;
            w = make_ram(op, parse_pointer(argtoks[0], problem.pointers, lineno));
        } else if (head == "set") {
            want_args(2);
            w = make_ram(Op::Set, parse_pointer(argtoks[0], problem.pointers, lineno),
                         parse_pointer(argtoks[1], problem.pointers, lineno));
        } else if (head == "cmp" || head == "cmp_reg") {
            if (!problem.numeric) fail(lineno, head + " is only available in numeric domains");
            want_args(2);
            w = make_ram(head == "cmp" ? Op::Cmp : Op::CmpVar,
                         parse_pointer(argtoks[0], problem.pointers, lineno),
                         parse_pointer(argtoks[1], problem.pointers, lineno));
        } else if (head.rfind("test_", 0) == 0) {
            if (problem.numeric) fail(lineno, "test is only available in STRIPS domains");
            std::string pname = head.substr(5);
            int pred = problem.domain.predicate_index(pname);
            if (pred < 0) fail(lineno, "unknown predicate '" + pname + "'");
            const Predicate& p = problem.domain.predicates[static_cast<std::size_t>(pred)];
            want_args(static_cast<std::size_t>(p.arity()));
            std::vector<int> ptrs;
            for (const auto& t : argtoks) ptrs.push_back(parse_pointer(t, problem.pointers, lineno));
            w = make_test(pred, ptrs);
        } else {
            int schema = problem.numeric ? problem.num_domain->schema_index(head)
                                         : problem.domain.schema_index(head);
            if (schema < 0) fail(lineno, "unknown action '" + head + "'");
            int arity = problem.numeric
                            ? problem.num_domain->schemas[static_cast<std::size_t>(schema)].arity
                            : problem.domain.schemas[static_cast<std::size_t>(schema)].arity();
            want_args(static_cast<std::size_t>(arity));
            std::vector<int> ptrs;
            for (const auto& t : argtoks) ptrs.push_back(parse_pointer(t, problem.pointers, lineno));
            w = make_action(schema, ptrs);
        }
        program.lines[static_cast<std::size_t>(slot)] = w;
    }
    return program;
}

std::string print_instruction(const Instruction& w, const GPProblem& problem) {
    auto args_text = [&](const Instruction& i) {
        std::string out = "(";
        for (int k = 0; k < i.nargs; ++k)
            out += (k ? ",z" : "z") + std::to_string(i.args[static_cast<std::size_t>(k)] + 1);
        return out + ")";
    };
    switch (w.op) {
    case Op::Empty: return "<empty>";
    case Op::Action: {
        const std::string& name =
            problem.numeric ? problem.num_domain->schemas[static_cast<std::size_t>(w.id)].name
                            : problem.domain.schemas[static_cast<std::size_t>(w.id)].name;
        return name + args_text(w);
    }
    case Op::Inc: return "inc" + args_text(w);
    case Op::Dec: return "dec" + args_text(w);
    case Op::Set: return "set" + args_text(w);
    case Op::Clear: return "clear" + args_text(w);
    case Op::Test:
        return "test_" + problem.domain.predicates[static_cast<std::size_t>(w.id)].name +
               args_text(w);
    case Op::Cmp: return "cmp" + args_text(w);
    case Op::CmpVar: return "cmp_reg" + args_text(w);
    case Op::Goto:
        return "goto(" + std::to_string(w.id) + "," + cond_text(w.cond, problem.numeric) + ")";
    case Op::End: return "end";
    }
    return "?";
}

std::string print_program(const PlanningProgram& program, const GPProblem& problem) {
    std::ostringstream out;
    for (int i = 0; i < program.capacity(); ++i) {
        const Instruction& w = program.lines[static_cast<std::size_t>(i)];
        if (!w.defined()) continue;
        out << i << ". " << print_instruction(w, problem) << "\n";
    }
    return out.str();
}

} // namespace gpsynth
