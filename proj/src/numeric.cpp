#include "gpsynth/numeric.hpp"

#include <sstream>
#include <stdexcept>

#include "gpsynth/util.hpp"

namespace gpsynth {

namespace {

std::vector<NumericDomain> make_registry() {
    std::vector<NumericDomain> r;
    r.push_back({"fibo", {{"add", 2, NumOp::Add}}});
    r.push_back({"find", {{"count_eq", 3, NumOp::CountEq}}});
    r.push_back({"reverse", {{"swap", 2, NumOp::SwapLt}}});
    r.push_back({"sorting", {{"cswap", 2, NumOp::CSwapLt}}});
    r.push_back({"select", {{"take_min", 2, NumOp::TakeMin}}});
    r.push_back({"tsum", {{"add", 2, NumOp::Add}}});
    return r;
}

const std::vector<NumericDomain>& registry() {
    static const std::vector<NumericDomain> r = make_registry();
    return r;
}

} // namespace

const NumericDomain* find_numeric_domain(const std::string& name) {
    for (const auto& d : registry())
        if (d.name == name) return &d;
    return nullptr;
}

std::vector<std::string> numeric_domain_names() {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.name);
    return out;
}

NumericInstance parse_numeric_instance(const std::string& text, const std::string& name) {
    NumericInstance inst;
    inst.name = name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(name + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = t.substr(eq + 1);
        if (key == "registers") {
            for (const auto& piece : split(val, ','))
                inst.registers.push_back(std::stoll(piece));
        } else if (key == "goal") {
            for (const auto& piece : split(val, ',')) {
                auto colon = piece.find(':');
                if (colon == std::string::npos)
                    throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                             ": goal entries are index:value");
                inst.goal.emplace_back(std::stoi(piece.substr(0, colon)),
                                       std::stoll(piece.substr(colon + 1)));
            }
        } else {
            throw std::runtime_error(name + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (inst.registers.empty())
        throw std::runtime_error(name + ": instance declares no registers");
    for (auto [idx, target] : inst.goal) {
        (void)target;
        if (idx < 0 || idx >= static_cast<int>(inst.registers.size()))
            throw std::runtime_error(name + ": goal register " + std::to_string(idx) + " out of range");
    }
    return inst;
}

std::string print_numeric_instance(const NumericInstance& inst) {
    std::ostringstream out;
    out << "registers=";
    for (std::size_t i = 0; i < inst.registers.size(); ++i)
        out << (i ? "," : "") << inst.registers[i];
    out << "\ngoal=";
    for (std::size_t i = 0; i < inst.goal.size(); ++i)
        out << (i ? "," : "") << inst.goal[i].first << ":" << inst.goal[i].second;
    out << "\n";
    return out.str();
}

} // namespace gpsynth
