#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpsynth {

// Registers above this magnitude abort execution instead of wrapping.
inline constexpr std::int64_t kRegisterCap = std::int64_t{1} << 62;

enum class NumOp : std::uint8_t {
    Add,      // add(z1,z2): v[z1] += v[z2]
    CountEq,  // count_eq(z1,z2,z3): if z1 < z2 and v[z1] == v[z2] then v[z3] += 1
    TakeMin,  // take_min(z1,z2): if v[z2] < v[z1] then v[z1] = v[z2]
    SwapLt,   // swap(z1,z2): exchange v[z1],v[z2], applicable when z1 < z2
    CSwapLt,  // cswap(z1,z2): exchange when z1 < z2 and v[z1] > v[z2]
};

struct NumericSchema {
    std::string name;
    int arity;
    NumOp op;
};

// One of the six builtin register-machine domains.
struct NumericDomain {
    std::string name;
    std::vector<NumericSchema> schemas;

    int schema_index(const std::string& n) const {
        for (std::size_t i = 0; i < schemas.size(); ++i)
            if (schemas[i].name == n) return static_cast<int>(i);
        return -1;
    }
};

struct NumericInstance {
    std::string name;
    std::vector<std::int64_t> registers;
    std::vector<std::pair<int, std::int64_t>> goal; // (register index, target)
};

// nullptr when the name is not a registered builtin.
const NumericDomain* find_numeric_domain(const std::string& name);
std::vector<std::string> numeric_domain_names();

NumericInstance parse_numeric_instance(const std::string& text, const std::string& name);
std::string print_numeric_instance(const NumericInstance& inst);

} // namespace gpsynth
