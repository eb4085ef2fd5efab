#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpsynth/numeric.hpp"
#include "gpsynth/util.hpp"

namespace gpsynth {

struct Predicate {
    std::string name;
    std::vector<std::string> param_types;
    int arity() const { return static_cast<int>(param_types.size()); }
};

// Atom over schema parameters; params index into the schema's parameter list.
struct SchemaAtom {
    int predicate;
    std::vector<int> params;
};

struct ActionSchema {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<std::string> param_types;
    std::vector<SchemaAtom> pre;
    std::vector<SchemaAtom> add;
    std::vector<SchemaAtom> del;
    int arity() const { return static_cast<int>(param_names.size()); }
};

struct StripsDomain {
    std::string name;
    std::vector<Predicate> predicates;
    std::vector<ActionSchema> schemas;
    // type -> parent ("object" roots the hierarchy)
    std::vector<std::pair<std::string, std::string>> types;
    bool typed = false;

    int predicate_index(const std::string& n) const;
    int schema_index(const std::string& n) const;
    bool is_subtype(const std::string& t, const std::string& of) const;
};

struct GroundAtom {
    int predicate;
    std::vector<int> objects;
};

struct GroundAction {
    int schema = -1;
    bool valid = false; // false: type mismatch or overlapping add/delete
    std::vector<int> pre, add, del; // atom ids
};

struct StripsInstance {
    std::string name;
    std::vector<std::string> objects;
    std::vector<std::string> object_types;

    // Ground-atom universe (type-consistent instantiations), fixed order.
    std::vector<GroundAtom> atoms;
    Bitset init;
    std::vector<int> goal; // atom ids

    // Filled by finalize().
    int atom_id(int predicate, const std::vector<int>& objs) const;
    const GroundAction& ground(int schema, const int* ptrs, int nptrs) const;
    void finalize(const StripsDomain& domain);

    template <typename Fn>
    void for_each_ground_action(Fn&& fn) const {
        for (const auto& per_schema : grounded_)
            for (const GroundAction& ga : per_schema)
                if (ga.valid) fn(ga);
    }

    std::string atom_name(int atom) const;
    int object_index(const std::string& name) const;

private:
    const StripsDomain* domain_ = nullptr;
    std::vector<std::vector<int>> atom_lookup_;        // per predicate, radix over objects
    std::vector<std::vector<GroundAction>> grounded_;  // per schema, radix over objects
};

// Pointer instantiation: substitutes the objects currently indexed by the
// pointers into the schema and resolves atoms against the instance universe.
GroundAction ground_over_pointers(const StripsDomain& domain, int schema,
                                  const std::vector<int>& ptrs, const StripsInstance& inst);

bool applicable(const Bitset& state, const GroundAction& action);
Bitset apply(const Bitset& state, const GroundAction& action);
bool goal_satisfied_strips(const Bitset& state, const StripsInstance& inst);
bool goal_satisfied_numeric(const std::vector<std::int64_t>& regs, const NumericInstance& inst);

enum class SearchMode { Bfs, Pgp };

// A domain plus its ordered instance family and the synthesis bounds.
struct GPProblem {
    bool numeric = false;

    StripsDomain domain;
    std::vector<StripsInstance> instances;

    const NumericDomain* num_domain = nullptr;
    std::vector<NumericInstance> num_instances;

    int pointers = 1;
    int lines = 1;
    int v = 1;
    std::vector<std::string> evaluator_names;
    SearchMode mode = SearchMode::Bfs;
    std::string name;

    std::size_t instance_count() const {
        return numeric ? num_instances.size() : instances.size();
    }
    // Range of a pointer: objects in STRIPS mode, registers in numeric mode.
    int pointer_domain_size(std::size_t inst) const {
        return numeric ? static_cast<int>(num_instances[inst].registers.size())
                       : static_cast<int>(instances[inst].objects.size());
    }
};

} // namespace gpsynth
