#include "gpsynth/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpsynth {

int StripsDomain::predicate_index(const std::string& n) const {
    for (std::size_t i = 0; i < predicates.size(); ++i)
        if (predicates[i].name == n) return static_cast<int>(i);
    return -1;
}

int StripsDomain::schema_index(const std::string& n) const {
    for (std::size_t i = 0; i < schemas.size(); ++i)
        if (schemas[i].name == n) return static_cast<int>(i);
    return -1;
}

bool StripsDomain::is_subtype(const std::string& t, const std::string& of) const {
    if (of == "object" || t == of) return true;
    std::string cur = t;
    for (int guard = 0; guard < 64; ++guard) {
        const std::pair<std::string, std::string>* entry = nullptr;
        for (const auto& e : types)
            if (e.first == cur) { entry = &e; break; }
        if (!entry) return false;
        if (entry->second == of) return true;
        cur = entry->second;
    }
    return false;
}

int StripsInstance::object_index(const std::string& n) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == n) return static_cast<int>(i);
    return -1;
}

int StripsInstance::atom_id(int predicate, const std::vector<int>& objs) const {
    const auto& table = atom_lookup_[static_cast<std::size_t>(predicate)];
    std::size_t idx = 0;
    for (int o : objs) idx = idx * objects.size() + static_cast<std::size_t>(o);
    return table[idx];
}

const GroundAction& StripsInstance::ground(int schema, const int* ptrs, int nptrs) const {
    std::size_t idx = 0;
    for (int i = 0; i < nptrs; ++i) idx = idx * objects.size() + static_cast<std::size_t>(ptrs[i]);
    return grounded_[static_cast<std::size_t>(schema)][idx];
}

std::string StripsInstance::atom_name(int atom) const {
    const GroundAtom& a = atoms[static_cast<std::size_t>(atom)];
    std::string out = domain_->predicates[static_cast<std::size_t>(a.predicate)].name;
    if (!a.objects.empty()) {
        out += "(";
        for (std::size_t i = 0; i < a.objects.size(); ++i)
            out += (i ? "," : "") + objects[static_cast<std::size_t>(a.objects[i])];
        out += ")";
    }
    return out;
}

namespace {

// Enumerates all object tuples of the given arity, calling fn(tuple).
template <typename Fn>
void for_each_tuple(std::size_t nobjects, int arity, Fn&& fn) {
    if (nobjects == 0 && arity > 0) return; // no tuples over an empty universe
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    while (true) {
        fn(tuple);
        int pos = arity - 1;
        while (pos >= 0) {
            if (++tuple[static_cast<std::size_t>(pos)] < static_cast<int>(nobjects)) break;
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0 || arity == 0) break;
    }
}

std::size_t pow_size(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

void StripsInstance::finalize(const StripsDomain& domain) {
    domain_ = &domain;
    atoms.clear();
    atom_lookup_.assign(domain.predicates.size(), {});

    for (std::size_t p = 0; p < domain.predicates.size(); ++p) {
        const Predicate& pred = domain.predicates[p];
        atom_lookup_[p].assign(pow_size(objects.size(), pred.arity()), -1);
        for_each_tuple(objects.size(), pred.arity(), [&](const std::vector<int>& tuple) {
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                const std::string& ty = object_types[static_cast<std::size_t>(tuple[i])];
                if (!domain.is_subtype(ty, pred.param_types[i])) return;
            }
            std::size_t idx = 0;
            for (int o : tuple) idx = idx * objects.size() + static_cast<std::size_t>(o);
            atom_lookup_[p][idx] = static_cast<int>(atoms.size());
            atoms.push_back({static_cast<int>(p), tuple});
        });
    }

    grounded_.assign(domain.schemas.size(), {});
    for (std::size_t s = 0; s < domain.schemas.size(); ++s) {
        const ActionSchema& schema = domain.schemas[s];
        grounded_[s].resize(pow_size(objects.size(), schema.arity()));
        for_each_tuple(objects.size(), schema.arity(), [&](const std::vector<int>& tuple) {
            std::size_t idx = 0;
            for (int o : tuple) idx = idx * objects.size() + static_cast<std::size_t>(o);
            grounded_[s][idx] =
                ground_over_pointers(domain, static_cast<int>(s), tuple, *this);
        });
    }
}

GroundAction ground_over_pointers(const StripsDomain& domain, int schema,
                                  const std::vector<int>& ptrs, const StripsInstance& inst) {
    const ActionSchema& as = domain.schemas[static_cast<std::size_t>(schema)];
    GroundAction out;
    out.schema = schema;
    out.valid = false;
    if (static_cast<int>(ptrs.size()) != as.arity())
        throw std::invalid_argument("pointer count does not match schema arity");

    for (std::size_t i = 0; i < ptrs.size(); ++i) {
        const std::string& ty = inst.object_types[static_cast<std::size_t>(ptrs[i])];
        if (!domain.is_subtype(ty, as.param_types[i])) return out; // inapplicable, not an error
    }

    auto resolve = [&](const std::vector<SchemaAtom>& src, std::vector<int>& dst) {
        for (const SchemaAtom& sa : src) {
            std::vector<int> objs;
            objs.reserve(sa.params.size());
            for (int p : sa.params) objs.push_back(ptrs[static_cast<std::size_t>(p)]);
            int id = inst.atom_id(sa.predicate, objs);
            if (id < 0) return false; // type-inconsistent instantiation
            dst.push_back(id);
        }
        return true;
    };
    if (!resolve(as.pre, out.pre) || !resolve(as.add, out.add) || !resolve(as.del, out.del))
        return out;

    // Degenerate instantiations whose add and delete sets collide (e.g. a
    // move with source == destination) are treated as inapplicable.
    for (int a : out.add)
        if (std::find(out.del.begin(), out.del.end(), a) != out.del.end()) return out;

    out.valid = true;
    return out;
}

bool applicable(const Bitset& state, const GroundAction& action) {
    return action.valid && state.contains_all(action.pre);
}

Bitset apply(const Bitset& state, const GroundAction& action) {
    Bitset out = state;
    for (int d : action.del) out.reset(static_cast<std::size_t>(d));
    for (int a : action.add) out.set(static_cast<std::size_t>(a));
    return out;
}

bool goal_satisfied_strips(const Bitset& state, const StripsInstance& inst) {
    return state.contains_all(inst.goal);
}

bool goal_satisfied_numeric(const std::vector<std::int64_t>& regs, const NumericInstance& inst) {
    for (auto [idx, target] : inst.goal)
        if (regs[static_cast<std::size_t>(idx)] != target) return false;
    return true;
}

} // namespace gpsynth
