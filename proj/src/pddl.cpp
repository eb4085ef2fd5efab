#include "gpsynth/pddl.hpp"

#include <algorithm>
#include <sstream>

#include "gpsynth/util.hpp"

namespace gpsynth {

namespace {

struct Sexp {
    bool is_list = false;
    std::string atom;
    std::vector<Sexp> items;
    int line = 0, col = 0;

    const std::string& head() const {
        static const std::string empty;
        if (!is_list || items.empty() || items[0].is_list) return empty;
        return items[0].atom;
    }
};

class Reader {
public:
    explicit Reader(const std::string& text) : text_(text) {}

    Sexp read_one() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, col_);
        if (text_[pos_] == ')') throw ParseError("unbalanced ')'", line_, col_);
        if (text_[pos_] == '(') {
            Sexp list;
            list.is_list = true;
            list.line = line_;
            list.col = col_;
            advance();
            while (true) {
                skip_ws();
                if (pos_ >= text_.size()) throw ParseError("missing ')'", list.line, list.col);
                if (text_[pos_] == ')') {
                    advance();
                    return list;
                }
                list.items.push_back(read_one());
            }
        }
        Sexp atom;
        atom.line = line_;
        atom.col = col_;
        std::string tok;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
            tok += text_[pos_];
            advance();
        }
        atom.atom = to_lower(tok);
        return atom;
    }

    void expect_end() {
        skip_ws();
        if (pos_ < text_.size()) throw ParseError("trailing input after top-level form", line_, col_);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

[[noreturn]] void err(const Sexp& at, const std::string& msg) {
    throw ParseError(msg, at.line, at.col);
}

const std::string& atom_at(const Sexp& s, std::size_t i, const char* what) {
    if (i >= s.items.size() || s.items[i].is_list)
        err(s, std::string("expected ") + what);
    return s.items[i].atom;
}

// Typed list "a b - t c - t2"; untyped names default to "object".
void parse_typed_list(const Sexp& list, std::size_t from,
                      std::vector<std::pair<std::string, std::string>>& out) {
    std::vector<std::string> pending;
    for (std::size_t i = from; i < list.items.size(); ++i) {
        const Sexp& it = list.items[i];
        if (it.is_list) err(it, "expected name or '-' in typed list");
        if (it.atom == "-") {
            if (i + 1 >= list.items.size()) err(it, "missing type after '-'");
            const std::string& ty = atom_at(list, i + 1, "type name");
            for (auto& name : pending) out.emplace_back(std::move(name), ty);
            pending.clear();
            ++i;
        } else {
            pending.push_back(it.atom);
        }
    }
    for (auto& name : pending) out.emplace_back(std::move(name), "object");
}

SchemaAtom parse_schema_atom(const Sexp& s, const StripsDomain& domain,
                             const std::vector<std::string>& param_names) {
    if (!s.is_list || s.items.empty() || s.items[0].is_list) err(s, "expected atom");
    SchemaAtom out;
    out.predicate = domain.predicate_index(s.head());
    if (out.predicate < 0) err(s, "unknown predicate '" + s.head() + "'");
    const Predicate& pred = domain.predicates[static_cast<std::size_t>(out.predicate)];
    if (static_cast<int>(s.items.size()) - 1 != pred.arity())
        err(s, "predicate '" + pred.name + "' takes " + std::to_string(pred.arity()) +
                   " argument(s)");
    for (std::size_t i = 1; i < s.items.size(); ++i) {
        const std::string& term = atom_at(s, i, "parameter");
        auto it = std::find(param_names.begin(), param_names.end(), term);
        if (it == param_names.end())
            err(s.items[i], "term '" + term + "' is not an action parameter");
        out.params.push_back(static_cast<int>(it - param_names.begin()));
    }
    return out;
}

void collect_condition(const Sexp& s, const StripsDomain& domain,
                       const std::vector<std::string>& params, std::vector<SchemaAtom>& out) {
    if (s.is_list && s.head() == "and") {
        for (std::size_t i = 1; i < s.items.size(); ++i)
            collect_condition(s.items[i], domain, params, out);
        return;
    }
    if (s.is_list && (s.head() == "not" || s.head() == "or" || s.head() == "forall" ||
                      s.head() == "exists" || s.head() == "when" || s.head() == "imply"))
        err(s, "'" + s.head() + "' is outside the STRIPS fragment");
    out.push_back(parse_schema_atom(s, domain, params));
}

void collect_effect(const Sexp& s, const StripsDomain& domain,
                    const std::vector<std::string>& params, std::vector<SchemaAtom>& add,
                    std::vector<SchemaAtom>& del) {
    if (s.is_list && s.head() == "and") {
        for (std::size_t i = 1; i < s.items.size(); ++i)
            collect_effect(s.items[i], domain, params, add, del);
        return;
    }
    if (s.is_list && s.head() == "not") {
        if (s.items.size() != 2) err(s, "'not' takes one atom");
        del.push_back(parse_schema_atom(s.items[1], domain, params));
        return;
    }
    if (s.is_list && (s.head() == "when" || s.head() == "forall"))
        err(s, "'" + s.head() + "' is outside the STRIPS fragment");
    add.push_back(parse_schema_atom(s, domain, params));
}

ActionSchema parse_action(const Sexp& s, const StripsDomain& domain) {
    ActionSchema out;
    out.name = atom_at(s, 1, "action name");
    for (std::size_t i = 2; i + 1 < s.items.size(); i += 2) {
        const std::string& key = atom_at(s, i, "action section keyword");
        const Sexp& val = s.items[i + 1];
        if (key == ":parameters") {
            std::vector<std::pair<std::string, std::string>> params;
            parse_typed_list(val, 0, params);
            for (auto& [name, ty] : params) {
                if (name.empty() || name[0] != '?')
                    err(val, "parameter '" + name + "' must start with '?'");
                out.param_names.push_back(name);
                out.param_types.push_back(ty);
            }
        } else if (key == ":precondition") {
            collect_condition(val, domain, out.param_names, out.pre);
        } else if (key == ":effect") {
            collect_effect(val, domain, out.param_names, out.add, out.del);
        } else {
            err(s.items[i], "unknown action section '" + key + "'");
        }
    }
    for (const auto& a : out.add)
        for (const auto& d : out.del)
            if (a.predicate == d.predicate && a.params == d.params)
                err(s, "action '" + out.name + "' adds and deletes the same atom");
    return out;
}

GroundAtom parse_ground_atom(const Sexp& s, const StripsDomain& domain,
                             const StripsInstance& inst) {
    if (!s.is_list || s.items.empty() || s.items[0].is_list) err(s, "expected ground atom");
    GroundAtom out;
    out.predicate = domain.predicate_index(s.head());
    if (out.predicate < 0) err(s, "unknown predicate '" + s.head() + "'");
    const Predicate& pred = domain.predicates[static_cast<std::size_t>(out.predicate)];
    if (static_cast<int>(s.items.size()) - 1 != pred.arity())
        err(s, "predicate '" + pred.name + "' takes " + std::to_string(pred.arity()) +
                   " argument(s)");
    for (std::size_t i = 1; i < s.items.size(); ++i) {
        const std::string& name = atom_at(s, i, "object name");
        int obj = inst.object_index(name);
        if (obj < 0) err(s.items[i], "undeclared object '" + name + "'");
        out.objects.push_back(obj);
    }
    return out;
}

} // namespace

StripsDomain parse_domain(const std::string& text) {
    Reader reader(text);
    Sexp top = reader.read_one();
    reader.expect_end();
    if (!top.is_list || top.head() != "define") err(top, "expected (define (domain ...) ...)");
    StripsDomain domain;
    for (std::size_t i = 1; i < top.items.size(); ++i) {
        const Sexp& sec = top.items[i];
        if (!sec.is_list) err(sec, "expected domain section");
        const std::string& key = sec.head();
        if (key == "domain") {
            domain.name = atom_at(sec, 1, "domain name");
        } else if (key == ":requirements") {
            for (std::size_t j = 1; j < sec.items.size(); ++j) {
                const std::string& req = atom_at(sec, j, "requirement");
                if (req == ":typing") domain.typed = true;
                else if (req != ":strips")
                    err(sec.items[j], "unsupported requirement " + req);
            }
        } else if (key == ":types") {
            parse_typed_list(sec, 1, domain.types);
        } else if (key == ":predicates") {
            for (std::size_t j = 1; j < sec.items.size(); ++j) {
                const Sexp& ps = sec.items[j];
                if (!ps.is_list || ps.items.empty()) err(ps, "expected predicate declaration");
                Predicate pred;
                pred.name = atom_at(ps, 0, "predicate name");
                std::vector<std::pair<std::string, std::string>> params;
                parse_typed_list(ps, 1, params);
                for (auto& [name, ty] : params) {
                    if (name.empty() || name[0] != '?')
                        err(ps, "predicate parameter '" + name + "' must start with '?'");
                    pred.param_types.push_back(ty);
                }
                if (domain.predicate_index(pred.name) >= 0)
                    err(ps, "predicate '" + pred.name + "' declared twice");
                domain.predicates.push_back(std::move(pred));
            }
        } else if (key == ":action") {
            domain.schemas.push_back(parse_action(sec, domain));
        } else {
            err(sec, "unsupported section '" + key + "'");
        }
    }
    return domain;
}

StripsInstance parse_instance(const std::string& text, const StripsDomain& domain) {
    Reader reader(text);
    Sexp top = reader.read_one();
    reader.expect_end();
    if (!top.is_list || top.head() != "define") err(top, "expected (define (problem ...) ...)");

    StripsInstance inst;
    std::vector<GroundAtom> init_atoms, goal_atoms;
    const Sexp* init_sec = nullptr;
    const Sexp* goal_sec = nullptr;
    for (std::size_t i = 1; i < top.items.size(); ++i) {
        const Sexp& sec = top.items[i];
        if (!sec.is_list) err(sec, "expected problem section");
        const std::string& key = sec.head();
        if (key == "problem") {
            inst.name = atom_at(sec, 1, "problem name");
        } else if (key == ":domain") {
            const std::string& dn = atom_at(sec, 1, "domain name");
            if (dn != domain.name)
                err(sec, "instance is for domain '" + dn + "', expected '" + domain.name + "'");
        } else if (key == ":objects") {
            std::vector<std::pair<std::string, std::string>> objs;
            parse_typed_list(sec, 1, objs);
            for (auto& [name, ty] : objs) {
                if (inst.object_index(name) >= 0) err(sec, "object '" + name + "' declared twice");
                inst.objects.push_back(name);
                inst.object_types.push_back(ty);
            }
        } else if (key == ":init") {
            init_sec = &sec;
        } else if (key == ":goal") {
            goal_sec = &sec;
        } else {
            err(sec, "unsupported section '" + key + "'");
        }
    }
    // Objects must be known before atoms are resolved; sections may come in
    // any order in the file.
    if (init_sec)
        for (std::size_t j = 1; j < init_sec->items.size(); ++j)
            init_atoms.push_back(parse_ground_atom(init_sec->items[j], domain, inst));
    if (goal_sec) {
        if (goal_sec->items.size() != 2) err(*goal_sec, "goal takes a single condition");
        const Sexp& cond = goal_sec->items[1];
        if (cond.is_list && cond.head() == "and") {
            for (std::size_t j = 1; j < cond.items.size(); ++j)
                goal_atoms.push_back(parse_ground_atom(cond.items[j], domain, inst));
        } else {
            goal_atoms.push_back(parse_ground_atom(cond, domain, inst));
        }
    }

    inst.finalize(domain);
    inst.init = Bitset(inst.atoms.size());
    for (const auto& a : init_atoms) {
        int id = inst.atom_id(a.predicate, a.objects);
        if (id < 0) err(*init_sec, "init atom violates predicate typing");
        inst.init.set(static_cast<std::size_t>(id));
    }
    for (const auto& a : goal_atoms) {
        int id = inst.atom_id(a.predicate, a.objects);
        if (id < 0) err(*goal_sec, "goal atom violates predicate typing");
        inst.goal.push_back(id);
    }
    return inst;
}

namespace {

std::string schema_atom_text(const SchemaAtom& a, const StripsDomain& domain,
                             const ActionSchema& schema) {
    std::string out = "(" + domain.predicates[static_cast<std::size_t>(a.predicate)].name;
    for (int p : a.params) out += " " + schema.param_names[static_cast<std::size_t>(p)];
    return out + ")";
}

} // namespace

std::string print_domain(const StripsDomain& domain) {
    std::ostringstream out;
    out << "(define (domain " << domain.name << ")\n";
    out << "  (:requirements :strips" << (domain.typed ? " :typing" : "") << ")\n";
    if (!domain.types.empty()) {
        out << "  (:types";
        for (const auto& [t, parent] : domain.types) out << " " << t << " - " << parent;
        out << ")\n";
    }
    out << "  (:predicates";
    for (const auto& p : domain.predicates) {
        out << " (" << p.name;
        for (std::size_t i = 0; i < p.param_types.size(); ++i)
            out << " ?x" << i << " - " << p.param_types[i];
        out << ")";
    }
    out << ")\n";
    for (const auto& s : domain.schemas) {
        out << "  (:action " << s.name << "\n    :parameters (";
        for (std::size_t i = 0; i < s.param_names.size(); ++i)
            out << (i ? " " : "") << s.param_names[i] << " - " << s.param_types[i];
        out << ")\n    :precondition (and";
        for (const auto& a : s.pre) out << " " << schema_atom_text(a, domain, s);
        out << ")\n    :effect (and";
        for (const auto& a : s.add) out << " " << schema_atom_text(a, domain, s);
        for (const auto& a : s.del) out << " (not " << schema_atom_text(a, domain, s) << ")";
        out << "))\n";
    }
    out << ")\n";
    return out.str();
}

std::string print_instance(const StripsInstance& inst, const StripsDomain& domain,
                           const std::string& domain_name) {
    std::ostringstream out;
    out << "(define (problem " << inst.name << ")\n  (:domain " << domain_name << ")\n";
    out << "  (:objects";
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        out << " " << inst.objects[i] << " - " << inst.object_types[i];
    out << ")\n  (:init";
    for (std::size_t i = 0; i < inst.atoms.size(); ++i) {
        if (!inst.init.test(i)) continue;
        const GroundAtom& a = inst.atoms[i];
        out << " (" << domain.predicates[static_cast<std::size_t>(a.predicate)].name;
        for (int o : a.objects) out << " " << inst.objects[static_cast<std::size_t>(o)];
        out << ")";
    }
    out << ")\n  (:goal (and";
    for (int g : inst.goal) {
        const GroundAtom& a = inst.atoms[static_cast<std::size_t>(g)];
        out << " (" << domain.predicates[static_cast<std::size_t>(a.predicate)].name;
        for (int o : a.objects) out << " " << inst.objects[static_cast<std::size_t>(o)];
        out << ")";
    }
    out << ")))\n";
    return out.str();
}

} // namespace gpsynth
