#include "gpsynth/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gpsynth/evaluators.hpp"
#include "gpsynth/pddl.hpp"

namespace fs = std::filesystem;

namespace gpsynth {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Manifest load_manifest(const std::string& path) {
    fs::path dir = fs::path(path).parent_path();
    auto resolve = [&](const std::string& rel) { return (dir / rel).string(); };

    std::string domain_ref;
    std::vector<std::string> instance_refs, validation_refs;
    Manifest m;
    GPProblem& p = m.problem;

    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key == "name") p.name = val;
        else if (key == "domain") domain_ref = val;
        else if (key == "instances") instance_refs = split(val, ',');
        else if (key == "validation") validation_refs = split(val, ',');
        else if (key == "pointers") p.pointers = std::stoi(val);
        else if (key == "lines") p.lines = std::stoi(val);
        else if (key == "v") p.v = std::stoi(val);
        else if (key == "evaluators") p.evaluator_names = split(val, ',');
        else if (key == "mode") {
            if (val == "bfs") p.mode = SearchMode::Bfs;
            else if (val == "pgp") p.mode = SearchMode::Pgp;
            else throw std::runtime_error(path + ": unknown mode " + val);
        } else {
            throw std::runtime_error(path + ": unknown key " + key);
        }
    }

    if (domain_ref.empty()) throw std::runtime_error(path + ": missing domain=");
    if (instance_refs.empty()) throw std::runtime_error(path + ": missing instances=");
    if (p.pointers < 1 || p.lines < 1 || p.v < 1)
        throw std::runtime_error(path + ": pointers, lines and v must be positive");
    if (p.evaluator_names.empty()) p.evaluator_names = {"h5", "f1"};
    for (const auto& e : p.evaluator_names)
        if (!eval_id_from_name(trim(e)))
            throw std::runtime_error(path + ": unknown evaluator " + e);
    for (auto& e : p.evaluator_names) e = trim(e);

    if (const NumericDomain* nd = find_numeric_domain(domain_ref)) {
        p.numeric = true;
        p.num_domain = nd;
        for (const auto& r : instance_refs) {
            std::string f = resolve(trim(r));
            p.num_instances.push_back(parse_numeric_instance(read_file(f), trim(r)));
        }
    } else {
        p.domain = parse_domain(read_file(resolve(domain_ref)));
        for (const auto& r : instance_refs)
            p.instances.push_back(parse_instance(read_file(resolve(trim(r))), p.domain));
    }
    if (p.name.empty()) p.name = fs::path(path).stem().string();
    for (const auto& r : validation_refs) m.validation_paths.push_back(resolve(trim(r)));
    return m;
}

std::size_t append_validation(Manifest& m) {
    GPProblem& p = m.problem;
    std::size_t first = p.instance_count();
    for (const auto& f : m.validation_paths) {
        if (p.numeric)
            p.num_instances.push_back(parse_numeric_instance(read_file(f), f));
        else
            p.instances.push_back(parse_instance(read_file(f), p.domain));
    }
    return first;
}

std::string write_benchmark_files(const Benchmark& b, const std::string& dir) {
    fs::create_directories(dir);
    std::string ext = b.numeric ? ".txt" : ".pddl";

    std::ostringstream man;
    man << "name=" << b.name << "\n";
    if (b.numeric) {
        man << "domain=" << b.num_domain->name << "\n";
    } else {
        write_file((fs::path(dir) / "domain.pddl").string(), b.domain_pddl);
        man << "domain=domain.pddl\n";
    }

    auto dump = [&](const std::vector<std::string>& texts, const char* stem) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < texts.size(); ++i) {
            std::string f = stem + std::to_string(i + 1) + ext;
            write_file((fs::path(dir) / f).string(), texts[i]);
            names.push_back(f);
        }
        return names;
    };
    auto join = [](const std::vector<std::string>& xs) {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
        return out;
    };
    man << "instances=" << join(dump(b.training, "instance")) << "\n";
    if (!b.validation.empty()) man << "validation=" << join(dump(b.validation, "validation")) << "\n";
    man << "pointers=" << b.pointers << "\nlines=" << b.lines << "\nv=" << b.v << "\n";
    man << "evaluators=" << join(b.evaluators) << "\n";
    man << "mode=" << (b.mode == SearchMode::Pgp ? "pgp" : "bfs") << "\n";

    std::string manifest_path = (fs::path(dir) / "manifest.txt").string();
    write_file(manifest_path, man.str());
    return manifest_path;
}

} // namespace gpsynth
