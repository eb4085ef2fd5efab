#include "gpsynth/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gpsynth/pddl.hpp"

namespace gpsynth {

namespace {

// ---- STRIPS domain texts -------------------------------------------------

const char* kVisitallDomain = R"((define (domain visitall)
  (:requirements :strips)
  (:predicates (at ?c) (visited ?c) (adjacent ?a ?b))
  (:action visit
    :parameters (?from ?to)
    :precondition (and (at ?from) (adjacent ?from ?to))
    :effect (and (at ?to) (visited ?to) (not (at ?from)))))
)";

const char* kGripperDomain = R"((define (domain gripper)
  (:requirements :strips)
  (:predicates (at-robby ?r) (at ?b ?r) (carrying ?b) (free))
  (:action move
    :parameters (?a ?b)
    :precondition (and (at-robby ?a))
    :effect (and (at-robby ?b) (not (at-robby ?a))))
  (:action pick
    :parameters (?b ?r)
    :precondition (and (at ?b ?r) (at-robby ?r) (free))
    :effect (and (carrying ?b) (not (at ?b ?r)) (not (free))))
  (:action drop
    :parameters (?b ?r)
    :precondition (and (carrying ?b) (at-robby ?r))
    :effect (and (at ?b ?r) (free) (not (carrying ?b)))))
)";

const char* kLockDomain = R"((define (domain lock)
  (:requirements :strips)
  (:predicates (at ?c) (adj ?a ?b) (locked ?c) (unlocked ?c))
  (:action move
    :parameters (?a ?b)
    :precondition (and (at ?a) (adj ?a ?b))
    :effect (and (at ?b) (not (at ?a))))
  (:action open
    :parameters (?c)
    :precondition (and (at ?c) (locked ?c))
    :effect (and (unlocked ?c) (not (locked ?c)))))
)";

const char* kCorridorDomain = R"((define (domain corridor)
  (:requirements :strips)
  (:predicates (at ?c) (adj ?a ?b) (visited ?c))
  (:action move
    :parameters (?a ?b)
    :precondition (and (at ?a) (adj ?a ?b))
    :effect (and (at ?b) (visited ?b) (not (at ?a)))))
)";

const char* kOntableDomain = R"((define (domain ontable)
  (:requirements :strips)
  (:predicates (on ?x ?y) (ontable ?x) (clear ?x) (holding ?x) (handempty))
  (:action pickup
    :parameters (?x)
    :precondition (and (clear ?x) (ontable ?x) (handempty))
    :effect (and (holding ?x) (not (ontable ?x)) (not (clear ?x)) (not (handempty))))
  (:action putdown
    :parameters (?x)
    :precondition (and (holding ?x))
    :effect (and (ontable ?x) (clear ?x) (handempty) (not (holding ?x))))
  (:action stack
    :parameters (?x ?y)
    :precondition (and (holding ?x) (clear ?y))
    :effect (and (on ?x ?y) (clear ?x) (handempty) (not (holding ?x)) (not (clear ?y))))
  (:action unstack
    :parameters (?x ?y)
    :precondition (and (on ?x ?y) (clear ?x) (handempty))
    :effect (and (holding ?x) (clear ?y) (not (on ?x ?y)) (not (clear ?x)) (not (handempty)))))
)";

const char* kBakingDomain = R"((define (domain baking)
  (:requirements :strips)
  (:predicates (raw ?c) (mixed ?c) (baked ?c))
  (:action mix
    :parameters (?c)
    :precondition (and (raw ?c))
    :effect (and (mixed ?c) (not (raw ?c))))
  (:action bake
    :parameters (?c)
    :precondition (and (mixed ?c))
    :effect (and (baked ?c) (not (mixed ?c)))))
)";

const char* kIntrusionDomain = R"((define (domain intrusion)
  (:requirements :strips)
  (:predicates (known ?h) (probed ?h) (accessed ?h) (cleaned ?h))
  (:action recon
    :parameters (?h)
    :precondition (and (known ?h))
    :effect (and (probed ?h)))
  (:action breakin
    :parameters (?h)
    :precondition (and (probed ?h))
    :effect (and (accessed ?h)))
  (:action clean
    :parameters (?h)
    :precondition (and (accessed ?h))
    :effect (and (cleaned ?h) (not (accessed ?h)))))
)";

const char* kSpannerDomain = R"((define (domain spanner)
  (:requirements :strips)
  (:predicates (at-man ?l) (at-spanner ?l) (at-nut ?l) (carrying) (loose) (tightened) (adj ?a ?b))
  (:action walk
    :parameters (?a ?b)
    :precondition (and (at-man ?a) (adj ?a ?b))
    :effect (and (at-man ?b) (not (at-man ?a))))
  (:action pickup
    :parameters (?l)
    :precondition (and (at-man ?l) (at-spanner ?l))
    :effect (and (carrying) (not (at-spanner ?l))))
  (:action tighten
    :parameters (?l)
    :precondition (and (at-man ?l) (at-nut ?l) (carrying) (loose))
    :effect (and (tightened) (not (loose)))))
)";

// ---- STRIPS instance builders --------------------------------------------

std::string cells(int k, const char* prefix = "c") {
    std::ostringstream out;
    for (int i = 0; i < k; ++i) out << (i ? " " : "") << prefix << i;
    return out.str();
}

std::string visitall_instance(int k) {
    std::ostringstream out;
    out << "(define (problem visitall-" << k << ") (:domain visitall)\n  (:objects " << cells(k)
        << ")\n  (:init (at c0) (visited c0)";
    for (int i = 0; i + 1 < k; ++i)
        out << " (adjacent c" << i << " c" << i + 1 << ") (adjacent c" << i + 1 << " c" << i << ")";
    out << ")\n  (:goal (and";
    for (int i = 0; i < k; ++i) out << " (visited c" << i << ")";
    out << ")))\n";
    return out.str();
}

// Two rooms first in object order, then the balls; the robot starts in the
// second room with every ball. The target-room marker doubles as cargo: it
// starts in rooma and must be carried over like any ball, so the very first
// iteration of a transport loop already delivers an item even though the
// pointers still rest at the low indices where the rooms live.
std::string gripper_instance(int balls) {
    std::ostringstream out;
    out << "(define (problem gripper-" << balls << ") (:domain gripper)\n  (:objects roomb rooma";
    for (int i = 0; i < balls; ++i) out << " b" << i;
    out << ")\n  (:init (at-robby rooma) (free) (at roomb rooma)";
    for (int i = 0; i < balls; ++i) out << " (at b" << i << " rooma)";
    out << ")\n  (:goal (and (at roomb roomb)";
    for (int i = 0; i < balls; ++i) out << " (at b" << i << " roomb)";
    out << ")))\n";
    return out.str();
}

std::string lock_instance(int k) {
    std::ostringstream out;
    out << "(define (problem lock-" << k << ") (:domain lock)\n  (:objects " << cells(k)
        << ")\n  (:init (at c0)";
    for (int i = 0; i < k; ++i) out << " (locked c" << i << ")";
    for (int i = 0; i + 1 < k; ++i) out << " (adj c" << i << " c" << i + 1 << ")";
    out << ")\n  (:goal (and";
    for (int i = 0; i < k; ++i) out << " (unlocked c" << i << ")";
    out << ")))\n";
    return out.str();
}

std::string corridor_instance(int k) {
    int mid = k / 2;
    std::ostringstream out;
    out << "(define (problem corridor-" << k << ") (:domain corridor)\n  (:objects " << cells(k)
        << ")\n  (:init (at c" << mid << ") (visited c" << mid << ")";
    for (int i = 0; i + 1 < k; ++i)
        out << " (adj c" << i << " c" << i + 1 << ") (adj c" << i + 1 << " c" << i << ")";
    out << ")\n  (:goal (and (visited c0) (visited c" << k - 1 << "))))\n";
    return out.str();
}

// A single tower b0 (bottom) .. b_{k-1} (top); goal: everything on the table.
std::string ontable_instance(int k) {
    std::ostringstream out;
    out << "(define (problem ontable-" << k << ") (:domain ontable)\n  (:objects " << cells(k, "b")
        << ")\n  (:init (handempty) (ontable b0) (clear b" << k - 1 << ")";
    for (int i = 1; i < k; ++i) out << " (on b" << i << " b" << i - 1 << ")";
    out << ")\n  (:goal (and";
    for (int i = 0; i < k; ++i) out << " (ontable b" << i << ")";
    out << ")))\n";
    return out.str();
}

std::string baking_instance(int k) {
    std::ostringstream out;
    out << "(define (problem baking-" << k << ") (:domain baking)\n  (:objects " << cells(k, "cake")
        << ")\n  (:init";
    for (int i = 0; i < k; ++i) out << " (raw cake" << i << ")";
    out << ")\n  (:goal (and";
    for (int i = 0; i < k; ++i) out << " (baked cake" << i << ")";
    out << ")))\n";
    return out.str();
}

std::string intrusion_instance(int k) {
    std::ostringstream out;
    out << "(define (problem intrusion-" << k << ") (:domain intrusion)\n  (:objects "
        << cells(k, "h") << ")\n  (:init";
    for (int i = 0; i < k; ++i) out << " (known h" << i << ")";
    out << ")\n  (:goal (and";
    for (int i = 0; i < k; ++i) out << " (cleaned h" << i << ")";
    out << ")))\n";
    return out.str();
}

// Man at l0, spanner midway, nut at the far end.
std::string spanner_instance(int k) {
    std::ostringstream out;
    out << "(define (problem spanner-" << k << ") (:domain spanner)\n  (:objects " << cells(k, "l")
        << ")\n  (:init (at-man l0) (loose) (at-spanner l" << k / 2 << ") (at-nut l" << k - 1
        << ")";
    for (int i = 0; i + 1 < k; ++i) out << " (adj l" << i << " l" << i + 1 << ")";
    out << ")\n  (:goal (and (tightened))))\n";
    return out.str();
}

// ---- numeric instance builders -------------------------------------------

std::string num_instance(const std::vector<std::int64_t>& regs,
                         const std::vector<std::pair<int, std::int64_t>>& goal) {
    std::ostringstream out;
    out << "registers=";
    for (std::size_t i = 0; i < regs.size(); ++i) out << (i ? "," : "") << regs[i];
    out << "\ngoal=";
    for (std::size_t i = 0; i < goal.size(); ++i)
        out << (i ? "," : "") << goal[i].first << ":" << goal[i].second;
    out << "\n";
    return out.str();
}

std::string tsum_instance(int k) {
    std::vector<std::int64_t> regs;
    for (int i = 0; i <= k; ++i) regs.push_back(i);
    return num_instance(regs, {{0, static_cast<std::int64_t>(k) * (k + 1) / 2}});
}

std::string select_instance(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(4, 9);
    std::vector<std::int64_t> regs(static_cast<std::size_t>(k));
    for (auto& r : regs) r = d(rng);
    // The running minimum is the first value for a long stretch, repeats
    // just before the end, and only the last value improves on it: scans
    // that stop at the first non-improving or first repeated value read the
    // wrong minimum, and no prefix of the scan reaches the true one.
    regs[0] = 3;
    regs[1] = 5;
    regs[static_cast<std::size_t>(k - 2)] = 3;
    regs[static_cast<std::size_t>(k - 1)] = 1;
    return num_instance(regs, {{0, 1}});
}

// v0: counter, v1: target, v2..: data. The goal counter equals the number of
// data registers holding the target value. `matches` pins how many do;
// occurrences are scattered non-adjacently, adjacent filler values are kept
// distinct, and larger instances plant one adjacent equal filler pair — so
// counting adjacent duplicates instead of target occurrences reads the wrong
// total.
std::string find_instance(int k, int matches, std::mt19937& rng) {
    std::vector<std::int64_t> regs(static_cast<std::size_t>(k));
    regs[0] = 0;
    std::int64_t target = 3;
    regs[1] = target;
    std::uniform_int_distribution<int> d(4, 9); // filler never equals the target
    for (int i = 2; i < k; ++i) {
        do
            regs[static_cast<std::size_t>(i)] = d(rng);
        while (regs[static_cast<std::size_t>(i)] == regs[static_cast<std::size_t>(i - 1)]);
    }
    for (int m = 0; m < matches; ++m) {
        // Scatter occurrences non-adjacently, the last one at the end.
        int at = m + 1 == matches ? k - 1 : 3 + 2 * m;
        if (at < k) regs[static_cast<std::size_t>(at)] = target;
    }
    if (k >= 7) regs[static_cast<std::size_t>(k - 3)] = regs[static_cast<std::size_t>(k - 2)] = 8;
    std::int64_t count = 0;
    for (int i = 2; i < k; ++i) count += regs[static_cast<std::size_t>(i)] == target;
    return num_instance(regs, {{0, count}});
}

std::string reverse_instance(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(1, 9);
    std::vector<std::int64_t> regs(static_cast<std::size_t>(k));
    for (auto& r : regs) r = d(rng);
    regs[0] = 1; // distinct ends keep the reversal non-trivial
    regs[static_cast<std::size_t>(k - 1)] = 9;
    std::vector<std::pair<int, std::int64_t>> goal;
    for (int i = 0; i < k; ++i) goal.push_back({i, regs[static_cast<std::size_t>(k - 1 - i)]});
    return num_instance(regs, goal);
}

std::string sorting_array(std::vector<std::int64_t> regs) {
    std::vector<std::int64_t> sorted = regs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<int, std::int64_t>> goal;
    for (std::size_t i = 0; i < regs.size(); ++i)
        goal.push_back({static_cast<int>(i), sorted[i]});
    return num_instance(regs, goal);
}

std::string sorting_instance(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, 9);
    std::vector<std::int64_t> regs(static_cast<std::size_t>(k));
    for (auto& r : regs) r = d(rng);
    return sorting_array(std::move(regs));
}

std::string fibo_instance(int m) {
    std::vector<std::int64_t> regs(static_cast<std::size_t>(m), 0);
    regs[0] = 1;
    regs[1] = 1;
    std::int64_t a = 1, b = 1;
    for (int i = 2; i < m; ++i) { std::int64_t c = a + b; a = b; b = c; }
    return num_instance(regs, {{m - 1, b}});
}

} // namespace

std::vector<std::string> benchmark_names() {
    return {"visitall", "gripper",  "lock",    "corridor", "ontable", "baking", "intrusion",
            "spanner",  "tsum",     "select",  "find",     "reverse", "sorting", "fibo"};
}

Benchmark generate_benchmark(const std::string& name, unsigned seed) {
    std::seed_seq seq{seed, static_cast<unsigned>(std::hash<std::string>{}(name))};
    std::mt19937 rng(seq);

    Benchmark b;
    b.name = name;
    if (name == "visitall") {
        b.domain_pddl = kVisitallDomain;
        b.training = {visitall_instance(3), visitall_instance(5)};
        b.validation = {visitall_instance(8), visitall_instance(11)};
        b.pointers = 2; b.lines = 7; b.v = 1;
        b.evaluators = {"h5", "f1"};
    } else if (name == "gripper") {
        b.domain_pddl = kGripperDomain;
        b.training = {gripper_instance(1), gripper_instance(2)};
        b.validation = {gripper_instance(6), gripper_instance(8)};
        b.pointers = 4; b.lines = 8; b.v = 2;
        b.evaluators = {"h5", "f1"};
        b.mode = SearchMode::Pgp;
    } else if (name == "lock") {
        b.domain_pddl = kLockDomain;
        b.training = {lock_instance(3), lock_instance(5), lock_instance(7)};
        b.validation = {lock_instance(10), lock_instance(12)};
        b.pointers = 2; b.lines = 12; b.v = 2;
        b.evaluators = {"flm", "f1"};
        b.mode = SearchMode::Pgp;
    } else if (name == "corridor") {
        b.domain_pddl = kCorridorDomain;
        b.training = {corridor_instance(5), corridor_instance(7)};
        b.validation = {corridor_instance(9), corridor_instance(11)};
        b.pointers = 2; b.lines = 10; b.v = 2;
        b.evaluators = {"h5", "f1"};
        b.mode = SearchMode::Pgp;
    } else if (name == "ontable") {
        b.domain_pddl = kOntableDomain;
        b.training = {ontable_instance(3), ontable_instance(4)};
        b.validation = {ontable_instance(5), ontable_instance(6)};
        b.pointers = 3; b.lines = 11; b.v = 1;
        b.evaluators = {"h5", "f1"};
    } else if (name == "baking") {
        b.domain_pddl = kBakingDomain;
        b.training = {baking_instance(2), baking_instance(3)};
        b.validation = {baking_instance(5)};
        b.pointers = 6; b.lines = 13; b.v = 1;
    } else if (name == "intrusion") {
        b.domain_pddl = kIntrusionDomain;
        b.training = {intrusion_instance(2), intrusion_instance(3)};
        b.validation = {intrusion_instance(5)};
        b.pointers = 1; b.lines = 9; b.v = 1;
    } else if (name == "spanner") {
        b.domain_pddl = kSpannerDomain;
        b.training = {spanner_instance(4), spanner_instance(5)};
        b.validation = {spanner_instance(8)};
        b.pointers = 5; b.lines = 12; b.v = 1;
    } else if (name == "tsum") {
        b.numeric = true;
        b.num_domain = find_numeric_domain("tsum");
        b.training = {tsum_instance(4), tsum_instance(6)};
        b.validation = {tsum_instance(10), tsum_instance(13)};
        b.pointers = 2; b.lines = 6; b.v = 1;
    } else if (name == "select") {
        b.numeric = true;
        b.num_domain = find_numeric_domain("select");
        b.training = {select_instance(4, rng), select_instance(6, rng)};
        b.validation = {select_instance(9, rng), select_instance(13, rng)};
        b.pointers = 2; b.lines = 6; b.v = 1;
    } else if (name == "find") {
        b.numeric = true;
        b.num_domain = find_numeric_domain("find");
        b.training = {find_instance(5, 1, rng), find_instance(7, 2, rng)};
        b.validation = {find_instance(11, 4, rng), find_instance(14, 3, rng)};
        b.pointers = 3; b.lines = 6; b.v = 1;
    } else if (name == "reverse") {
        b.numeric = true;
        b.num_domain = find_numeric_domain("reverse");
        b.training = {reverse_instance(4, rng), reverse_instance(5, rng)};
        b.validation = {reverse_instance(8, rng), reverse_instance(11, rng)};
        b.pointers = 2; b.lines = 7; b.v = 1;
    } else if (name == "sorting") {
        b.numeric = true;
        b.num_domain = find_numeric_domain("sorting");
        // Training triple grown adversarially: each later instance defeats
        // the shortcut program the search finds without it, leaving the
        // general ascending-scan sorter as the best survivor. The first
        // pair of every array ascends so that no prefix of a candidate
        // program can shrink the goal distance before its scan loop closes.
        b.training = {sorting_array({2, 4, 1, 3}), sorting_array({4, 9, 3, 2, 1}),
                      sorting_array({8, 9, 2, 5, 9, 7})};
        b.validation = {sorting_instance(7, rng), sorting_instance(10, rng)};
        b.pointers = 2; b.lines = 8; b.v = 1;
        b.evaluators = {"h5", "f1"};
    } else if (name == "fibo") {
        b.numeric = true;
        b.num_domain = find_numeric_domain("fibo");
        b.training = {fibo_instance(5)};
        b.validation = {fibo_instance(7)};
        b.pointers = 2; b.lines = 7; b.v = 2;
    } else {
        throw std::runtime_error("unknown benchmark: " + name);
    }
    return b;
}

GPProblem problem_from_benchmark(const Benchmark& b, bool include_validation) {
    GPProblem p;
    p.name = b.name;
    p.numeric = b.numeric;
    p.pointers = b.pointers;
    p.lines = b.lines;
    p.v = b.v;
    p.evaluator_names = b.evaluators;
    p.mode = b.mode;

    std::vector<const std::vector<std::string>*> groups{&b.training};
    if (include_validation) groups.push_back(&b.validation);
    if (b.numeric) {
        p.num_domain = b.num_domain;
        int i = 0;
        for (const auto* g : groups)
            for (const auto& text : *g)
                p.num_instances.push_back(
                    parse_numeric_instance(text, b.name + "-" + std::to_string(i++)));
    } else {
        p.domain = parse_domain(b.domain_pddl);
        for (const auto* g : groups)
            for (const auto& text : *g) p.instances.push_back(parse_instance(text, p.domain));
    }
    return p;
}

} // namespace gpsynth
