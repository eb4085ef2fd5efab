#pragma once

// Shared fixtures for the unit tests: small embedded PDDL texts and builders.

#include <string>

#include "gpsynth/generators.hpp"
#include "gpsynth/model.hpp"
#include "gpsynth/pddl.hpp"
#include "gpsynth/program.hpp"

namespace testing {

inline const char* kVisitallDomain = R"((define (domain visitall)
  (:requirements :strips)
  (:predicates (at ?c) (visited ?c) (adjacent ?a ?b))
  (:action visit
    :parameters (?from ?to)
    :precondition (and (at ?from) (adjacent ?from ?to))
    :effect (and (at ?to) (visited ?to) (not (at ?from)))))
)";

inline const char* kGripperDomain = R"((define (domain gripper)
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

inline const char* kTypedDomain = R"((define (domain depot)
  (:requirements :strips :typing)
  (:types truck box - object)
  (:predicates (in ?b - box ?t - truck) (out ?b - box))
  (:action load
    :parameters (?b - box ?t - truck)
    :precondition (and (out ?b))
    :effect (and (in ?b ?t) (not (out ?b)))))
)";

inline const char* kTypedInstance = R"((define (problem depot-1) (:domain depot)
  (:objects t1 - truck b1 b2 - box)
  (:init (out b1) (out b2))
  (:goal (and (in b1 t1) (in b2 t1))))
)";

// A chain visitall instance c0 - c1 - ... - c<k-1>, start at c0.
inline std::string visitall_chain(int k) {
    std::string objs, init = "(at c0) (visited c0)", goal;
    for (int i = 0; i < k; ++i) {
        objs += " c" + std::to_string(i);
        goal += " (visited c" + std::to_string(i) + ")";
        if (i + 1 < k) {
            init += " (adjacent c" + std::to_string(i) + " c" + std::to_string(i + 1) + ")";
            init += " (adjacent c" + std::to_string(i + 1) + " c" + std::to_string(i) + ")";
        }
    }
    return "(define (problem visitall-" + std::to_string(k) + ") (:domain visitall)\n" +
           "  (:objects" + objs + ")\n  (:init " + init + ")\n  (:goal (and" + goal + ")))\n";
}

inline gpsynth::GPProblem visitall_problem(std::vector<int> sizes, int pointers = 2,
                                           int lines = 7, int v = 1) {
    gpsynth::GPProblem p;
    p.name = "visitall";
    p.domain = gpsynth::parse_domain(kVisitallDomain);
    for (int k : sizes)
        p.instances.push_back(gpsynth::parse_instance(visitall_chain(k), p.domain));
    p.pointers = pointers;
    p.lines = lines;
    p.v = v;
    p.evaluator_names = {"h5", "f1"};
    return p;
}

// The known visitall walker: sweep right from c0, visiting every cell.
// Both pointers advance in lock step; the final inc(z1) hits the bound,
// clears the flag and falls through to end.
inline gpsynth::PlanningProgram visitall_walker(const gpsynth::GPProblem& p) {
    return gpsynth::parse_program("0. inc(z2)\n"
                                  "1. visit(z1,z2)\n"
                                  "2. inc(z1)\n"
                                  "3. goto(0,y_z=0)\n"
                                  "4. end\n",
                                  p);
}

} // namespace testing
