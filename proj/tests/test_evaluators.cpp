#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "gpsynth/evaluators.hpp"
#include "gpsynth/generators.hpp"

using namespace gpsynth;

TEST_CASE("evaluator names round-trip") {
    for (const char* name : {"f1", "h5", "flm", "fha", "fln", "fcn"}) {
        auto id = eval_id_from_name(name);
        REQUIRE(id.has_value());
        CHECK(eval_name(*id) == std::string(name));
    }
    CHECK_FALSE(eval_id_from_name("nope").has_value());
}

TEST_CASE("goto count and instruction count read the program text") {
    GPProblem p = testing::visitall_problem({3});
    PlanningProgram prog = testing::visitall_walker(p);
    // walker: inc, visit, inc, goto, end
    CHECK(f1(prog) == 1);
    CHECK(f_ln(prog) == 4); // everything defined except the goto

    PlanningProgram prog2 = parse_program(
        "0. test_at(z1)\n1. goto(0,y_z=0)\n2. goto(0,y_z=1)\n3. end", p);
    CHECK(f1(prog2) == 2);
    CHECK(f_ln(prog2) == 1); // tests do not count either

    CHECK(f1(PlanningProgram(p.lines)) == 0);
    CHECK(f_ln(PlanningProgram(p.lines)) == 0);
}

TEST_CASE("the helpful-action evaluator charges only unhelpful planning lines") {
    Benchmark b = generate_benchmark("ontable");
    GPProblem p = problem_from_benchmark(b);
    HelpfulActionSet h = lifted_helpful_actions(p);
    REQUIRE_FALSE(h.contains("stack"));
    REQUIRE(h.contains("unstack"));

    int stack = p.domain.schema_index("stack");
    int unstack = p.domain.schema_index("unstack");
    PlanningProgram prog(p.lines);
    prog.lines[0] = make_action(unstack, {0, 1});
    prog.lines[1] = make_action(stack, {0, 1});
    prog.lines[2] = make_action(stack, {1, 0});
    prog.lines[3] = make_ram(Op::Inc, 0); // pointer moves are free
    CHECK(f_ha(prog, p, h) == 2);
}

TEST_CASE("lexicographic comparison is strict and positional") {
    CHECK(lex_less({0, 5}, {1, 0}));
    CHECK(lex_less({1, 0}, {1, 1}));
    CHECK_FALSE(lex_less({1, 1}, {1, 1}));
    CHECK_FALSE(lex_less({2, 0}, {1, 9}));
}

TEST_CASE("the evaluation vector follows the configured stack order") {
    GPProblem p = testing::visitall_problem({3});
    p.evaluator_names = {"f1", "h5"};
    EvalContext ctx;
    ctx.prepare(p, {0});
    REQUIRE(ctx.stack.size() == 2);

    PlanningProgram walker = testing::visitall_walker(p);
    std::vector<InstanceRunData> runs{evaluate_run(walker, ctx, 0)};
    std::vector<double> v = evaluate(walker, ctx, runs);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == 1);   // f1: one goto
    CHECK(v[1] == 0.0); // h5: solved

    PlanningProgram empty(p.lines);
    std::vector<InstanceRunData> eruns{evaluate_run(empty, ctx, 0)};
    std::vector<double> ev = evaluate(empty, ctx, eruns);
    CHECK(ev[0] == 0);
    CHECK(ev[1] > 0.0);
}

TEST_CASE("dynamic evaluators sum over the active instances") {
    GPProblem p = testing::visitall_problem({3, 4});
    EvalContext ctx;
    ctx.prepare(p, {0, 1});
    PlanningProgram empty(p.lines);
    std::vector<InstanceRunData> runs;
    for (std::size_t pos = 0; pos < 2; ++pos) runs.push_back(evaluate_run(empty, ctx, pos));
    std::vector<double> both = evaluate(empty, ctx, runs);

    EvalContext one;
    one.prepare(p, {0});
    std::vector<InstanceRunData> r0{evaluate_run(empty, one, 0)};
    EvalContext two;
    two.prepare(p, {1});
    std::vector<InstanceRunData> r1{evaluate_run(empty, two, 0)};
    CHECK(both[0] ==
          doctest::Approx(evaluate(empty, one, r0)[0] + evaluate(empty, two, r1)[0]));
}

TEST_CASE("the coverage evaluator counts untouched atoms and pairs") {
    GPProblem p = testing::visitall_problem({3});
    p.evaluator_names = {"fcn"};
    EvalContext ctx;
    ctx.prepare(p, {0});
    PlanningProgram prog = parse_program("0. test_at(z1)\n1. end", p);
    InstanceRunData r = evaluate_run(prog, ctx, 0);
    CHECK(r.uncovered == p.instances[0].atoms.size() - 1);
    std::vector<double> v = evaluate(prog, ctx, {r});
    CHECK(v[0] == static_cast<double>(r.uncovered));

    // without fcn in the stack the coverage run is skipped
    p.evaluator_names = {"h5"};
    EvalContext plain;
    plain.prepare(p, {0});
    CHECK(evaluate_run(prog, plain, 0).uncovered == 0);
}

TEST_CASE("the landmark evaluator drops to zero on a solving program") {
    Benchmark b = generate_benchmark("lock");
    GPProblem p = problem_from_benchmark(b);
    p.evaluator_names = {"flm", "f1"};
    EvalContext ctx;
    ctx.prepare(p, {0});
    REQUIRE(ctx.graphs.size() == 1);
    CHECK(ctx.needs(EvalId::Flm));
    CHECK_FALSE(ctx.needs(EvalId::Fha));

    PlanningProgram empty(p.lines);
    InstanceRunData r = evaluate_run(empty, ctx, 0);
    CHECK(r.unaccepted_landmarks > 0);
    CHECK(evaluate(empty, ctx, {r})[0] == static_cast<double>(r.unaccepted_landmarks));
}

TEST_CASE("failed runs evaluate as if stopped at their last state") {
    GPProblem p = testing::visitall_problem({3});
    EvalContext ctx;
    ctx.prepare(p, {0});
    // ends immediately without reaching the goal
    PlanningProgram prog = parse_program("0. end", p);
    InstanceRunData r = evaluate_run(prog, ctx, 0);
    CHECK(r.outcome.kind == RunOutcome::Kind::Failed);
    std::vector<double> v = evaluate(prog, ctx, {r});
    CHECK(v[0] > 0.0); // h5 of the initial state
}
