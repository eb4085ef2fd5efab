#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "gpsynth/model.hpp"
#include "gpsynth/numeric.hpp"
#include "gpsynth/pddl.hpp"

using namespace gpsynth;

TEST_CASE("grounding enumerates the full atom universe in fixed order") {
    StripsDomain d = parse_domain(testing::kVisitallDomain);
    StripsInstance i = parse_instance(testing::visitall_chain(3), d);
    // at: 3, visited: 3, adjacent: 9
    CHECK(i.atoms.size() == 15);
    // atom_id inverts the universe order for every atom
    for (std::size_t a = 0; a < i.atoms.size(); ++a)
        CHECK(i.atom_id(i.atoms[a].predicate, i.atoms[a].objects) == static_cast<int>(a));
}

TEST_CASE("applicability and effect application") {
    StripsDomain d = parse_domain(testing::kVisitallDomain);
    StripsInstance i = parse_instance(testing::visitall_chain(3), d);
    int visit = d.schema_index("visit");
    REQUIRE(visit >= 0);

    GroundAction a01 = ground_over_pointers(d, visit, {0, 1}, i);
    CHECK(a01.valid);
    CHECK(applicable(i.init, a01));
    Bitset s = apply(i.init, a01);
    int at0 = i.atom_id(d.predicate_index("at"), {0});
    int at1 = i.atom_id(d.predicate_index("at"), {1});
    int vis1 = i.atom_id(d.predicate_index("visited"), {1});
    CHECK_FALSE(s.test(static_cast<std::size_t>(at0)));
    CHECK(s.test(static_cast<std::size_t>(at1)));
    CHECK(s.test(static_cast<std::size_t>(vis1)));

    // c0 and c2 are not adjacent on the chain
    GroundAction a02 = ground_over_pointers(d, visit, {0, 2}, i);
    CHECK_FALSE(applicable(i.init, a02));

    // self-move needs (adjacent c0 c0), never true here
    GroundAction a00 = ground_over_pointers(d, visit, {0, 0}, i);
    CHECK_FALSE(applicable(i.init, a00));
}

TEST_CASE("an action whose add and delete lists overlap is invalid") {
    // visit(?a,?a) adds (at ?a) and deletes (at ?a) under repetition
    StripsDomain d = parse_domain(testing::kVisitallDomain);
    StripsInstance i = parse_instance(testing::visitall_chain(3), d);
    GroundAction a = ground_over_pointers(d, d.schema_index("visit"), {1, 1}, i);
    CHECK_FALSE(a.valid);
    CHECK_FALSE(applicable(i.init, a));
}

TEST_CASE("typed instantiation rejects ill-typed tuples") {
    StripsDomain d = parse_domain(testing::kTypedDomain);
    StripsInstance i = parse_instance(testing::kTypedInstance, d);
    CHECK(d.typed);
    // objects: t1 (truck), b1, b2 (box)
    int t1 = i.object_index("t1");
    int b1 = i.object_index("b1");
    int load = d.schema_index("load");
    CHECK(ground_over_pointers(d, load, {b1, t1}, i).valid);
    CHECK_FALSE(ground_over_pointers(d, load, {t1, b1}, i).valid); // swapped types
    CHECK_FALSE(ground_over_pointers(d, load, {b1, b1}, i).valid); // box as truck
    // the atom universe only holds type-consistent atoms:
    // in: 2 boxes x 1 truck, out: 3 objects? no - out is typed box, so 2
    int in = d.predicate_index("in");
    int out = d.predicate_index("out");
    std::size_t in_count = 0, out_count = 0;
    for (const auto& a : i.atoms) {
        in_count += (a.predicate == in);
        out_count += (a.predicate == out);
    }
    CHECK(in_count == 2);
    CHECK(out_count == 2);
}

TEST_CASE("subtype chain resolves through intermediate types") {
    StripsDomain d;
    d.typed = true;
    d.types = {{"vehicle", "object"}, {"truck", "vehicle"}};
    CHECK(d.is_subtype("truck", "vehicle"));
    CHECK(d.is_subtype("truck", "object"));
    CHECK(d.is_subtype("vehicle", "object"));
    CHECK_FALSE(d.is_subtype("vehicle", "truck"));
    CHECK_FALSE(d.is_subtype("object", "truck"));
}

TEST_CASE("goal satisfaction on bit states and register states") {
    StripsDomain d = parse_domain(testing::kVisitallDomain);
    StripsInstance i = parse_instance(testing::visitall_chain(2), d);
    CHECK_FALSE(goal_satisfied_strips(i.init, i));
    Bitset s = i.init;
    for (int g : i.goal) s.set(static_cast<std::size_t>(g));
    CHECK(goal_satisfied_strips(s, i));

    NumericInstance ni;
    ni.registers = {3, 0};
    ni.goal = {{0, 3}, {1, 1}};
    CHECK_FALSE(goal_satisfied_numeric(ni.registers, ni));
    CHECK(goal_satisfied_numeric({3, 1}, ni));
}

TEST_CASE("cached grounding matches pointer instantiation on every tuple") {
    StripsDomain d = parse_domain(testing::kGripperDomain);
    StripsInstance i = parse_instance(R"((define (problem g) (:domain gripper)
      (:objects rooma roomb b0)
      (:init (at-robby rooma) (free) (at b0 rooma))
      (:goal (and (at b0 roomb)))))",
                                     d);
    int n = static_cast<int>(i.objects.size());
    for (int s = 0; s < static_cast<int>(d.schemas.size()); ++s) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                GroundAction direct = ground_over_pointers(d, s, {a, b}, i);
                int tuple[2] = {a, b};
                const GroundAction& cached = i.ground(s, tuple, 2);
                CHECK(direct.valid == cached.valid);
                if (direct.valid) {
                    CHECK(direct.pre == cached.pre);
                    CHECK(direct.add == cached.add);
                    CHECK(direct.del == cached.del);
                }
            }
    }
}

TEST_CASE("builtin numeric domains expose their schemas") {
    for (const auto& name : numeric_domain_names()) {
        const NumericDomain* nd = find_numeric_domain(name);
        REQUIRE(nd != nullptr);
        CHECK_FALSE(nd->schemas.empty());
        for (const auto& s : nd->schemas) CHECK(nd->schema_index(s.name) >= 0);
    }
    CHECK(find_numeric_domain("no-such-domain") == nullptr);
}
