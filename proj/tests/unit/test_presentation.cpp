#include "peiffer/presentation.hpp"

#include <doctest.h>

using namespace peiffer;

TEST_CASE("parse presentations") {
    const auto p = parse_presentation("gens: a b\nrel 1: a\nrel 2: b\n");
    CHECK(p.generator_count() == 2);
    CHECK(p.relator_count() == 2);
    CHECK(p.family_count() == 2);
    CHECK(p.family(FamilyIndex{1}) == std::set<RelatorId>{0});
    CHECK(p.family(FamilyIndex{2}) == std::set<RelatorId>{1});
    CHECK(validate_rh(p).empty());
    CHECK(families_disjoint(p));
    CHECK(shared_relators(p, FamilyIndex{1}).empty());

    CHECK_THROWS_AS(parse_presentation("gens: a\nrel 1: aA\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel 1: Aba\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("rel 1: a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel 2: a\n"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_presentation("gens: a\n\nrel 1: aA\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 8);
    }
}

TEST_CASE("shared relators") {
    const auto p = parse_presentation("gens: a\nrel 1: aaa\nrel 2: aaa\n");
    CHECK(p.relator_count() == 1);
    CHECK(shared_relators(p, FamilyIndex{1}) == std::set<RelatorId>{0});
    CHECK_FALSE(families_disjoint(p));

    const auto q = parse_presentation("gens: a b c\nrel 1: a\nrel 1: c\nrel 2: b\nrel 2: c\n");
    CHECK(shared_relators(q, FamilyIndex{2}) == std::set<RelatorId>{1});
    CHECK(q.complement_relators(FamilyIndex{1}) == std::set<RelatorId>{1, 2});
}

TEST_CASE("RH hypothesis") {
    CHECK(validate_rh(parse_presentation("gens: a b\nrel 1: aa\nrel 1: bb\n")).empty());
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel 1: aa\nrel 1: AA\n"), ValidationError);
    CHECK_THROWS_AS(parse_presentation("gens: a b\nrel 1: ab\nrel 1: ba\n"), ValidationError);
}

TEST_CASE("family index range") {
    const auto p = parse_presentation("gens: a b\nrel 1: a\nrel 2: b\n");
    CHECK_THROWS(p.family(FamilyIndex{3}));
    CHECK_THROWS(p.family(FamilyIndex{0}));
}
