#include "peiffer/search.hpp"

#include "../support/random.hpp"

#include <doctest.h>

using namespace peiffer;
using peiffer::testing::random_identity_sequence;
using peiffer::testing::random_op;
using peiffer::testing::random_sequence;

namespace {

const Presentation& ab() {
    static const Presentation p = parse_presentation("gens: a b\nrel 1: a\nrel 2: b\n");
    return p;
}
ConjTerm t(const Presentation& p, const char* w, RelatorId r, int e) { return ConjTerm{p.parse(w), r, e}; }

}  // namespace

TEST_CASE("products") {
    const auto& p = ab();
    CHECK(free_reduce(product(p, {t(p, "b", 0, 1)})) == p.parse("baB"));
    CHECK(product(p, {}).empty());
    CHECK(free_reduce(product(p, {t(p, "", 0, 1), t(p, "", 0, -1)})).empty());
    CHECK(is_identity_sequence(p, {t(p, "", 0, 1), t(p, "", 0, -1)}));
    CHECK_FALSE(is_identity_sequence(p, {t(p, "", 0, 1)}));
}

TEST_CASE("trivial sequences") {
    const auto a3 = parse_presentation("gens: a\nrel 1: aaa\n");
    const Sequence z = trivial_sequence(a3, 0);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == ConjTerm{Word{}, 0, 1});
    CHECK(z[1] == ConjTerm{a3.parse("a"), 0, -1});
    CHECK(is_identity_sequence(a3, z));

    const auto abp = parse_presentation("gens: a b\nrel 1: ab\n");
    CHECK(trivial_sequence(abp, 0)[1] == ConjTerm{abp.parse("ab"), 0, -1});
    const auto ab2 = parse_presentation("gens: a b\nrel 1: abab\n");
    CHECK(trivial_sequence(ab2, 0)[1].conjugator == ab2.parse("ab"));
}

TEST_CASE("inverse and conjugate sequences") {
    const auto& p = ab();
    CHECK(inverse_sequence({t(p, "", 0, 1), t(p, "b", 0, -1)}) == Sequence{t(p, "b", 0, 1), t(p, "", 0, -1)});
    CHECK(conjugate_sequence({t(p, "", 0, 1)}, p.parse("b")) == Sequence{t(p, "b", 0, 1)});
    const Sequence s{t(p, "ab", 1, 1)};
    CHECK(conjugate_sequence(s, {}) == s);
}

TEST_CASE("Peiffer operations") {
    const auto& p = ab();
    const Sequence s{t(p, "", 0, 1), t(p, "", 1, 1)};
    const Sequence l = apply_peiffer(p, s, op::Ex{0, op::Direction::Left});
    CHECK(l == Sequence{t(p, "", 1, 1), t(p, "B", 0, 1)});
    CHECK(freely_equal(product(p, l), product(p, s)));
    CHECK(apply_peiffer(p, {t(p, "", 0, 1), t(p, "", 0, -1)}, op::Del{0}).empty());
    const Sequence sub = apply_peiffer(p, {t(p, "aAb", 0, 1)}, op::Sub{0, p.parse("b")});
    CHECK(sub[0].conjugator == p.parse("b"));
    CHECK_THROWS_AS(apply_peiffer(p, s, op::Del{0}), PreconditionViolated);
    CHECK_THROWS_AS(apply_peiffer(p, s, op::Sub{0, p.parse("a")}), PreconditionViolated);
    CHECK_THROWS_AS(apply_peiffer(p, s, op::Ex{1, op::Direction::Left}), PreconditionViolated);
}

TEST_CASE("reduction") {
    const auto& p = ab();
    std::mt19937 g(5);
    for (int k = 0; k < 50; ++k) {
        const Sequence s = random_sequence(g, p, 4);
        CHECK(peiffer_reduce(p, juxtapose(s, inverse_sequence(s))).empty());
    }
    const Sequence irr{t(p, "", 0, 1), t(p, "", 1, 1)};
    CHECK(peiffer_reduce(p, irr) == irr);
    const Sequence mid{t(p, "", 0, 1), t(p, "b", 1, 1), t(p, "", 0, -1)};
    const Sequence r = peiffer_reduce(p, mid);
    CHECK(r.size() == 1);
    CHECK(freely_equal(product(p, r), product(p, mid)));
}

TEST_CASE("property: every operation preserves the product") {
    const auto p = parse_presentation("gens: a b\nrel 1: aa\nrel 1: abAB\nrel 2: bbb\n");
    std::mt19937 g(17);
    for (int k = 0; k < 1000; ++k) {
        const Sequence s = random_sequence(g, p, 5);
        const PeifferOp o = random_op(g, p, s);
        const Sequence s2 = apply_peiffer(p, s, o);
        CHECK(freely_equal(product(p, s), product(p, s2)));
        CHECK(sub_normalize(apply_peiffer(p, s2, inverse_op(p, s, o))) == sub_normalize(s));
    }
}

TEST_CASE("sequence text format") {
    const auto& p = ab();
    const Sequence s = parse_sequence(p, "# comment\nb 1 +\n1 2 -\n");
    CHECK(s == Sequence{t(p, "b", 0, 1), t(p, "", 1, -1)});
    CHECK(parse_sequence(p, format_sequence(p, s)) == s);
    CHECK_THROWS_AS(parse_sequence(p, "b 3 +\n"), ParseError);
}

TEST_CASE("bounded equivalence") {
    const auto& p = ab();
    std::mt19937 g(3);
    const Sequence s = random_sequence(g, p, 3);
    auto r = peiffer_equivalent_bounded(p, s, s);
    CHECK(r.status == EquivalenceResult::Status::Equivalent);
    CHECK(r.script.empty());

    const Sequence a{t(p, "", 0, 1), t(p, "b", 1, 1)};
    r = peiffer_equivalent_bounded(p, juxtapose(a, inverse_sequence(a)), {});
    REQUIRE(r.status == EquivalenceResult::Status::Equivalent);
    CHECK(replay(p, juxtapose(a, inverse_sequence(a)), r.script).empty());

    r = peiffer_equivalent_bounded(p, {t(p, "", 0, 1)}, {t(p, "", 1, 1)});
    CHECK(r.status == EquivalenceResult::Status::NotEquivalent);
}

TEST_CASE("search modulo trivial sequences") {
    const auto a3 = parse_presentation("gens: a\nrel 1: aaa\n");
    SearchBudget b;
    b.allow_trivial = true;
    const auto r = peiffer_equivalent_bounded(a3, trivial_sequence(a3, 0), {}, b);
    CHECK(r.status == EquivalenceResult::Status::Equivalent);
    b.allow_trivial = false;
    b.max_depth = 3;
    CHECK(peiffer_equivalent_bounded(a3, trivial_sequence(a3, 0), {}, b).status != EquivalenceResult::Status::Equivalent);
}

TEST_CASE("serial and parallel frontier expansion agree") {
    const auto p = parse_presentation("gens: a b\nrel 1: aa\nrel 2: bbb\n");
    std::mt19937 g(23);
    std::vector<Sequence> frontier;
    for (int k = 0; k < 40; ++k) frontier.push_back(random_identity_sequence(g, p, 2));
    for (bool trivial : {false, true}) {
        const auto a = expand_frontier_serial(p, frontier, trivial);
        const auto b = expand_frontier_parallel(p, frontier, trivial);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(a[k].key == b[k].key);
            CHECK(a[k].parent == b[k].parent);
        }
    }
}
