#include "peiffer/eta.hpp"
#include "peiffer/membership.hpp"

#include "../support/random.hpp"

#include <doctest.h>

using namespace peiffer;

namespace {

const Presentation& ab() {
    static const Presentation p = parse_presentation("gens: a b\nrel 1: a\nrel 2: b\n");
    return p;
}
ConjTerm t(const Presentation& p, const char* w, RelatorId r, int e) { return ConjTerm{p.parse(w), r, e}; }

// Independent η: multiply the family-i term words by hand.
Word eta_oracle(const Presentation& p, const Sequence& s, FamilyIndex i) {
    Word w;
    for (const auto& term : s)
        if (p.in_family(term.relator, i)) {
            w.append(term.conjugator);
            w.append(power(p.relator(term.relator), term.exponent));
            w.append(inverse(term.conjugator));
        }
    return free_reduce(w);
}

}  // namespace

TEST_CASE("eta images") {
    const auto& p = ab();
    const FamilyIndex one{1};
    CHECK(eta_image(p, {t(p, "", 1, 1), t(p, "", 0, 1), t(p, "", 0, -1), t(p, "", 1, -1)}, one).empty());
    const auto a3 = parse_presentation("gens: a\nrel 1: aaa\n");
    CHECK(eta_image(a3, trivial_sequence(a3, 0), one).empty());

    const Sequence s{t(p, "", 0, 1),  t(p, "b", 0, 1),  t(p, "", 0, -1), t(p, "b", 0, -1),
                     t(p, "", 1, 1),  t(p, "a", 1, -1), t(p, "aa", 1, 1), t(p, "a", 1, -1)};
    CHECK(eta_image(p, s, one) == p.parse("abaBAbAB"));
    CHECK(eta_image(p, s, one) == commutator(p.parse("a"), p.parse("baB")));
}

TEST_CASE("eta certificates") {
    const auto& p = ab();
    const FamilyIndex one{1};
    const Sequence s{t(p, "", 1, -1), t(p, "", 0, -1), t(p, "", 0, 1), t(p, "", 1, 1)};
    const auto del = eta_certificate(p, s, op::Del{1}, one);
    CHECK(del.verify(p));
    REQUIRE(del.factors.size() == 1);
    CHECK(std::holds_alternative<FreeEquality>(del.factors[0]));

    // an r_1 term pushed past an r_2 term
    const Sequence pei{t(p, "", 1, -1), t(p, "", 0, -1), t(p, "", 0, 1), t(p, "", 1, 1)};
    const auto ex = eta_certificate(p, pei, op::Ex{2, op::Direction::Left}, one);
    CHECK(ex.verify(p));
    CHECK(freely_equal(concat(inverse(ex.old_V), ex.new_V), commutator(p.parse("A"), p.parse("B"))));

    const auto two = parse_presentation("gens: a b\nrel 1: aa\nrel 1: bbb\nrel 2: abAB\n");
    const Sequence rr{t(two, "", 0, 1), t(two, "", 1, 1), t(two, "", 1, -1), t(two, "", 0, -1)};
    const auto same = eta_certificate(two, rr, op::Ex{0, op::Direction::Left}, one);
    CHECK(same.verify(two));
    CHECK(freely_equal(same.old_V, same.new_V));
}

TEST_CASE("property: eta certificates verify and match the oracle") {
    const auto p = parse_presentation("gens: a b\nrel 1: aa\nrel 1: abAB\nrel 2: bbb\n");
    std::mt19937 g(29);
    for (int k = 0; k < 300; ++k) {
        const Sequence s = testing::random_identity_sequence(g, p, 3);
        const PeifferOp o = testing::random_op(g, p, s);
        for (std::size_t i = 1; i <= 2; ++i) {
            const auto c = eta_certificate(p, s, o, FamilyIndex{i});
            CHECK(c.verify(p));
            CHECK(c.old_V == eta_oracle(p, s, FamilyIndex{i}));
            CHECK(c.new_V == eta_oracle(p, apply_peiffer(p, s, o), FamilyIndex{i}));
        }
    }
}

TEST_CASE("membership") {
    const auto& p = ab();
    const FamilyIndex one{1};
    const MembershipOracle o;
    const Word u = p.parse("abaBAbAB");
    auto r = membership(p, o, u, one, ClosureTarget::RClosure);
    REQUIRE(r.kind == MembershipResult::Kind::Yes);
    CHECK(freely_equal(product(p, r.certificate), u));
    for (const auto& term : r.certificate) CHECK(p.in_family(term.relator, one));
    r = membership(p, o, u, one, ClosureTarget::NClosure);
    REQUIRE(r.kind == MembershipResult::Kind::Yes);
    CHECK(freely_equal(product(p, r.certificate), u));

    r = membership(p, o, p.parse("a"), one, ClosureTarget::NClosure);
    CHECK(r.kind == MembershipResult::Kind::No);
    CHECK_FALSE(r.witness.empty());
    r = membership(p, o, {}, one, ClosureTarget::RClosure);
    CHECK(r.kind == MembershipResult::Kind::Yes);
    CHECK(r.certificate.empty());
}

TEST_CASE("membership over power relators") {
    const auto p = parse_presentation("gens: a b\nrel 1: aaa\nrel 2: bb\n");
    const MembershipOracle o;
    const auto yes = membership_in(p, o, p.parse("baaaB"), {0});
    REQUIRE(yes.kind == MembershipResult::Kind::Yes);
    CHECK(freely_equal(product(p, yes.certificate), p.parse("baaaB")));
    CHECK(membership_in(p, o, p.parse("aa"), {0}).kind == MembershipResult::Kind::No);
    CHECK(membership_in(p, o, p.parse("b"), {0, 1}).kind == MembershipResult::Kind::No);
}

TEST_CASE("property: certificates multiply out") {
    const auto p = parse_presentation("gens: a b\nrel 1: a\nrel 2: b\n");
    std::mt19937 g(31);
    const MembershipOracle o;
    for (int k = 0; k < 200; ++k) {
        Word w;
        for (int j = 0; j < 3; ++j)
            w.append(conjugate(power(p.parse("a"), g() % 2 ? 1 : -1), testing::random_word(g, 2, 3)));
        const auto r = membership(p, o, w, FamilyIndex{1}, ClosureTarget::RClosure);
        REQUIRE(r.kind == MembershipResult::Kind::Yes);
        CHECK(freely_equal(product(p, r.certificate), w));
    }
}
