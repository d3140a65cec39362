#include "peiffer/equator.hpp"
#include "peiffer/render.hpp"

#include "../support/random.hpp"

#include <doctest.h>

using namespace peiffer;

namespace {

const Presentation& ab() {
    static const Presentation p = parse_presentation("gens: a b\nrel 1: a\nrel 2: b\n");
    return p;
}
ConjTerm t(const Presentation& p, const char* w, RelatorId r, int e) { return ConjTerm{p.parse(w), r, e}; }

const FamilyIndex one{1};

Sequence cert_r() {
    const auto& p = ab();
    return {t(p, "", 0, 1), t(p, "b", 0, 1), t(p, "", 0, -1), t(p, "b", 0, -1)};
}
// product is (abaBAbAB)^-1
Sequence cert_n() {
    const auto& p = ab();
    return {t(p, "", 1, 1), t(p, "a", 1, -1), t(p, "aa", 1, 1), t(p, "a", 1, -1)};
}

bool pure_commutators(const FactorizationCertificate& c) {
    for (const auto& f : c.factors)
        if (!std::holds_alternative<eq::CommutatorFactor>(f)) return false;
    return true;
}

}  // namespace

TEST_CASE("glue") {
    const auto& p = ab();
    const Word u = p.parse("abaBAbAB");
    REQUIRE(freely_equal(product(p, cert_n()), inverse(u)));
    const EquatorPicture e = glue(p, cert_r(), cert_n(), one, u);
    CHECK(e.size() == 8);
    CHECK(e.count(Side::R) == 4);
    CHECK(validate(e).empty());
    CHECK(equatorial_label(e) == u);
    CHECK(is_spherical(e.picture()));
    CHECK(e.picture().vertex_count() == 8);

    CHECK_THROWS_AS(glue(p, cert_r(), cert_r(), one, u), BoundaryMismatch);
    CHECK_THROWS_AS(glue(p, {}, {}, one, {}), PreconditionViolated);
    // r_2 terms on the r_1 side
    CHECK_THROWS_AS(glue(p, cert_n(), cert_r(), one, inverse(u)), InadmissibleMove);

    const auto s = parse_presentation("gens: a\nrel 1: a\nrel 2: a\n");
    const EquatorPicture two = glue(s, {t(s, "", 0, 1)}, {t(s, "", 0, -1)}, one, s.parse("a"));
    CHECK(two.size() == 2);
}

TEST_CASE("commute deltas") {
    const auto& p = ab();
    const EquatorPicture e = glue(p, cert_r(), cert_n(), one, p.parse("abaBAbAB"));
    // last R term pushed past the first N term
    auto [moved, d] = apply_admissible(e, op::Ex{3, op::Direction::Left});
    REQUIRE(std::holds_alternative<eq::CommutatorFactor>(d));
    CHECK(freely_equal(equatorial_label(e), concat(expand(p, d), equatorial_label(moved))));
    auto [same, d2] = apply_admissible(e, op::Ex{0, op::Direction::Left});
    CHECK(std::holds_alternative<eq::FreeEquality>(d2));
    CHECK(freely_equal(equatorial_label(e), equatorial_label(same)));
    auto [ins, d3] = apply_admissible(e, op::Ins{0, t(p, "", 1, 1)});
    CHECK(ins.sides()[0] == Side::N);
    CHECK(std::holds_alternative<eq::FreeEquality>(d3));

    const auto sh = parse_presentation("gens: a\nrel 1: aaa\nrel 2: aaa\n");
    const EquatorPicture z(sh, one, {}, {});
    CHECK_THROWS_AS(apply_admissible(z, op::Ins{0, t(sh, "", 0, 1)}), InadmissibleMove);
}

TEST_CASE("factorization of the commutator example") {
    const auto& p = ab();
    const Word u = p.parse("abaBAbAB");
    const auto r = factorize(p, u, one);
    REQUIRE(r.status == FactorizeResult::Status::Verified);
    CHECK(r.certificate.verify(p));
    CHECK(pure_commutators(r.certificate));
    REQUIRE(r.glued);
    const EquatorPicture end = replay_factorization(*r.glued, r.script, r.deltas);
    CHECK(equatorial_label(end).empty());

    const auto given = factorize(p, u, one, nullptr, {}, cert_r(), cert_n());
    CHECK(given.status == FactorizeResult::Status::Verified);
    CHECK(pure_commutators(given.certificate));
}

TEST_CASE("property: commutator products factor into commutators") {
    const auto& p = ab();
    std::mt19937 g(53);
    for (int k = 0; k < 30; ++k) {
        Word u;
        for (int j = 1 + static_cast<int>(g() % 3); j > 0; --j) {
            const Word r = conjugate(power(p.parse("a"), g() % 2 ? 1 : -1), testing::random_word(g, 2, 3));
            const Word n = conjugate(power(p.parse("b"), g() % 2 ? 1 : -1), testing::random_word(g, 2, 3));
            u.append(conjugate(commutator(r, n), testing::random_word(g, 2, 2)));
        }
        const auto res = factorize(p, u, one);
        REQUIRE(res.status == FactorizeResult::Status::Verified);
        CHECK(pure_commutators(res.certificate));
        CHECK_NOTHROW(replay_factorization(*res.glued, res.script, res.deltas));
    }
}

TEST_CASE("shared relators") {
    const auto p = parse_presentation("gens: a b\nrel 1: aaa\nrel 2: aaa\n");
    for (const char* w : {"", "b", "bab", "aB"}) {
        const Word u = conjugate(p.parse("aaa"), p.parse(w));
        const auto r = factorize(p, u, one);
        REQUIRE(r.status == FactorizeResult::Status::Verified);
        REQUIRE(r.certificate.factors.size() == 1);
        const auto* f = std::get_if<eq::SharedRelatorFactor>(&r.certificate.factors[0]);
        REQUIRE(f);
        CHECK(f->conjugator == free_reduce(p.parse(w)));
    }
    const auto gl = generator_list(p, one, nullptr, 5);
    CHECK(gl.cosets.size() == 5);
    CHECK(gl.generators.size() == 5);
    for (std::size_t k = 0; k < gl.generators.size(); ++k)
        CHECK(gl.generators[k].word == conjugate(p.parse("aaa"), gl.cosets[k]));

    const auto a1 = parse_presentation("gens: a\nrel 1: a\nrel 2: a\n");
    const auto g1 = generator_list(a1, one, nullptr, 8);
    CHECK(g1.complete);
    REQUIRE(g1.generators.size() == 1);
    CHECK(g1.generators[0].word == a1.parse("a"));
}

TEST_CASE("disjoint families have no generators") {
    const auto gl = generator_list(ab(), one, nullptr, 8);
    CHECK(gl.generators.empty());
}

TEST_CASE("negative control") {
    const auto& p = ab();
    const auto r = factorize(p, p.parse("a"), one);
    CHECK(r.status == FactorizeResult::Status::PreconditionFailed);
    CHECK(r.certificate.factors.empty());
    CHECK(r.message.find("N_i") != std::string::npos);
    CHECK(factorize(p, {}, one).status == FactorizeResult::Status::Verified);
}

TEST_CASE("Y-pictures") {
    // abAB filled by one r_1 disc on one side and by a, b discs on the other
    const auto p = parse_presentation("gens: a b\nrel 1: abAB\nrel 2: a\nrel 2: b\n");
    const Sequence n{t(p, "", 1, 1), t(p, "", 2, 1), t(p, "", 1, -1), t(p, "", 2, -1)};
    const Picture y = glue(p, {t(p, "", 0, 1)}, inverse_sequence(n), one, p.relator(0)).picture();
    REQUIRE(is_spherical(y));
    YLibrary lib(p, one);
    lib.add("y", y);
    const auto& ent = lib.entries()[0];
    REQUIRE(ent.sides.size() == 5);
    Word v;
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK((ent.sides[k] == Side::R) == (ent.sequence[k].relator == 0));
        if (ent.sides[k] == Side::R) v.append(term_word(p, ent.sequence[k]));
    }
    CHECK(freely_equal(ent.v, v));
    // the group is trivial: one coset, no shared relators
    const auto gl = generator_list(p, one, &lib, 3);
    CHECK(gl.complete);
    REQUIRE(gl.generators.size() == 1);
    CHECK(gl.generators[0].kind == GeneratorDescriptor::Kind::YPicture);
    CHECK(gl.generators[0].word == free_reduce(ent.separating));

    // the Y-block itself, as an equator picture, deletes in one step
    const EquatorPicture e(p, one, ent.sequence, ent.sides);
    auto [rest, d] = apply_admissible(e, eq::DeleteY{0, 0, {}, 1}, &lib);
    CHECK(rest.size() == 0);
    REQUIRE(std::holds_alternative<eq::YFactor>(d));
    CHECK(freely_equal(equatorial_label(e), expand(p, d)));
}

TEST_CASE("equator rendering") {
    const auto& p = ab();
    const EquatorPicture e = glue(p, cert_r(), cert_n(), one, p.parse("abaBAbAB"));
    const std::string svg = render_svg(e);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(render_svg(e) == svg);
    std::size_t disks = 0;
    for (std::size_t k = svg.find("r=\"16\""); k != std::string::npos; k = svg.find("r=\"16\"", k + 1)) ++disks;
    CHECK(disks == 8);
    CHECK(render_svg(Picture(p)).find("<circle") != std::string::npos);
}

TEST_CASE("certificate JSON") {
    const auto& p = ab();
    const auto r = factorize(p, p.parse("abaBAbAB"), one);
    const std::string js = certificate_to_json(p, r.certificate);
    CHECK(js.find("\"verified\": true") != std::string::npos);
    CHECK(certificate_to_json(p, r.certificate) == js);
}
