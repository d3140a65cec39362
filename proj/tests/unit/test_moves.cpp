#include "peiffer/moves.hpp"

#include "../support/enumerate.hpp"
#include "../support/random.hpp"

#include <doctest.h>

using namespace peiffer;

namespace {

void check_invariants(const Picture& before, const Picture& after) {
    CHECK(validate(after).empty());
    CHECK(euler_counts(after).characteristic() == 2);
    CHECK(freely_equal(boundary_label(before), boundary_label(after)));
}

}  // namespace

TEST_CASE("dipole classification") {
    const auto a3 = parse_presentation("gens: a\nrel 1: aaa\n");
    auto reps = detect_dipoles(dipole_picture(a3, 0, 0));
    REQUIRE_FALSE(reps.empty());
    for (const auto& r : reps) {
        CHECK(r.kind == DipoleReport::Kind::Complete);
        CHECK(r.f == 0);
        CHECK(r.basepoints_share_region);
    }
    reps = detect_dipoles(dipole_picture(a3, 0, 1));
    REQUIRE_FALSE(reps.empty());
    for (const auto& r : reps) {
        CHECK(r.kind == DipoleReport::Kind::Primitive);
        CHECK(r.f == 1);
    }
    CHECK(detect_dipoles(from_sequence(a3, {ConjTerm{{}, 0, 1}})).empty());
}

TEST_CASE("fold and float moves") {
    const auto a1 = parse_presentation("gens: a\nrel 1: a\n");
    const Picture fold = dipole_picture(a1, 0, 0);
    const PictureLibrary none(a1);
    const auto r = search_to_empty(fold, none);
    REQUIRE(r.found);
    CHECK(std::holds_alternative<mv::FoldDelete>(r.script.back()));
    CHECK(replay(fold, r.script).node_count() == 1);
    CHECK(search_to_empty(Picture(a1), none).script.empty());

    const Picture empty(a1);
    const Picture one = apply_move(empty, mv::FloatInsert{kNone, Letter(0, 1)});
    CHECK(one.arc_count() == 1);
    check_invariants(empty, one);
    NodeId pin = kNone;
    for (NodeId n = 1; n < one.node_count(); ++n)
        if (one.node(n).kind == NodeKind::Pin) pin = n;
    REQUIRE(pin != kNone);
    CHECK(apply_move(one, mv::FloatDelete{pin}) == empty);

    const Picture folded = apply_move(empty, mv::FoldInsert{kNone, 0});
    CHECK(folded.vertex_count() == 2);
    check_invariants(empty, folded);
    const auto vs = folded.vertices();
    CHECK(apply_move(folded, mv::FoldDelete{vs[0], vs[1]}) == empty);
}

TEST_CASE("primitive dipoles need the library") {
    const auto a2 = parse_presentation("gens: a\nrel 1: aa\n");
    const Picture d = dipole_picture(a2, 0, 1);
    CHECK_FALSE(search_to_empty(d, PictureLibrary(a2)).found);
    PictureLibrary lib(a2);
    lib.add_primitive_dipoles();
    CHECK(lib.size() >= 1);
    const auto r = search_to_empty(d, lib);
    REQUIRE(r.found);
    REQUIRE(r.script.size() == 1);
    CHECK(std::holds_alternative<mv::DeleteX>(r.script[0]));
    CHECK(replay(d, r.script, &lib).node_count() == 1);
    CHECK(script_from_json(script_to_json(r.script)).size() == 1);

    const Picture ins = apply_move(Picture(a2), mv::InsertX{kNone, 0, false}, &lib);
    CHECK(canonical_code(ins) == canonical_code(lib.entry(0).picture));
    CHECK(replace_subpicture(Picture(a2), {}, lib, 0, {}) == ins);
}

TEST_CASE("replacement needs matching boundaries") {
    const auto a2 = parse_presentation("gens: a b\nrel 1: aa\nrel 2: bbb\n");
    PictureLibrary lib(a2);
    lib.add_primitive_dipoles();
    const Picture d = dipole_picture(a2, 1, 0);
    const auto vs = d.vertices();
    const auto& x = lib.entry(0).picture;
    CHECK_THROWS_AS(replace_subpicture(d, {vs[0]}, lib, 0, {x.vertices()[0]}), BoundaryMismatch);
}

TEST_CASE("property: every shrinking move keeps the picture valid") {
    const auto a3 = parse_presentation("gens: a\nrel 1: aaa\n");
    PictureLibrary lib(a3);
    lib.add_primitive_dipoles();
    const auto pics = testing::connected_power_pictures(a3, 2);
    REQUIRE_FALSE(pics.empty());
    std::size_t applied = 0;
    for (const auto& pic : pics)
        for (const auto& m : shrinking_moves(pic, lib)) {
            const Picture q = apply_move(pic, m, &lib);
            check_invariants(pic, q);
            ++applied;
        }
    CHECK(applied > 0);
}

TEST_CASE("move scripts round trip through JSON") {
    MoveScript s{mv::Bridge{3, 7},          mv::FloatInsert{kNone, Letter(1, -1)}, mv::FloatDelete{4},
                 mv::FoldInsert{2, 1},      mv::FoldDelete{1, 2},                  mv::DeleteX{1, 0, true},
                 mv::InsertX{kNone, 2, false}};
    const auto back = script_from_json(script_to_json(s));
    CHECK(script_to_json(back) == script_to_json(s));
    CHECK_THROWS_AS(script_from_json("[{\"move\": \"Teleport\"}]"), Error);
}
