// Acceptance gate: one PASS/FAIL line per criterion; exit code 1 if any fails.
#include "peiffer/equator.hpp"
#include "peiffer/eta.hpp"
#include "peiffer/search.hpp"

#include "../support/enumerate.hpp"
#include "../support/random.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace peiffer;
using namespace peiffer::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Presentation fixture(const std::string& name) {
    std::ifstream in(std::string(PEIFFER_FIXTURES) + "/" + name);
    if (!in) throw Error("missing fixture " + name);
    std::stringstream s;
    s << in.rdbuf();
    return parse_presentation(s.str());
}

// Products by plain concatenation, independent of product().
Word oracle_product(const Presentation& p, const Sequence& s) {
    Word w;
    for (const auto& t : s) {
        w.append(t.conjugator);
        w.append(power(p.relator(t.relator), t.exponent));
        w.append(inverse(t.conjugator));
    }
    return free_reduce(w);
}

Word oracle_eta(const Presentation& p, const Sequence& s, FamilyIndex i) {
    Sequence kept;
    for (const auto& t : s)
        if (p.in_family(t.relator, i)) kept.push_back(t);
    return oracle_product(p, kept);
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome crit1() {
    const auto t0 = Clock::now();
    const std::vector<Presentation> ps{fixture("ab_disjoint.pres"), fixture("a3_shared.pres"), fixture("comm.pres")};
    std::mt19937 g(1001);
    std::size_t ok = 0;
    const std::size_t n = 10000;
    for (std::size_t k = 0; k < n; ++k) {
        const Presentation& p = ps[k % ps.size()];
        const Sequence s = random_sequence(g, p, 6);
        const PeifferOp o = random_op(g, p, s);
        ok += oracle_product(p, s) == oracle_product(p, apply_peiffer(p, s, o));
    }
    const double secs = seconds_since(t0);
    return {ok == n && secs < 30, std::to_string(ok) + "/" + std::to_string(n) + " products preserved in " +
                                      std::to_string(secs) + " s"};
}

Outcome crit2() {
    const std::vector<Presentation> ps{fixture("ab_disjoint.pres"), fixture("a3_shared.pres"), fixture("comm.pres")};
    std::mt19937 g(2002);
    std::size_t ok = 0;
    const std::size_t n = 1000;
    for (std::size_t k = 0; k < n; ++k) {
        const Presentation& p = ps[k % ps.size()];
        const Sequence s = random_sequence(g, p, 5);
        const Picture pic = from_sequence(p, s);
        const Sequence back = sequence_from_spray(pic, find_spray(pic, k % 5));
        ok += oracle_product(p, back) == oracle_product(p, s) && freely_equal(boundary_label(pic), oracle_product(p, s));
    }
    return {ok == n, std::to_string(ok) + "/" + std::to_string(n) + " boundaries agree"};
}

Outcome crit3() {
    const std::vector<Presentation> ps{fixture("ab_disjoint.pres"), fixture("a3_shared.pres"), fixture("comm.pres")};
    std::mt19937 g(3003);
    std::size_t ok = 0;
    const std::size_t n = 2000;
    for (std::size_t k = 0; k < n; ++k) {
        const Presentation& p = ps[k % ps.size()];
        const Sequence s = random_identity_sequence(g, p, 3);
        const PeifferOp o = random_op(g, p, s);
        const FamilyIndex i{1 + k % p.family_count()};
        const EtaCertificate c = eta_certificate(p, s, o, i);
        Word w = oracle_eta(p, s, i);
        for (const auto& f : c.factors)
            if (const auto* cf = std::get_if<CommutatorFactor>(&f)) w.append(expand(p, *cf));
        ok += free_reduce(w) == oracle_eta(p, apply_peiffer(p, s, o), i);
    }
    return {ok == n, std::to_string(ok) + "/" + std::to_string(n) + " certificates verified"};
}

std::vector<Picture> spherical_fixtures() {
    std::vector<Picture> out;
    const std::vector<Presentation> ps{fixture("ab_disjoint.pres"), fixture("a3_shared.pres"), fixture("comm.pres")};
    static std::vector<Presentation> keep;
    keep = ps;
    keep.push_back(fixture("a2.pres"));
    keep.push_back(fixture("a3.pres"));
    for (std::size_t k = 3; k < 5; ++k)
        for (auto& pic : small_spherical_pictures(keep[k])) {
            if (out.size() >= 20) break;
            out.push_back(std::move(pic));
        }
    std::mt19937 g(4004);
    for (std::size_t k = 0; out.size() < 50; ++k) {
        const Presentation& p = keep[k % 3];
        const Sequence s = random_identity_sequence(g, p, k % 2 ? 1 : 2, 3);
        if (s.empty()) continue;
        out.push_back(close_to_sphere(from_sequence(p, s)));
    }
    return out;
}

Outcome crit4() {
    const auto pics = spherical_fixtures();
    std::size_t trivial = 0, small = 0, decided = 0, refuted = 0;
    SearchBudget budget;
    budget.allow_trivial = true;
    budget.max_frontier = 100000;
    for (const auto& pic : pics) {
        const Presentation& p = pic.presentation();
        std::vector<Sequence> seqs;
        for (std::uint64_t seed = 0; seed < 4; ++seed) seqs.push_back(sequence_from_spray(pic, find_spray(pic, seed)));
        bool all = true;
        for (const auto& s : seqs) all = all && oracle_product(p, s).empty();
        trivial += all;
        if (pic.vertex_count() > 3) continue;
        for (std::size_t k = 1; k < seqs.size(); ++k) {
            ++small;
            const auto r = peiffer_equivalent_bounded(p, seqs[0], seqs[k], budget);
            decided += r.status == EquivalenceResult::Status::Equivalent;
            refuted += r.status == EquivalenceResult::Status::NotEquivalent;
            if (r.status == EquivalenceResult::Status::Equivalent) {
                // the script must replay onto the second sequence
                const Sequence end = replay(p, seqs[0], r.script);
                if (sub_normalize(end) != sub_normalize(seqs[k])) ++refuted;
            }
        }
    }
    const bool pass = trivial == pics.size() && small > 0 && refuted == 0 && decided * 10 >= small * 9;
    return {pass, std::to_string(trivial) + "/" + std::to_string(pics.size()) + " pictures with trivial spray products; " +
                      std::to_string(decided) + "/" + std::to_string(small) + " small spray pairs connected, " +
                      std::to_string(small - decided - refuted) + " Unknown, " + std::to_string(refuted) + " refuted"};
}

// Shared by criteria 5 and 6.
struct ReductionRun {
    std::size_t pictures = 0, reduced = 0, scripts = 0, steps = 0, step_failures = 0;
    double seconds = 0;
};

ReductionRun reduce_all(const std::vector<Picture>& pics, const PictureLibrary& lib) {
    ReductionRun r;
    const auto t0 = Clock::now();
    for (const auto& pic : pics) {
        ++r.pictures;
        const auto res = search_to_empty(pic, lib);
        if (!res.found) continue;
        ++r.scripts;
        const Word before = boundary_label(pic);
        bool ok = true;
        const Picture end = replay(pic, res.script, &lib, [&](std::size_t, const Picture& cur) {
            ++r.steps;
            if (!validate(cur).empty() || euler_counts(cur).characteristic() != 2 ||
                !freely_equal(boundary_label(cur), before)) {
                ++r.step_failures;
                ok = false;
            }
        });
        r.reduced += ok && end.node_count() == 1;
    }
    r.seconds = seconds_since(t0);
    return r;
}

ReductionRun g_run6;

Outcome crit6() {
    const auto t0 = Clock::now();
    ReductionRun total;
    for (const char* name : {"a2.pres", "a3.pres"}) {
        const Presentation p = fixture(name);
        PictureLibrary lib(p);
        lib.add_primitive_dipoles();
        const auto r = reduce_all(small_spherical_pictures(p), lib);
        total.pictures += r.pictures;
        total.reduced += r.reduced;
        total.scripts += r.scripts;
        total.steps += r.steps;
        total.step_failures += r.step_failures;
    }
    total.seconds = seconds_since(t0);
    g_run6 = total;
    return {total.reduced == total.pictures && total.pictures > 0 && total.seconds < 300,
            std::to_string(total.reduced) + "/" + std::to_string(total.pictures) + " pictures reduced to empty in " +
                std::to_string(total.seconds) + " s"};
}

Outcome crit5() {
    // CI scripts: the criterion-6 reductions plus scripts from growing then shrinking random pictures
    ReductionRun r = g_run6;
    const std::vector<Presentation> ps{fixture("ab_disjoint.pres"), fixture("a3_shared.pres"), fixture("comm.pres"),
                                       fixture("a2.pres")};
    std::mt19937 g(5005);
    for (std::size_t k = 0; k < 60; ++k) {
        const Presentation& p = ps[k % ps.size()];
        PictureLibrary lib(p);
        lib.add_primitive_dipoles();
        Picture pic = close_to_sphere(from_sequence(p, random_identity_sequence(g, p, 1, 2)));
        // grow with inserts at live corners of the current picture, checking every step
        const Word before = boundary_label(pic);
        ++r.scripts;
        for (int j = 0, tries = 0; j < 3 && tries < 50; ++tries) {
            std::vector<DartId> live;
            for (const auto& n : pic.nodes()) live.insert(live.end(), n.rotation.begin(), n.rotation.end());
            const DartId at = live.empty() ? kNone : live[g() % live.size()];
            Move m;
            switch (g() % (lib.size() ? 3 : 2)) {
                case 0: m = mv::FloatInsert{at, Letter(static_cast<GeneratorId>(g() % p.generator_count()), 1)}; break;
                case 1: m = mv::FoldInsert{at, static_cast<RelatorId>(g() % p.relator_count())}; break;
                default: m = mv::InsertX{at, static_cast<std::size_t>(g() % lib.size()), g() % 2 == 0};
            }
            try {
                pic = apply_move(pic, m, &lib);
            } catch (const PreconditionViolated&) {
                continue;  // e.g. a boundary corner
            }
            ++j;
            ++r.steps;
            if (!validate(pic).empty() || euler_counts(pic).characteristic() != 2 ||
                !freely_equal(boundary_label(pic), before))
                ++r.step_failures;
        }
        MoveBudget budget;
        budget.max_states = 3000;
        const auto res = search_to_empty(pic, lib, budget);
        if (!res.found) continue;
        ++r.scripts;
        replay(pic, res.script, &lib, [&](std::size_t, const Picture& cur) {
            ++r.steps;
            if (!validate(cur).empty() || euler_counts(cur).characteristic() != 2 ||
                !freely_equal(boundary_label(cur), before))
                ++r.step_failures;
        });
    }
    return {r.step_failures == 0 && r.steps > 0, std::to_string(r.steps - r.step_failures) + "/" + std::to_string(r.steps) +
                                                     " steps sound over " + std::to_string(r.scripts) + " scripts"};
}

bool pure_commutators(const FactorizationCertificate& c) {
    for (const auto& f : c.factors)
        if (!std::holds_alternative<eq::CommutatorFactor>(f)) return false;
    return !c.factors.empty();
}

Outcome crit7() {
    const Presentation p = fixture("ab_disjoint.pres");
    const FamilyIndex one{1};
    std::vector<Word> cases{commutator(p.parse("a"), p.parse("baB"))};
    std::mt19937 g(7007);
    while (cases.size() < 21) {
        Word u;
        for (int j = 1 + static_cast<int>(g() % 4); j > 0; --j) {
            const Word r = conjugate(power(p.parse("a"), g() % 2 ? 1 : -1), random_word(g, 2, 3));
            const Word n = conjugate(power(p.parse("b"), g() % 2 ? 1 : -1), random_word(g, 2, 3));
            u.append(conjugate(commutator(r, n), random_word(g, 2, 3)));
        }
        if (!free_reduce(u).empty()) cases.push_back(free_reduce(u));
    }
    std::size_t ok = 0;
    double worst = 0;
    for (const auto& u : cases) {
        const auto t0 = Clock::now();
        const auto r = factorize(p, u, one);
        worst = std::max(worst, seconds_since(t0));
        Word w;
        for (const auto& f : r.certificate.factors) w.append(expand(p, f));
        ok += r.status == FactorizeResult::Status::Verified && pure_commutators(r.certificate) && free_reduce(w) == u;
    }
    return {ok == cases.size() && worst < 120,
            std::to_string(ok) + "/" + std::to_string(cases.size()) + " verified, slowest " + std::to_string(worst) + " s"};
}

Outcome crit8() {
    const Presentation p = fixture("a3_shared.pres");
    const FamilyIndex one{1};
    const Word r = p.parse("aaa");
    std::mt19937 g(8008);
    std::size_t ok = 0;
    for (int k = 0; k < 10; ++k) {
        Word w = free_reduce(random_word(g, 2, 5));
        if (w.empty()) w = p.parse("b");
        const auto res = factorize(p, conjugate(r, w), one);
        if (res.status != FactorizeResult::Status::Verified || res.certificate.factors.size() != 1) continue;
        const auto* f = std::get_if<eq::SharedRelatorFactor>(&res.certificate.factors[0]);
        ok += f && free_reduce(expand(p, *f)) == conjugate(r, w);
    }
    const std::size_t bound = 12;
    const auto gl = generator_list(p, one, nullptr, bound);
    bool family = gl.generators.size() == gl.cosets.size() && gl.cosets.size() == bound;
    for (std::size_t k = 0; family && k < gl.generators.size(); ++k)
        family = gl.generators[k].kind == GeneratorDescriptor::Kind::SharedRelator &&
                 gl.generators[k].word == conjugate(r, gl.cosets[k]);
    return {ok == 10 && family, std::to_string(ok) + "/10 single shared-relator factors; " +
                                    std::to_string(gl.generators.size()) + " generators W a^3 W^-1 over " +
                                    std::to_string(gl.cosets.size()) + " cosets" + (family ? "" : " (mismatch)")};
}

Outcome crit9() {
    const Presentation p = fixture("ab_disjoint.pres");
    const auto r = factorize(p, p.parse("a"), FamilyIndex{1});
    const bool pass = r.status == FactorizeResult::Status::PreconditionFailed && r.certificate.factors.empty() &&
                      r.message.find("killing") != std::string::npos;
    return {pass, "status " + std::to_string(static_cast<int>(r.status)) + ": " + r.message};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 Peiffer invariance", crit1},
        {"2 crossed-module boundary", crit2},
        {"3 eta certificates", crit3},
        {"4 spray independence", crit4},
        {"6 primitive-dipole reduction", crit6},
        {"5 move soundness", crit5},
        {"7 commutator factorization", crit7},
        {"8 shared-relator generators", crit8},
        {"9 negative control", crit9},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << " ["
                  << seconds_since(t0) << " s]" << std::endl;
    }
    return failed ? 1 : 0;
}
