#include "peiffer/equator.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace peiffer {

bool FactorizationCertificate::verify(const Presentation& p) const {
    if (!freely_trivial(residual)) return false;
    Word w;
    for (const auto& f : factors) w.append(expand(p, f));
    w.append(residual);
    return freely_equal(w, target);
}

namespace {

using Status = FactorizeResult::Status;

struct Engine {
    const Presentation& p;
    const YLibrary* y;
    std::size_t max_steps;
    EquatorPicture e;
    std::vector<AdmissibleMove> script;
    std::vector<LabelDelta> deltas;

    struct OutOfSteps {};

    void step(const AdmissibleMove& m) {
        if (script.size() >= max_steps) throw OutOfSteps{};
        auto [ne, d] = apply_admissible(e, m, y);
        e = std::move(ne);
        script.push_back(m);
        deltas.push_back(std::move(d));
    }
    bool done() const { return equatorial_label(e).empty(); }

    void normalize_conjugators() {
        for (std::size_t k = 0; k < e.size(); ++k) {
            Word r = free_reduce(e.terms()[k].conjugator);
            if (r != e.terms()[k].conjugator) step(op::Sub{k, std::move(r)});
        }
    }

    // Nearest identically inverse pair: slide the right one over, then DEL.
    bool cancel_pair(std::size_t max_gap) {
        const auto& t = e.terms();
        for (std::size_t gap = 1; gap <= max_gap && gap < t.size(); ++gap)
            for (std::size_t i = 0; i + gap < t.size(); ++i) {
                const std::size_t j = i + gap;
                if (t[j] != t[i].inverse()) continue;
                for (std::size_t m = j - 1; m > i; --m) step(op::Ex{m, op::Direction::Left});
                step(op::Del{i});
                return true;
            }
        return false;
    }

    bool delete_y_block() {
        if (!y) return false;
        for (std::size_t k = 0; k < y->size(); ++k)
            for (int sign : {1, -1}) {
                const auto& ent = y->entries()[k];
                const ConjTerm first = sign > 0 ? ent.sequence.front() : ent.sequence.back().inverse();
                for (std::size_t pos = 0; pos + ent.sequence.size() <= e.size(); ++pos) {
                    const ConjTerm& a = e.terms()[pos];
                    if (a.relator != first.relator || a.exponent != first.exponent) continue;
                    const Word c = free_reduce(concat(a.conjugator, inverse(first.conjugator)));
                    try {
                        step(eq::DeleteY{pos, k, c, sign});
                        return true;
                    } catch (const PreconditionViolated&) {
                    }
                }
            }
        return false;
    }

    // Complement relators all single letters: push every R-side conjugator
    // into the free group on the surviving generators by commuting N-terms past it.
    bool strip_killed(FamilyIndex fam) {
        std::set<GeneratorId> killed;
        const auto comp = p.complement_relators(fam);
        for (RelatorId r : comp) {
            if (p.relator(r).size() != 1) return false;
            killed.insert(p.relator(r)[0].gen());
        }
        MembershipOracle fq;
        fq.strategy = MembershipOracle::Strategy::FreeQuotient;
        for (std::size_t pos = 0; pos < e.size(); ++pos) {
            if (e.sides()[pos] != Side::R) continue;
            const Word w = e.terms()[pos].conjugator;
            Word bar;
            for (std::size_t k = 0; k < w.size(); ++k)
                if (!killed.count(w[k].gen())) bar.push_back(w[k]);
            bar = free_reduce(bar);
            const Word n = free_reduce(concat(w, inverse(bar)));
            if (!n.empty()) {
                const auto res = membership_in(p, fq, n, comp);
                if (res.kind != MembershipResult::Kind::Yes) return false;
                for (ConjTerm d : res.certificate) {
                    d.conjugator = free_reduce(d.conjugator);
                    step(eq::InsertPair{pos + 1, d, Side::N});
                    step(op::Ex{pos, op::Direction::Left});
                    ++pos;
                }
            }
            const ConjTerm cur = e.terms()[pos];
            if (cur.conjugator != bar) step(op::Sub{pos, bar});
            // drop a trailing power of the root
            const Word root = root_and_period(p.relator(cur.relator)).root;
            Word c = cur.conjugator;
            for (bool again = true; again;) {
                again = false;
                for (const Word& r : {root, inverse(root)})
                    if (c.size() >= r.size() && c.slice(c.size() - r.size(), c.size()) == r) {
                        c = c.slice(0, c.size() - r.size());
                        again = true;
                    }
            }
            if (c != cur.conjugator) step(eq::Rebase{pos, c});
        }
        return true;
    }
};

}  // namespace

FactorizeResult factorize(const Presentation& p, const Word& u, FamilyIndex i, const YLibrary* y,
                          const FactorizeBudget& budget, const std::optional<Sequence>& cert_r,
                          const std::optional<Sequence>& cert_n) {
    p.check_family(i);
    FactorizeResult out;
    out.certificate.target = free_reduce(u);
    auto certify = [&](const std::optional<Sequence>& given, ClosureTarget target, const char* name) -> std::optional<Sequence> {
        if (given) return *given;
        const auto res = membership(p, budget.oracle, u, i, target);
        if (res.kind == MembershipResult::Kind::Yes)
            return target == ClosureTarget::NClosure ? inverse_sequence(res.certificate) : res.certificate;
        out.status = res.kind == MembershipResult::Kind::No ? Status::PreconditionFailed : Status::Unknown;
        out.message = std::string("U is ") + (res.kind == MembershipResult::Kind::No ? "not in " : "not shown to lie in ") +
                      name + (res.witness.empty() ? "" : ": " + res.witness);
        return std::nullopt;
    };
    if (out.certificate.target.empty() && !cert_r && !cert_n) {
        out.status = Status::Verified;
        return out;
    }
    const auto r = certify(cert_r, ClosureTarget::RClosure, "R_i");
    if (!r) return out;
    const auto n = certify(cert_n, ClosureTarget::NClosure, "N_i");
    if (!n) return out;

    Engine g{p, y, budget.max_steps, glue(p, *r, *n, i, u), {}, {}};
    out.glued = g.e;
    try {
        g.normalize_conjugators();
        while (!g.done() && g.cancel_pair(1)) {
        }
        if (!g.done()) g.strip_killed(i);
        while (!g.done()) {
            g.normalize_conjugators();
            if (g.cancel_pair(g.e.size()) || g.delete_y_block()) continue;
            out.message = "no admissible move makes progress; residual " + p.word_text(equatorial_label(g.e));
            break;
        }
    } catch (const Engine::OutOfSteps&) {
        out.message = "step budget exhausted";
    }
    out.script = std::move(g.script);
    out.deltas = std::move(g.deltas);
    for (const auto& d : out.deltas)
        if (!std::holds_alternative<eq::FreeEquality>(d)) out.certificate.factors.push_back(d);
    out.certificate.residual = equatorial_label(g.e);
    if (out.certificate.verify(p)) {
        out.status = Status::Verified;
        out.message.clear();
    } else {
        out.status = Status::Unknown;
        if (out.message.empty()) out.message = "certificate does not verify";
    }
    return out;
}

EquatorPicture replay_factorization(const EquatorPicture& start, const std::vector<AdmissibleMove>& script,
                                    const std::vector<LabelDelta>& deltas, const YLibrary* y) {
    if (script.size() != deltas.size()) throw PreconditionViolated("replay: one delta per step required");
    const Presentation& p = start.presentation();
    EquatorPicture cur = start;
    for (std::size_t k = 0; k < script.size(); ++k) {
        auto [next, d] = apply_admissible(cur, script[k], y);
        if (d != deltas[k]) throw Error("replay: step " + std::to_string(k + 1) + " yields a different factor");
        if (!freely_equal(equatorial_label(cur), concat(expand(p, d), equatorial_label(next))))
            throw Error("replay: step " + std::to_string(k + 1) + " breaks the label identity");
        cur = std::move(next);
    }
    return cur;
}

GeneratorList generator_list(const Presentation& p, FamilyIndex i, const YLibrary* y, std::size_t coset_bound,
                             const MembershipOracle& oracle) {
    p.check_family(i);
    std::set<RelatorId> all;
    for (RelatorId r = 0; r < p.relator_count(); ++r) all.insert(r);
    GeneratorList out;
    out.cosets.push_back({});
    std::vector<Word> layer{Word{}};
    while (!layer.empty() && out.cosets.size() < coset_bound) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (GeneratorId g = 0; g < p.generator_count() && out.cosets.size() < coset_bound; ++g)
                for (int e : {1, -1}) {
                    if (out.cosets.size() >= coset_bound) break;
                    const Word c = free_reduce(concat(w, Word{Letter(g, e)}));
                    bool fresh = true;
                    for (const Word& rep : out.cosets) {
                        const auto res = membership_in(p, oracle, free_reduce(concat(inverse(rep), c)), all);
                        if (res.kind == MembershipResult::Kind::Yes) {
                            fresh = false;
                            break;
                        }
                        if (res.kind == MembershipResult::Kind::Unknown) out.approximate = true;
                    }
                    if (fresh) {
                        out.cosets.push_back(c);
                        next.push_back(c);
                    }
                }
        if (next.empty()) out.complete = true;
        layer = std::move(next);
    }
    if (out.cosets.size() < coset_bound && layer.empty()) out.complete = true;
    if (out.approximate) out.complete = false;

    for (RelatorId r : shared_relators(p, i))
        for (const Word& w : out.cosets)
            out.generators.push_back({GeneratorDescriptor::Kind::SharedRelator, w, r, 0, conjugate(p.relator(r), w)});
    if (y)
        for (std::size_t k = 0; k < y->size(); ++k)
            for (const Word& w : out.cosets)
                out.generators.push_back(
                    {GeneratorDescriptor::Kind::YPicture, w, 0, k, conjugate(y->entries()[k].separating, w)});
    return out;
}

std::string certificate_to_json(const Presentation& p, const FactorizationCertificate& c) {
    using nlohmann::json;
    auto t = [&](const Word& w) { return p.word_text(w); };
    json fs = json::array();
    for (const auto& f : c.factors) {
        json j;
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, eq::CommutatorFactor>)
                    j = {{"kind", "commutator"}, {"conjugator", t(x.conjugator)}, {"r", t(x.r_part)}, {"n", t(x.n_part)}};
                else if constexpr (std::is_same_v<T, eq::SharedRelatorFactor>)
                    j = {{"kind", "shared_relator"}, {"conjugator", t(x.conjugator)}, {"relator", x.relator + 1}, {"sign", x.sign}};
                else if constexpr (std::is_same_v<T, eq::YFactor>)
                    j = {{"kind", "y_picture"}, {"conjugator", t(x.conjugator)}, {"entry", x.entry}, {"v", t(x.v)}, {"sign", x.sign}};
                else
                    j = {{"kind", "free"}};
            },
            f);
        j["word"] = t(expand(p, f));
        fs.push_back(j);
    }
    json out = {{"target", t(c.target)}, {"factors", fs}, {"residual", t(c.residual)}, {"verified", c.verify(p)}};
    return out.dump(2);
}

}  // namespace peiffer
