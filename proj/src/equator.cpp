#include "peiffer/equator.hpp"

#include <algorithm>
#include <set>

namespace peiffer {

EquatorPicture::EquatorPicture(const Presentation& p, FamilyIndex i, Sequence terms, std::vector<Side> sides)
    : pres_(&p), family_(i), terms_(std::move(terms)), sides_(std::move(sides)) {
    if (terms_.size() != sides_.size()) throw PreconditionViolated("equator: one side per term required");
}

std::size_t EquatorPicture::count(Side s) const { return std::count(sides_.begin(), sides_.end(), s); }

Picture EquatorPicture::picture() const { return close_to_sphere(from_sequence(*pres_, terms_)); }

namespace {

// Where a term with this relator may sit; both for shared relators.
bool side_allowed(const Presentation& p, FamilyIndex i, RelatorId r, Side s) {
    if (s == Side::R) return p.in_family(r, i);
    return p.complement_relators(i).count(r) > 0;
}

std::string side_name(Side s) { return s == Side::R ? "r_i" : "r - r_i"; }

void check_sides(const Presentation& p, FamilyIndex i, const Sequence& t, const std::vector<Side>& s) {
    for (std::size_t k = 0; k < t.size(); ++k)
        if (!side_allowed(p, i, t[k].relator, s[k]))
            throw InadmissibleMove("vertex " + std::to_string(k + 1) + " (relator " + std::to_string(t[k].relator + 1) +
                                   ") would sit in the " + side_name(s[k]) + " hemisphere");
}

// Unreduced product of the R-side term words in [from, to).
Word r_product(const Presentation& p, const Sequence& t, const std::vector<Side>& s, std::size_t from, std::size_t to) {
    Word w;
    for (std::size_t k = from; k < to && k < t.size(); ++k)
        if (s[k] == Side::R) w.append(term_word(p, t[k]));
    return w;
}

}  // namespace

std::vector<std::string> validate(const EquatorPicture& e) {
    std::vector<std::string> out;
    const auto& p = e.presentation();
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e.terms()[k].relator >= p.relator_count()) {
            out.push_back("term " + std::to_string(k + 1) + ": relator out of range");
            continue;
        }
        if (!side_allowed(p, e.family(), e.terms()[k].relator, e.sides()[k]))
            out.push_back("term " + std::to_string(k + 1) + ": relator " + std::to_string(e.terms()[k].relator + 1) +
                          " does not belong to the " + side_name(e.sides()[k]) + " hemisphere");
    }
    if (out.empty() && !free_reduce(product(p, e.terms())).empty()) out.push_back("the sequence is not an identity sequence");
    return out;
}

EquatorPicture glue(const Presentation& p, const Sequence& cert_r, const Sequence& cert_n, FamilyIndex i, const Word& u) {
    p.check_family(i);
    if (!freely_equal(product(p, cert_r), u))
        throw BoundaryMismatch("glue: the R-side certificate does not multiply to U");
    if (!freely_equal(product(p, cert_n), inverse(u)))
        throw BoundaryMismatch("glue: the N-side certificate does not multiply to U^-1");
    if (cert_r.empty() && cert_n.empty()) throw PreconditionViolated("glue: a picture with equator needs a vertex");
    Sequence terms = juxtapose(cert_r, cert_n);
    std::vector<Side> sides(cert_r.size(), Side::R);
    sides.resize(terms.size(), Side::N);
    check_sides(p, i, terms, sides);
    return EquatorPicture(p, i, std::move(terms), std::move(sides));
}

Word equatorial_label(const EquatorPicture& e) {
    return free_reduce(r_product(e.presentation(), e.terms(), e.sides(), 0, e.size()));
}

Word expand(const Presentation& p, const LabelDelta& d) {
    return std::visit(
        [&](const auto& f) -> Word {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, eq::FreeEquality>)
                return {};
            else if constexpr (std::is_same_v<T, eq::CommutatorFactor>)
                return conjugate(commutator(f.r_part, f.n_part), f.conjugator);
            else if constexpr (std::is_same_v<T, eq::SharedRelatorFactor>)
                return conjugate(power(p.relator(f.relator), f.sign), f.conjugator);
            else
                return conjugate(power(f.v, f.sign), f.conjugator);
        },
        d);
}

std::string describe(const Presentation& p, const LabelDelta& d) {
    auto t = [&](const Word& w) { return p.word_text(w); };
    return std::visit(
        [&](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, eq::FreeEquality>)
                return "free equality";
            else if constexpr (std::is_same_v<T, eq::CommutatorFactor>)
                return "(" + t(f.conjugator) + ")[" + t(f.r_part) + ", " + t(f.n_part) + "](" + t(f.conjugator) + ")^-1";
            else if constexpr (std::is_same_v<T, eq::SharedRelatorFactor>)
                return "(" + t(f.conjugator) + ")" + t(p.relator(f.relator)) + (f.sign < 0 ? "^-1" : "") + "(" +
                       t(f.conjugator) + ")^-1  [shared relator " + std::to_string(f.relator + 1) + "]";
            else
                return "(" + t(f.conjugator) + ")(" + t(f.v) + ")" + (f.sign < 0 ? "^-1" : "") + "(" + t(f.conjugator) +
                       ")^-1  [Y-picture " + std::to_string(f.entry) + "]";
        },
        d);
}

std::string describe(const Presentation& p, const AdmissibleMove& m) {
    return std::visit(
        [&](const auto& mm) -> std::string {
            using T = std::decay_t<decltype(mm)>;
            if constexpr (std::is_same_v<T, PeifferOp>)
                return describe(p, mm);
            else if constexpr (std::is_same_v<T, eq::InsertPair>)
                return "INS " + std::to_string(mm.pos + 1) + " on the " + side_name(mm.side) + " side";
            else if constexpr (std::is_same_v<T, eq::Rebase>)
                return "REBASE " + std::to_string(mm.pos + 1) + " to " + p.word_text(mm.conjugator);
            else
                return "DELETE(Y) entry " + std::to_string(mm.entry) + " at " + std::to_string(mm.pos + 1);
        },
        m);
}

std::size_t YLibrary::add(std::string name, const Picture& y) {
    check(y);
    if (!is_spherical(y)) throw PreconditionViolated("Y-picture " + name + " is not spherical");
    Entry e{std::move(name), y, sequence_from_spray(y, find_spray(y)), {}, {}, {}};
    for (const auto& t : e.sequence) e.sides.push_back(pres_->in_family(t.relator, family_) ? Side::R : Side::N);
    e.v = free_reduce(r_product(*pres_, e.sequence, e.sides, 0, e.sequence.size()));
    e.separating = separating_label(y, family_);
    entries_.push_back(std::move(e));
    return entries_.size() - 1;
}

Word separating_label(const Picture& y, FamilyIndex i) {
    std::set<NodeId> s, t;
    for (NodeId v : y.vertices()) (y.presentation().in_family(y.node(v).relator, i) ? s : t).insert(v);
    if (s.empty() || t.empty()) return {};
    try {
        return boundary_label(subpicture(y, s));
    } catch (const PathNotSimple&) {
    }
    try {
        return inverse(boundary_label(subpicture(y, t)));
    } catch (const PathNotSimple&) {
    }
    throw NoSeparatingPath("no simple closed path separates the r_" + std::to_string(i.value) +
                           " vertices from the others");
}

std::pair<EquatorPicture, LabelDelta> apply_admissible(const EquatorPicture& e, const AdmissibleMove& m,
                                                       const YLibrary* y) {
    const Presentation& p = e.presentation();
    const FamilyIndex fam = e.family();
    const Sequence& t = e.terms();
    const std::vector<Side>& s = e.sides();
    Sequence nt;
    std::vector<Side> ns;
    LabelDelta delta = eq::FreeEquality{};

    std::visit(
        [&](const auto& mm) {
            using T = std::decay_t<decltype(mm)>;
            if constexpr (std::is_same_v<T, PeifferOp>) {
                nt = apply_peiffer(p, t, mm);
                ns = s;
                if (const auto* d = std::get_if<op::Del>(&mm)) {
                    ns.erase(ns.begin() + d->pos, ns.begin() + d->pos + 2);
                    if (s[d->pos] != s[d->pos + 1]) {
                        const std::size_t k = s[d->pos] == Side::R ? d->pos : d->pos + 1;
                        const Word a = r_product(p, t, s, 0, k);
                        delta = eq::SharedRelatorFactor{free_reduce(concat(a, t[k].conjugator)), t[k].relator, t[k].exponent};
                    }
                } else if (const auto* in = std::get_if<op::Ins>(&mm)) {
                    const bool r = side_allowed(p, fam, in->term.relator, Side::R);
                    const bool n = side_allowed(p, fam, in->term.relator, Side::N);
                    if (r && n) throw InadmissibleMove("INS of a shared relator needs an explicit side");
                    ns.insert(ns.begin() + in->pos, 2, r ? Side::R : Side::N);
                } else if (const auto* x = std::get_if<op::Ex>(&mm)) {
                    const std::size_t i = x->pos;
                    std::swap(ns[i], ns[i + 1]);
                    // the R-side term whose value is conjugated by the N-side one
                    const bool left = x->direction == op::Direction::Left;
                    if (s[i] != s[i + 1] && ((left && s[i] == Side::R) || (!left && s[i] == Side::N))) {
                        const Word a = r_product(p, t, s, 0, i);
                        const Word r = term_word(p, left ? t[i] : t[i + 1]);
                        const Word n = term_word(p, left ? t[i + 1] : t[i]);
                        delta = eq::CommutatorFactor{free_reduce(a), free_reduce(r), free_reduce(left ? inverse(n) : n)};
                    }
                }
            } else if constexpr (std::is_same_v<T, eq::InsertPair>) {
                if (mm.pos > t.size()) throw PreconditionViolated("INS: position out of range");
                nt = apply_peiffer(p, t, op::Ins{mm.pos, mm.term});
                ns = s;
                ns.insert(ns.begin() + mm.pos, 2, mm.side);
            } else if constexpr (std::is_same_v<T, eq::Rebase>) {
                if (mm.pos >= t.size()) throw PreconditionViolated("REBASE: position out of range");
                const Word root = root_and_period(p.relator(t[mm.pos].relator)).root;
                Word q = free_reduce(concat(inverse(t[mm.pos].conjugator), mm.conjugator));
                // q must be a power of the root
                const Word rinv = inverse(root);
                while (!q.empty()) {
                    if (q.size() >= root.size() && q.slice(0, root.size()) == root)
                        q = q.slice(root.size(), q.size());
                    else if (q.size() >= root.size() && q.slice(0, root.size()) == rinv)
                        q = q.slice(root.size(), q.size());
                    else
                        throw PreconditionViolated("REBASE: conjugators differ by more than a power of the root");
                }
                nt = t;
                nt[mm.pos].conjugator = mm.conjugator;
                ns = s;
            } else {
                if (!y || mm.entry >= y->size()) throw PreconditionViolated("DELETE(Y): no such Y-picture");
                const auto& ent = y->entries()[mm.entry];
                Sequence block = mm.sign < 0 ? inverse_sequence(ent.sequence) : ent.sequence;
                std::vector<Side> bs = ent.sides;
                if (mm.sign < 0) std::reverse(bs.begin(), bs.end());
                if (mm.pos + block.size() > t.size()) throw PreconditionViolated("DELETE(Y): block out of range");
                for (std::size_t k = 0; k < block.size(); ++k) {
                    const ConjTerm& a = t[mm.pos + k];
                    const ConjTerm& b = block[k];
                    if (a.relator != b.relator || a.exponent != b.exponent || s[mm.pos + k] != bs[k] ||
                        free_reduce(a.conjugator) != free_reduce(concat(mm.conjugator, b.conjugator)))
                        throw PreconditionViolated("DELETE(Y): the block is not a conjugate of " + ent.name);
                }
                nt = t;
                nt.erase(nt.begin() + mm.pos, nt.begin() + mm.pos + block.size());
                ns = s;
                ns.erase(ns.begin() + mm.pos, ns.begin() + mm.pos + block.size());
                const Word a = r_product(p, t, s, 0, mm.pos);
                delta = eq::YFactor{free_reduce(concat(a, mm.conjugator)), mm.entry, ent.v, mm.sign};
            }
        },
        m);
    check_sides(p, fam, nt, ns);
    EquatorPicture out(p, fam, std::move(nt), std::move(ns));
    return {std::move(out), std::move(delta)};
}

}  // namespace peiffer
