#include "peiffer/eta.hpp"

namespace peiffer {

TermTags family_tags(const Presentation& p, const Sequence& s, FamilyIndex i) {
    TermTags tags(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) tags[k] = p.in_family(s[k].relator, i);
    return tags;
}

Word tagged_product(const Presentation& p, const Sequence& s, const TermTags& tags) {
    Word out;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (tags.at(k)) out.append(term_word(p, s[k]));
    return free_reduce(out);
}

Word eta_image(const Presentation& p, const Sequence& s, FamilyIndex i) {
    if (!is_identity_sequence(p, s)) throw NotIdentitySequence();
    return tagged_product(p, s, family_tags(p, s, i));
}

Word expand(const Presentation& p, const CommutatorFactor& f) {
    const Word c = term_word(p, f.left);
    const Word d = term_word(p, f.right);
    return conjugate(commutator(inverse(c), inverse(d)), inverse(f.conjugator));
}

bool EtaCertificate::verify(const Presentation& p) const {
    Word acc = old_V;
    for (const auto& f : factors)
        if (const auto* c = std::get_if<CommutatorFactor>(&f)) acc.append(expand(p, *c));
    return freely_equal(acc, new_V);
}

namespace {

// Reduced product of tagged terms strictly after position `from`.
Word tagged_suffix(const Presentation& p, const Sequence& s, const TermTags& tags, std::size_t from) {
    Word out;
    for (std::size_t k = from + 1; k < s.size(); ++k)
        if (tags[k]) out.append(term_word(p, s[k]));
    return free_reduce(out);
}

}  // namespace

TaggedStep eta_step(const Presentation& p, const Sequence& s, const TermTags& tags, const PeifferOp& op,
                    bool inserted_tag) {
    if (tags.size() != s.size()) throw PreconditionViolated("tag vector does not match sequence length");
    TaggedStep step;
    step.sequence = apply_peiffer(p, s, op);
    step.tags = tags;
    step.certificate.old_V = tagged_product(p, s, tags);

    if (const auto* del = std::get_if<op::Del>(&op)) {
        if (tags[del->pos] != tags[del->pos + 1])
            throw PreconditionViolated("DEL: pair straddles the tagged and untagged parts");
        step.tags.erase(step.tags.begin() + static_cast<std::ptrdiff_t>(del->pos),
                        step.tags.begin() + static_cast<std::ptrdiff_t>(del->pos + 2));
        step.certificate.factors.push_back(FreeEquality{});
    } else if (const auto* ins = std::get_if<op::Ins>(&op)) {
        step.tags.insert(step.tags.begin() + static_cast<std::ptrdiff_t>(ins->pos), 2, inserted_tag);
        step.certificate.factors.push_back(FreeEquality{});
    } else if (std::holds_alternative<op::Sub>(op)) {
        step.certificate.factors.push_back(FreeEquality{});
    } else {
        const auto& ex = std::get<op::Ex>(op);
        const std::size_t i = ex.pos;
        const bool tc = tags[i], td = tags[i + 1];
        std::swap(step.tags[i], step.tags[i + 1]);
        const ConjTerm& c = s[i];
        const ConjTerm& d = s[i + 1];
        const Word b = tagged_suffix(p, s, tags, i + 1);
        if (ex.direction == op::Direction::Left && tc && !td) {
            // c is conjugated by d: V_old^-1 V_new = B^-1 [c^-1, d^-1] B
            step.certificate.factors.push_back(CommutatorFactor{b, c, d});
        } else if (ex.direction == op::Direction::Right && !tc && td) {
            // d is conjugated by c^-1: V_old^-1 V_new = B^-1 [d^-1, c] B
            step.certificate.factors.push_back(CommutatorFactor{b, d, c.inverse()});
        } else {
            step.certificate.factors.push_back(FreeEquality{});
        }
    }
    step.certificate.new_V = tagged_product(p, step.sequence, step.tags);
    return step;
}

EtaCertificate eta_certificate(const Presentation& p, const Sequence& s, const PeifferOp& op, FamilyIndex i) {
    if (!is_identity_sequence(p, s)) throw PreconditionViolated("eta_certificate: not an identity sequence");
    bool inserted_tag = false;
    if (const auto* ins = std::get_if<op::Ins>(&op)) inserted_tag = p.in_family(ins->term.relator, i);
    return eta_step(p, s, family_tags(p, s, i), op, inserted_tag).certificate;
}

}  // namespace peiffer
