#pragma once

#include "peiffer/sequence.hpp"

#include <variant>
#include <vector>

namespace peiffer {

/// Marks which terms of a sequence count towards the image (the r_i-terms).
using TermTags = std::vector<bool>;

/// Tags by family membership of each term's relator; shared relators count as
/// members of family i.
TermTags family_tags(const Presentation& p, const Sequence& s, FamilyIndex i);

/// Ordered product of the tagged terms, reduced. No identity check.
Word tagged_product(const Presentation& p, const Sequence& s, const TermTags& tags);

/// Ordered product of the r_i-terms of an identity sequence.
/// Throws NotIdentitySequence.
Word eta_image(const Presentation& p, const Sequence& s, FamilyIndex i);

/// B^-1 [c^-1, d^-1] B with c = value(left) (a tagged term) and d = value(right).
struct CommutatorFactor {
    Word conjugator;
    ConjTerm left;
    ConjTerm right;
};
struct FreeEquality {};

using EtaFactor = std::variant<CommutatorFactor, FreeEquality>;

Word expand(const Presentation& p, const CommutatorFactor& f);

/// new_V == old_V * (product of expanded factors), up to free equality.
struct EtaCertificate {
    Word old_V;
    Word new_V;
    std::vector<EtaFactor> factors;

    bool verify(const Presentation& p) const;
};

struct TaggedStep {
    Sequence sequence;
    TermTags tags;
    EtaCertificate certificate;
};

/// Applies op to a tagged sequence and certifies how the tagged product moves.
/// Inserted pairs take inserted_tag. Throws PreconditionViolated.
TaggedStep eta_step(const Presentation& p, const Sequence& s, const TermTags& tags, const PeifferOp& op,
                    bool inserted_tag = false);

/// Certificate relating eta_image before and after op for an identity sequence.
/// Throws PreconditionViolated when s is not an identity sequence or op does not apply.
EtaCertificate eta_certificate(const Presentation& p, const Sequence& s, const PeifferOp& op, FamilyIndex i);

}  // namespace peiffer
