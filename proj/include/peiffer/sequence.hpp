#pragma once

#include "peiffer/presentation.hpp"
#include "peiffer/words.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace peiffer {

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotIdentitySequence : public Error {
public:
    NotIdentitySequence() : Error("NotIdentitySequence: product is not freely trivial") {}
};

/// W R^e W^-1 with R taken from the ambient presentation.
struct ConjTerm {
    Word conjugator;
    RelatorId relator = 0;
    int exponent = 1;

    ConjTerm inverse() const { return {conjugator, relator, -exponent}; }
    bool operator==(const ConjTerm&) const = default;
    auto operator<=>(const ConjTerm&) const = default;
};

using Sequence = std::vector<ConjTerm>;

/// Identical (unreduced) word W R^e W^-1.
Word term_word(const Presentation& p, const ConjTerm& t);
/// Reduced value of the term.
Word term_value(const Presentation& p, const ConjTerm& t);

/// Reduced product of all term values in order.
Word product(const Presentation& p, const Sequence& s);
/// Crossed-module boundary; same value as product().
Word boundary(const Presentation& p, const Sequence& s);
bool is_identity_sequence(const Presentation& p, const Sequence& s);

/// (R, R^o R^-1 R^o^-1) encoded as ((1,R,+1), (R^o,R,-1)).
Sequence trivial_sequence(const Presentation& p, RelatorId r);
Sequence inverse_sequence(const Sequence& s);
Sequence conjugate_sequence(const Sequence& s, const Word& by);
Sequence juxtapose(const Sequence& a, const Sequence& b);

/// Free reduction of every conjugator (the canonical SUB representative).
Sequence sub_normalize(const Sequence& s);

namespace op {
struct Sub {
    std::size_t pos = 0;
    Word conjugator;
    bool operator==(const Sub&) const = default;
};
struct Del {
    std::size_t pos = 0;
    bool operator==(const Del&) const = default;
};
struct Ins {
    std::size_t pos = 0;
    ConjTerm term;
    bool operator==(const Ins&) const = default;
};
enum class Direction { Left, Right };
struct Ex {
    std::size_t pos = 0;
    Direction direction = Direction::Left;
    bool operator==(const Ex&) const = default;
};
}  // namespace op

using PeifferOp = std::variant<op::Sub, op::Del, op::Ins, op::Ex>;

/// SUB replaces a conjugator by a freely equal word; DEL removes an identically
/// inverse adjacent pair; INS inserts (t, t^-1); EX-left maps (c, d) to
/// (d, d^-1 c d) and EX-right maps (c, d) to (c d c^-1, c).
/// Throws PreconditionViolated naming the failed check.
Sequence apply_peiffer(const Presentation& p, const Sequence& s, const PeifferOp& op);

/// Inverse operation valid on apply_peiffer(p, s, op) (exact for SUB-normal s).
PeifferOp inverse_op(const Presentation& p, const Sequence& s, const PeifferOp& op);

/// Greedy normal form: SUB-normalize, then repeatedly bring the nearest
/// identically inverse pair together with EX-left moves and delete it.
Sequence peiffer_reduce(const Presentation& p, const Sequence& s);
/// Same, returning the script that replays from s to the result.
Sequence peiffer_reduce(const Presentation& p, const Sequence& s, std::vector<PeifferOp>* script);

std::string describe(const Presentation& p, const PeifferOp& op);

/// Text format: one "<W> <relator-index> <+|->" line per term (1-based index).
Sequence parse_sequence(const Presentation& p, std::string_view text);
std::string format_sequence(const Presentation& p, const Sequence& s);

}  // namespace peiffer
