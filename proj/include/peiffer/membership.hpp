#pragma once

#include "peiffer/sequence.hpp"

#include <set>
#include <string>
#include <vector>

namespace peiffer {

class StrategyInapplicable : public Error {
public:
    using Error::Error;
};

/// Generator images as permutations of {0..degree-1}; image[g][x] is the image of x.
struct PermutationRepresentation {
    std::string name;
    std::vector<std::vector<int>> images;
};

/// Normal-closure membership strategies. FreeQuotient is exact; bounded search
/// only answers Yes/Unknown; finite quotient tests only answer No/Unknown.
struct MembershipOracle {
    enum class Strategy { FreeQuotient, BoundedConjugateSearch, FiniteQuotientTests, Auto };
    Strategy strategy = Strategy::Auto;
    int max_terms = 6;
    int max_conjugator_len = 3;
    std::vector<PermutationRepresentation> quotients;
};

enum class ClosureTarget { RClosure, NClosure };

struct MembershipResult {
    enum class Kind { Yes, No, Unknown };
    Kind kind = Kind::Unknown;
    /// For Yes: terms over the target relators whose product is freely equal to w.
    Sequence certificate;
    /// For No: human-readable separating witness.
    std::string witness;
};

/// Relators generating the target closure: r_i for RClosure, r-hat_i for NClosure.
std::set<RelatorId> target_relators(const Presentation& p, FamilyIndex i, ClosureTarget target);

MembershipResult membership(const Presentation& p, const MembershipOracle& oracle, const Word& w, FamilyIndex i,
                            ClosureTarget target);

/// Same, against an explicit relator subset.
MembershipResult membership_in(const Presentation& p, const MembershipOracle& oracle, const Word& w,
                               const std::set<RelatorId>& relators);

/// Image of w under a permutation representation (composition left to right).
std::vector<int> evaluate(const PermutationRepresentation& rep, const Word& w);

/// Exponent-sum lattice test: No when the exponent vector of w is outside the
/// integer span of the relators' exponent vectors.
bool abelian_obstruction(const Presentation& p, const Word& w, const std::set<RelatorId>& relators,
                         std::string* witness);

}  // namespace peiffer
