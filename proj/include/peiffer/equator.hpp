#pragma once

#include "peiffer/membership.hpp"
#include "peiffer/moves.hpp"

#include <variant>

namespace peiffer {

class InadmissibleMove : public Error {
public:
    using Error::Error;
};
class NoSeparatingPath : public Error {
public:
    using Error::Error;
};

/// Hemisphere of a vertex: the r_i side or the (r - r_i) side.
enum class Side { R, N };

/// A spherical picture with equator, held as the identity sequence read off a
/// spray that meets the r_i hemisphere first. Each term is one vertex; its side
/// never changes. The equatorial label is the product of the R-side terms in
/// sequence order, which is what the equator reads once the N-side terms are
/// pushed off it.
class EquatorPicture {
public:
    EquatorPicture(const Presentation& p, FamilyIndex i, Sequence terms, std::vector<Side> sides);

    const Presentation& presentation() const { return *pres_; }
    FamilyIndex family() const { return family_; }
    const Sequence& terms() const { return terms_; }
    const std::vector<Side>& sides() const { return sides_; }
    std::size_t size() const { return terms_.size(); }
    std::size_t count(Side s) const;

    /// Closed-up picture of the whole sequence.
    Picture picture() const;

private:
    const Presentation* pres_;
    FamilyIndex family_;
    Sequence terms_;
    std::vector<Side> sides_;
};

/// Empty when the hemisphere assignment is consistent and the product is trivial.
std::vector<std::string> validate(const EquatorPicture& e);

/// Pastes a certificate for U in R_i to one for U^-1 in N_i. Throws
/// BoundaryMismatch when the products are not U and U^-1.
EquatorPicture glue(const Presentation& p, const Sequence& cert_r, const Sequence& cert_n, FamilyIndex i, const Word& u);

/// Reduced product of the R-side terms.
Word equatorial_label(const EquatorPicture& e);

namespace eq {
struct FreeEquality {
    bool operator==(const FreeEquality&) const = default;
};
/// conjugator [r_part, n_part] conjugator^-1 with [x, y] = x y x^-1 y^-1.
struct CommutatorFactor {
    Word conjugator;
    Word r_part;
    Word n_part;
    bool operator==(const CommutatorFactor&) const = default;
};
/// conjugator R^sign conjugator^-1 for R in r_i and in some other family.
struct SharedRelatorFactor {
    Word conjugator;
    RelatorId relator = 0;
    int sign = 1;
    bool operator==(const SharedRelatorFactor&) const = default;
};
/// conjugator V^sign conjugator^-1 for the equator word V of a Y-picture.
struct YFactor {
    Word conjugator;
    std::size_t entry = 0;
    Word v;
    int sign = 1;
    bool operator==(const YFactor&) const = default;
};
}  // namespace eq

/// Old label == expand(delta) * new label, freely.
using LabelDelta = std::variant<eq::FreeEquality, eq::CommutatorFactor, eq::SharedRelatorFactor, eq::YFactor>;

Word expand(const Presentation& p, const LabelDelta& d);
std::string describe(const Presentation& p, const LabelDelta& d);

namespace eq {
/// Inserts (term, term^-1) on one side.
struct InsertPair {
    std::size_t pos = 0;
    ConjTerm term;
    Side side = Side::N;
};
/// Replaces a conjugator W by W' when W^-1 W' is a power of the root of the
/// relator: the term value is unchanged.
struct Rebase {
    std::size_t pos = 0;
    Word conjugator;
};
/// Deletes the block starting at pos when it is the sequence of Y-picture
/// `entry` (inverted when sign is -1), conjugated by `conjugator`.
struct DeleteY {
    std::size_t pos = 0;
    std::size_t entry = 0;
    Word conjugator;
    int sign = 1;
};
}  // namespace eq

/// Peiffer operations; an EX whose two terms lie on different sides is COMMUTE.
using AdmissibleMove = std::variant<PeifferOp, eq::InsertPair, eq::Rebase, eq::DeleteY>;

/// Y-pictures together with the sequences and equator words used to match them.
class YLibrary {
public:
    YLibrary(const Presentation& p, FamilyIndex i) : pres_(&p), family_(i) {}
    std::size_t add(std::string name, const Picture& y);

    struct Entry {
        std::string name;
        Picture picture;
        Sequence sequence;        // canonical spray
        std::vector<Side> sides;  // per term
        Word v;                   // product of the R-side terms of sequence
        Word separating;          // label of a simple closed path around the r_i vertices
    };
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    const Presentation* pres_;
    FamilyIndex family_;
    std::vector<Entry> entries_;
};

/// Label of a simple closed path in spherical y separating the r_i vertices
/// from the rest. Throws NoSeparatingPath.
Word separating_label(const Picture& y, FamilyIndex i);

std::pair<EquatorPicture, LabelDelta> apply_admissible(const EquatorPicture& e, const AdmissibleMove& m,
                                                       const YLibrary* y = nullptr);
std::string describe(const Presentation& p, const AdmissibleMove& m);

struct FactorizationCertificate {
    Word target;
    std::vector<LabelDelta> factors;  // FreeEquality steps are not kept
    Word residual;

    /// target == product of expanded factors * residual, and residual is trivial.
    bool verify(const Presentation& p) const;
};

struct FactorizeBudget {
    std::size_t max_steps = 200000;
    MembershipOracle oracle;
};

struct FactorizeResult {
    enum class Status { Verified, PreconditionFailed, Unknown };
    Status status = Status::Unknown;
    FactorizationCertificate certificate;
    std::string message;  // witness for PreconditionFailed, reason for Unknown
    std::vector<AdmissibleMove> script;
    std::vector<LabelDelta> deltas;  // one per script step
    std::optional<EquatorPicture> glued;  // starting picture, once both certificates exist
};

/// Certificates default to the membership oracle when not supplied.
FactorizeResult factorize(const Presentation& p, const Word& u, FamilyIndex i, const YLibrary* y = nullptr,
                          const FactorizeBudget& budget = {}, const std::optional<Sequence>& cert_r = std::nullopt,
                          const std::optional<Sequence>& cert_n = std::nullopt);

/// Replays a factorization script from the glued picture and checks every
/// delta against the labels. Returns the final picture.
EquatorPicture replay_factorization(const EquatorPicture& start, const std::vector<AdmissibleMove>& script,
                                    const std::vector<LabelDelta>& deltas, const YLibrary* y = nullptr);

struct GeneratorDescriptor {
    enum class Kind { SharedRelator, YPicture };
    Kind kind = Kind::SharedRelator;
    Word conjugator;
    RelatorId relator = 0;  // SharedRelator
    std::size_t entry = 0;  // YPicture
    Word word;              // W R W^-1 or W V_Y W^-1, reduced
};
struct GeneratorList {
    std::vector<Word> cosets;
    std::vector<GeneratorDescriptor> generators;
    /// Some coset comparisons were Unknown, so cosets may repeat.
    bool approximate = false;
    /// Every coset was reached before the bound.
    bool complete = false;
};
GeneratorList generator_list(const Presentation& p, FamilyIndex i, const YLibrary* y, std::size_t coset_bound,
                             const MembershipOracle& oracle = {});

std::string certificate_to_json(const Presentation& p, const FactorizationCertificate& c);

}  // namespace peiffer
