#pragma once

#include "peiffer/words.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace peiffer {

using RelatorId = std::size_t;

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("SyntaxError at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

class ValidationError : public Error {
public:
    ValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// 1-based index selecting the family r_i.
struct FamilyIndex {
    std::size_t value = 1;
    bool operator==(const FamilyIndex&) const = default;
};

/// <x | r> with r covered by (possibly overlapping) families r_1..r_n.
/// Relator identity is the table index; a word listed under two families is
/// one relator belonging to both.
class Presentation {
public:
    Presentation() = default;
    Presentation(Alphabet generators, std::vector<Word> relators, std::vector<std::set<RelatorId>> families);

    /// Builds from (family, word) pairs; throws ValidationError unless RH holds.
    static Presentation build(std::string_view generator_names,
                              const std::vector<std::pair<std::size_t, std::string>>& relators);

    const Alphabet& alphabet() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }
    const std::vector<Word>& relators() const { return relators_; }
    const Word& relator(RelatorId r) const { return relators_.at(r); }
    std::size_t relator_count() const { return relators_.size(); }
    std::size_t family_count() const { return families_.size(); }
    const std::set<RelatorId>& family(FamilyIndex i) const;
    const std::vector<std::set<RelatorId>>& families() const { return families_; }

    bool in_family(RelatorId r, FamilyIndex i) const { return family(i).contains(r); }
    /// Relators of every family except i (the r-hat_i of the theorem).
    std::set<RelatorId> complement_relators(FamilyIndex i) const;
    void check_family(FamilyIndex i) const;

    std::string word_text(const Word& w) const { return to_string(w, generators_); }
    Word parse(std::string_view text) const { return parse_word(text, generators_); }

private:
    Alphabet generators_;
    std::vector<Word> relators_;
    std::vector<std::set<RelatorId>> families_;
};

/// Empty result means the RH-hypothesis holds and every relator is covered.
std::vector<std::string> validate_rh(const Presentation& p);

/// Relators of r_i that also belong to some r_j, j != i.
std::set<RelatorId> shared_relators(const Presentation& p, FamilyIndex i);

/// Hypothesis of the independence corollary: families pairwise disjoint.
bool families_disjoint(const Presentation& p);

/// Line-oriented format: "gens: a b" then "rel <k>: <word>" lines; '#' starts a comment.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

}  // namespace peiffer
