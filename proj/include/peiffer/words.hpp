#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace peiffer {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyWordError : public Error {
public:
    EmptyWordError() : Error("EmptyWord: operation requires a nonempty word") {}
};

using GeneratorId = std::uint32_t;

/// A generator or its inverse, packed as (gen << 1) | inverted so that the
/// natural integer order is (generator index, sign) with +1 before -1.
class Letter {
public:
    constexpr Letter() = default;
    constexpr Letter(GeneratorId gen, int exponent) : code_((gen << 1) | (exponent < 0 ? 1u : 0u)) {}

    static constexpr Letter from_code(std::uint32_t code) {
        Letter l;
        l.code_ = code;
        return l;
    }

    constexpr GeneratorId gen() const { return code_ >> 1; }
    constexpr int exponent() const { return (code_ & 1u) ? -1 : 1; }
    constexpr bool inverted() const { return code_ & 1u; }
    constexpr Letter inverse() const { return from_code(code_ ^ 1u); }
    constexpr std::uint32_t code() const { return code_; }

    constexpr auto operator<=>(const Letter&) const = default;

private:
    std::uint32_t code_ = 0;
};

/// Letters in a flat array. Unreduced words are first-class values.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter l) { letters_.push_back(l); }
    void append(const Word& w) { letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end()); }
    Word slice(std::size_t from, std::size_t to) const;
    /// Letters from position k onwards followed by the first k letters.
    Word rotated(std::size_t k) const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

/// Identical concatenation, no cancellation.
Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<Word> parts);

Word free_reduce(const Word& w);
bool is_reduced(const Word& w);
/// Formal inverse: reversed letters, each inverted. Not reduced.
Word inverse(const Word& w);
Word multiply(const Word& u, const Word& v);
/// free_reduce(by * w * by^-1)
Word conjugate(const Word& w, const Word& by);
/// [u, v] = u v u^-1 v^-1, reduced.
Word commutator(const Word& u, const Word& v);
bool freely_equal(const Word& u, const Word& v);
bool freely_trivial(const Word& w);
Word power(const Word& w, int n);

struct CyclicReduction {
    Word core;
    Word conjugator;
};
/// core is cyclically reduced and conjugator * core * conjugator^-1 == free_reduce(w).
CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

bool is_cyclic_permutation(const Word& u, const Word& v);
bool is_cyclic_permutation_up_to_inversion(const Word& u, const Word& v);
/// Rotation offset k with u.rotated(k) == v, or -1.
long find_rotation(const Word& u, const Word& v);

/// Freely and cyclically reduced nonempty word stored as its least rotation.
class CyclicWord {
public:
    /// Throws EmptyWordError on empty input, Error when not cyclically reduced.
    explicit CyclicWord(const Word& w);

    const Word& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    CyclicWord inverse() const { return CyclicWord(peiffer::inverse(word_)); }

    bool operator==(const CyclicWord&) const = default;
    auto operator<=>(const CyclicWord&) const = default;

private:
    Word word_;
};

Word least_rotation(const Word& w);

struct RootAndPeriod {
    Word root;
    int period = 1;
};
/// r == root^period identically; root is not a proper power.
RootAndPeriod root_and_period(const Word& r);
RootAndPeriod root_and_period(const CyclicWord& r);

/// Text notation: lowercase letter = generator, uppercase = inverse, "1" or "" = empty.
/// Generator ids are assigned by alphabet position ('a' -> 0) unless an explicit
/// alphabet is given.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<char> names) : names_(std::move(names)) {}
    static Alphabet latin(std::size_t count);

    std::size_t size() const { return names_.size(); }
    char name(GeneratorId g) const;
    /// Returns size() when the character is not a known generator.
    GeneratorId find(char lower) const;
    const std::vector<char>& names() const { return names_; }

private:
    std::vector<char> names_;
};

/// Throws Error naming the offending column.
Word parse_word(std::string_view text, const Alphabet& alphabet);
Word parse_word(std::string_view text);
std::string to_string(const Word& w, const Alphabet& alphabet);
std::string to_string(const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace peiffer
