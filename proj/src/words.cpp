#include "peiffer/words.hpp"

#include <algorithm>
#include <cctype>

namespace peiffer {

Word Word::slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(to)));
}

Word Word::rotated(std::size_t k) const {
    if (letters_.empty()) return {};
    k %= letters_.size();
    std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
    return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.append(v);
    return out;
}

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const Word& p : parts) out.append(p);
    return out;
}

Word free_reduce(const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter l : w) {
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return Word(std::move(stack));
}

bool is_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1].inverse()) return false;
    return true;
}

Word inverse(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
    return Word(std::move(out));
}

Word multiply(const Word& u, const Word& v) { return free_reduce(concat(u, v)); }

Word conjugate(const Word& w, const Word& by) {
    return free_reduce(concat({by, w, inverse(by)}));
}

Word commutator(const Word& u, const Word& v) {
    return free_reduce(concat({u, v, inverse(u), inverse(v)}));
}

bool freely_equal(const Word& u, const Word& v) { return free_reduce(u) == free_reduce(v); }

bool freely_trivial(const Word& w) { return free_reduce(w).empty(); }

Word power(const Word& w, int n) {
    Word base = n < 0 ? inverse(w) : w;
    Word out;
    for (int i = 0; i < std::abs(n); ++i) out.append(base);
    return free_reduce(out);
}

CyclicReduction cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return {r.slice(lo, hi), r.slice(0, lo)};
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_reduced(w)) return false;
    return w.size() < 2 || w[0] != w[w.size() - 1].inverse();
}

long find_rotation(const Word& u, const Word& v) {
    if (u.size() != v.size()) return -1;
    if (u.empty()) return 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        bool match = true;
        for (std::size_t i = 0; i < u.size() && match; ++i)
            match = u[(i + k) % u.size()] == v[i];
        if (match) return static_cast<long>(k);
    }
    return -1;
}

bool is_cyclic_permutation(const Word& u, const Word& v) { return find_rotation(u, v) >= 0; }

bool is_cyclic_permutation_up_to_inversion(const Word& u, const Word& v) {
    return is_cyclic_permutation(u, v) || is_cyclic_permutation(u, inverse(v));
}

Word least_rotation(const Word& w) {
    if (w.empty()) return w;
    // Booth-style scan is unnecessary at relator sizes; compare all rotations.
    std::size_t best = 0;
    const std::size_t n = w.size();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            Letter a = w[(k + i) % n], b = w[(best + i) % n];
            if (a != b) {
                if (a < b) best = k;
                break;
            }
        }
    }
    return w.rotated(best);
}

CyclicWord::CyclicWord(const Word& w) {
    if (w.empty()) throw EmptyWordError();
    if (!is_cyclically_reduced(w)) throw Error("CyclicWord: word is not cyclically reduced");
    word_ = least_rotation(w);
}

RootAndPeriod root_and_period(const Word& r) {
    if (r.empty()) throw EmptyWordError();
    const std::size_t n = r.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = r[i] == r[i - d];
        if (periodic) return {r.slice(0, d), static_cast<int>(n / d)};
    }
    return {r, 1};
}

RootAndPeriod root_and_period(const CyclicWord& r) { return root_and_period(r.word()); }

Alphabet Alphabet::latin(std::size_t count) {
    std::vector<char> names;
    for (std::size_t i = 0; i < count; ++i) names.push_back(static_cast<char>('a' + i));
    return Alphabet(std::move(names));
}

char Alphabet::name(GeneratorId g) const {
    if (names_.empty()) return static_cast<char>('a' + g);
    return names_.at(g);
}

GeneratorId Alphabet::find(char lower) const {
    if (names_.empty()) return lower >= 'a' && lower <= 'z' ? static_cast<GeneratorId>(lower - 'a') : 26u;
    auto it = std::find(names_.begin(), names_.end(), lower);
    return static_cast<GeneratorId>(it - names_.begin());
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    Word w;
    if (text == "1") return w;
    const std::size_t limit = alphabet.size() == 0 ? 26 : alphabet.size();
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw Error("bad letter '" + std::string(1, c) + "' at column " + std::to_string(i + 1));
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const GeneratorId g = alphabet.find(lower);
        if (g >= limit)
            throw Error("unknown generator '" + std::string(1, lower) + "' at column " + std::to_string(i + 1));
        w.push_back(Letter(g, std::isupper(static_cast<unsigned char>(c)) ? -1 : 1));
    }
    return w;
}

Word parse_word(std::string_view text) { return parse_word(text, Alphabet{}); }

std::string to_string(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "1";
    std::string s;
    for (Letter l : w) {
        const char c = alphabet.name(l.gen());
        s.push_back(l.inverted() ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
    }
    return s;
}

std::string to_string(const Word& w) { return to_string(w, Alphabet{}); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
        h ^= l.code() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace peiffer
