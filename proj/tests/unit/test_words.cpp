#include "peiffer/words.hpp"

#include <doctest.h>

#include <random>

using namespace peiffer;

namespace {

Word w(const char* s) { return parse_word(s); }

Word random_word(std::mt19937& g, int max_len, int gens = 2) {
    std::uniform_int_distribution<int> len(0, max_len), l(0, 2 * gens - 1);
    Word out;
    for (int k = len(g); k > 0; --k) {
        const int x = l(g);
        out.push_back(Letter(x / 2, x % 2 ? -1 : 1));
    }
    return out;
}

// Stack-free reference: delete the first cancelling pair until none is left.
Word naive_reduce(Word x) {
    for (bool again = true; again;) {
        again = false;
        for (std::size_t k = 0; k + 1 < x.size(); ++k)
            if (x[k] == x[k + 1].inverse()) {
                x = concat(x.slice(0, k), x.slice(k + 2, x.size()));
                again = true;
                break;
            }
    }
    return x;
}

}  // namespace

TEST_CASE("free reduction") {
    CHECK(free_reduce(w("aAb")) == w("b"));
    CHECK(free_reduce(w("")).empty());
    CHECK(free_reduce(w("abBA")).empty());
    CHECK(multiply(w("ab"), w("Ba")) == w("aa"));
    CHECK(multiply(w(""), w("abB")) == w("a"));
    CHECK(conjugate(w("a"), w("b")) == w("baB"));
    CHECK(conjugate(w("a"), w("")) == w("a"));
    CHECK(conjugate(w("A"), w("a")) == w("A"));
    CHECK(commutator(w("a"), w("b")) == w("abAB"));
}

TEST_CASE("text notation") {
    CHECK(to_string(w("abA"), Alphabet({'a', 'b'})) == "abA");
    CHECK(to_string(w(""), Alphabet({'a', 'b'})) == "1");
    CHECK(parse_word("1").empty());
}

TEST_CASE("cyclic reduction and roots") {
    auto cr = cyclic_reduce(w("baB"));
    CHECK(cr.core == w("a"));
    CHECK(cr.conjugator == w("b"));
    cr = cyclic_reduce(w("ab"));
    CHECK(cr.core == w("ab"));
    CHECK(cr.conjugator.empty());
    cr = cyclic_reduce(w("baaB"));
    CHECK(cr.core == w("aa"));
    CHECK(cr.conjugator == w("b"));

    auto rp = root_and_period(w("aaa"));
    CHECK(rp.root == w("a"));
    CHECK(rp.period == 3);
    rp = root_and_period(w("ab"));
    CHECK(rp.period == 1);
    rp = root_and_period(w("abab"));
    CHECK(rp.root == w("ab"));
    CHECK(rp.period == 2);

    CHECK(is_cyclic_permutation(w("ab"), w("ba")));
    CHECK_FALSE(is_cyclic_permutation(w("ab"), w("aB")));
    CHECK(is_cyclic_permutation(w("abA"), w("Aab")));
}

TEST_CASE("property: reduction agrees with the naive rewriter") {
    std::mt19937 g(11);
    for (int k = 0; k < 2000; ++k) {
        const Word x = random_word(g, 14);
        const Word r = free_reduce(x);
        CHECK(r == naive_reduce(x));
        CHECK(is_reduced(r));
        CHECK(free_reduce(r) == r);
        CHECK(free_reduce(concat(x, inverse(x))).empty());
    }
}

TEST_CASE("property: multiplication is associative") {
    std::mt19937 g(12);
    for (int k = 0; k < 500; ++k) {
        const Word a = random_word(g, 8), b = random_word(g, 8), c = random_word(g, 8);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("property: cyclic reduction and root extraction") {
    std::mt19937 g(13);
    for (int k = 0; k < 500; ++k) {
        const Word x = free_reduce(random_word(g, 12));
        const auto cr = cyclic_reduce(x);
        CHECK(is_cyclically_reduced(cr.core));
        CHECK(free_reduce(concat({cr.conjugator, cr.core, inverse(cr.conjugator)})) == x);
        if (cr.core.empty()) continue;
        const auto rp = root_and_period(cr.core);
        CHECK(cr.core.size() % rp.period == 0);
        CHECK(is_cyclic_permutation(power(rp.root, rp.period), cr.core));
        // brute force over divisors: no shorter root exists
        for (std::size_t d = 1; d < rp.root.size(); ++d) {
            if (cr.core.size() % d) continue;
            bool periodic = true;
            for (std::size_t i = 0; i < cr.core.size(); ++i) periodic = periodic && cr.core[i] == cr.core[i % d];
            CHECK_FALSE(periodic);
        }
        for (std::size_t s = 0; s < cr.core.size(); ++s) CHECK(is_cyclic_permutation(cr.core, cr.core.rotated(s)));
        CHECK(CyclicWord(cr.core) == CyclicWord(cr.core.rotated(cr.core.size() / 2)));
    }
}

TEST_CASE("empty word is not a cyclic word") { CHECK_THROWS_AS(CyclicWord(Word{}), EmptyWordError); }
