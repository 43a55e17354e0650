#include "doctest.h"

#include <random>
#include <set>

#include "tb/farey.hpp"
#include "oracles.hpp"

using namespace tb;

TEST_CASE("farey neighbours and mediants") {
    CHECK(is_farey_neighbor(Slope(0, 1), Slope(1, 0)));
    CHECK(is_farey_neighbor(Slope(0, 1), Slope(1, 1)));
    CHECK_FALSE(is_farey_neighbor(Slope(1, 2), Slope(1, 0)));

    CHECK(mediant(Slope(0, 1), Slope(1, 0)) == Slope(1, 1));
    CHECK(mediant(Slope(1, 1), Slope(1, 0)) == Slope(2, 1));
    CHECK(mediant(Slope(1, 2), Slope(1, 3)) == Slope(2, 5));
    CHECK_THROWS_AS(mediant(Slope(1, 2), Slope(1, 0)), NotNeighbours);
}

TEST_CASE("slopes are canonical") {
    CHECK(Slope(-1, 0) == Slope(1, 0));
    CHECK(Slope(3, -4) == Slope(-3, 4));
    CHECK_THROWS(Slope(2, 4));
    CHECK_THROWS(Slope(0, 0));
}

TEST_CASE("mediant of random neighbours neighbours both") {
    std::mt19937 rng(7);
    SurfaceMarking m;
    for (int i = 0; i < 500; ++i) {
        m = elementary_move(m, rng() % 2 ? Letter::R : Letter::L);
        if (std::max({std::abs(m.basis.a), std::abs(m.basis.b), std::abs(m.basis.c), std::abs(m.basis.d)}) > 1'000'000) m = {};
        const Slope s = m.first(), t = m.second();
        const Slope md = mediant(s, t);
        CHECK(is_farey_neighbor(md, s));
        CHECK(is_farey_neighbor(md, t));
    }
}

TEST_CASE("matrix of word") {
    CHECK(matrix_of_word(MonodromyWord("RL")) == UnimodularMatrix{2, 1, 1, 1});
    CHECK(matrix_of_word(MonodromyWord("RRLL")) == UnimodularMatrix{5, 2, 2, 1});
    CHECK(matrix_of_word(MonodromyWord("R", -1)) == UnimodularMatrix{-1, -1, 0, -1});
    CHECK(matrix_of_word(MonodromyWord::parse("-RL")) == UnimodularMatrix{-2, -1, -1, -1});
}

TEST_CASE("word parsing and canonical rotation") {
    CHECK(MonodromyWord("LR").letter_string() == "RL");
    CHECK(MonodromyWord("LLRLR").letter_string() == "RLRLL");
    CHECK(canonical_rotation("LRR") == "RRL");
    CHECK(MonodromyWord::parse("-LRR").str() == "-RRL");
    CHECK_THROWS_AS(MonodromyWord(""), std::invalid_argument);
    CHECK_THROWS_AS(MonodromyWord("RXL"), std::invalid_argument);
}

TEST_CASE("matrix parsing") {
    CHECK(UnimodularMatrix::parse("2,1;1,1") == UnimodularMatrix{2, 1, 1, 1});
    CHECK(UnimodularMatrix::parse(" -1, 0 ; 0, -1 ") == UnimodularMatrix{-1, 0, 0, -1});
    CHECK_THROWS_AS(UnimodularMatrix::parse("2,1;1,2"), NotUnimodular);
    CHECK_THROWS_AS(UnimodularMatrix::parse("2,1,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(UnimodularMatrix::parse("a,b;c,d"), std::invalid_argument);
}

TEST_CASE("factorize matches the brute-force conjugacy oracle") {
    // Every cyclic word of length <= 8 with both letters, and both signs, that
    // is conjugate to the input by a matrix with entries bounded by 50.
    auto oracle = [](const UnimodularMatrix& m) {
        std::set<std::string> found;
        for (const std::string& w : oracle::cyclic_words_with_both_letters(8)) {
            for (int sign : {+1, -1}) {
                const MonodromyWord word(w, sign);
                if (oracle::conjugate_within(m, matrix_of_word(word), 50)) found.insert(word.str());
            }
        }
        return found;
    };
    CHECK(oracle({2, 1, 1, 1}) == std::set<std::string>{"RL"});
    CHECK(oracle({5, 2, 2, 1}) == std::set<std::string>{"RRLL"});
    CHECK(factorize({2, 1, 1, 1}).str() == "RL");
    CHECK(factorize({5, 2, 2, 1}).str() == "RRLL");
    // R^5 L has the same trace as RRLL but is not conjugate to it.
    CHECK(oracle({6, 5, 1, 1}) == std::set<std::string>{"RRRRRL"});
    CHECK(factorize({6, 5, 1, 1}).str() == "RRRRRL");
    CHECK(oracle({-3, -1, -2, -1}) == std::set<std::string>{factorize({-3, -1, -2, -1}).str()});
}

TEST_CASE("factorize rejects non-hyperbolic and non-unimodular input") {
    CHECK_THROWS_AS(factorize({1, 1, 0, 1}), NotHyperbolic);
    CHECK_THROWS_AS(factorize({0, -1, 1, 0}), NotHyperbolic);
    CHECK_THROWS_AS(factorize({1, 1, -1, 0}), NotHyperbolic);
    CHECK_THROWS_AS(factorize({-1, 0, 0, -1}), NotHyperbolic);
    CHECK_THROWS_AS(factorize({2, 1, 1, 2}), NotUnimodular);
}

TEST_CASE("round trip over all words of length at most 12") {
    int count = 0;
    for (int n = 2; n <= 12; ++n) {
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            std::string w;
            for (int i = 0; i < n; ++i) w += (bits >> i) & 1 ? 'L' : 'R';
            if (w.find('R') == std::string::npos || w.find('L') == std::string::npos) continue;
            for (int sign : {+1, -1}) {
                const MonodromyWord word(w, sign);
                const UnimodularMatrix m = matrix_of_word(word);
                REQUIRE(std::abs(m.trace()) >= 3);
                const MonodromyWord f = factorize(m);
                REQUIRE(f.letter_string() == canonical_rotation(w));
                REQUIRE(f.sign() == sign);
                ++count;
            }
        }
    }
    CHECK(count == 2 * ((8192 - 4) - 2 * 11));
}

TEST_CASE("factorization is a conjugacy invariant") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string w = oracle::random_word_with_both_letters(rng, 10);
        const MonodromyWord word(w, rng() % 2 ? 1 : -1);
        const UnimodularMatrix m = matrix_of_word(word);
        for (int k = 0; k < 10; ++k) {
            const UnimodularMatrix g = oracle::random_unimodular(rng, 20);
            const UnimodularMatrix conj = g * m * g.inverse();
            const Factorization f = factorize_with_conjugator(conj);
            REQUIRE(f.word == word);
            CHECK(f.conjugator.inverse() * conj * f.conjugator == matrix_of_word(f.word));
        }
    }
}

TEST_CASE("elementary moves walk the dual tree") {
    const SurfaceMarking start;
    CHECK(start.triangle() == FareyTriangle::of(Slope(0, 1), Slope(1, 0), Slope(1, 1)));
    CHECK(elementary_move(start, Letter::R).triangle() == FareyTriangle::of(Slope(1, 0), Slope(1, 1), Slope(2, 1)));
    CHECK(elementary_move(start, Letter::L).triangle() == FareyTriangle::of(Slope(0, 1), Slope(1, 1), Slope(1, 2)));

    std::mt19937 rng(3);
    SurfaceMarking m;
    for (int i = 0; i < 40; ++i) {
        const Letter x = rng() % 2 ? Letter::R : Letter::L;
        const SurfaceMarking next = elementary_move(m, x);
        // Exactly one slope changes, and the old and new slopes are the two
        // diagonals a + b and a - b of the square on the kept slopes a, b.
        std::vector<Slope> kept, gone, added;
        for (const Slope& s : next.triangle().slopes) (m.triangle().contains(s) ? kept : added).push_back(s);
        for (const Slope& s : m.triangle().slopes)
            if (!next.triangle().contains(s)) gone.push_back(s);
        REQUIRE(kept.size() == 2);
        REQUIRE(added.size() == 1);
        const Slope sum(kept[0].p() + kept[1].p(), kept[0].q() + kept[1].q());
        const Slope diff(kept[0].p() - kept[1].p(), kept[0].q() - kept[1].q());
        CHECK(std::set<Slope>{added[0], gone[0]} == std::set<Slope>{sum, diff});
        CHECK(inverse_elementary_move(next, x).basis == m.basis);
        m = next;
    }
}
