#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "randset/stats.hpp"
#include "randset/words.hpp"

using namespace randset;

TEST_CASE("free reduction") {
    CHECK(Word::parse("aA", 2).empty());
    CHECK(Word::parse("baAb", 2).str() == "bb");
    CHECK(Word::parse("abB", 2).str() == "a");
    // idempotent and length-nonincreasing on junk input
    Rng rng({88, 0});
    for (int t = 0; t < 200; ++t) {
        std::vector<Letter> raw(rng.below(12));
        for (auto& x : raw) x = static_cast<Letter>(rng.below(6));
        const auto once = free_reduce(raw);
        CHECK(once.size() <= raw.size());
        CHECK(free_reduce(once) == once);
    }
}

TEST_CASE("cyclic reduction strips conjugation") {
    CHECK(cyclic_reduce(Word::parse("abA", 2)).str() == "b");
    CHECK(cyclic_reduce(Word::parse("ab", 2)).str() == "ab");
    CHECK(cyclic_reduce(Word::parse("abcBA", 3)).str() == "c");
    // output invariant under rotate-then-reduce checks
    const Word w = cyclic_reduce(Word::parse("babaB", 2));
    CHECK(w.cyclically_reduced());
    CHECK(w.length() == 3);
}

TEST_CASE("every rotation of a cyclically reduced word is cyclically reduced") {
    const WordCountTable table = count_cyclically_reduced(2, 7);
    Rng rng({321, 0});
    for (int t = 0; t < 100; ++t) {
        const Word w = sample_cyclically_reduced(table, 7, rng);
        auto letters = w.letters();
        for (std::size_t rot = 0; rot < w.length(); ++rot) {
            std::rotate(letters.begin(), letters.begin() + 1, letters.end());
            const Word rotated = Word::from_letters(letters);
            CHECK(rotated.length() == w.length()); // already freely reduced
            CHECK(rotated.cyclically_reduced());
        }
    }
}

TEST_CASE("letter serialization round trip") {
    const std::string text = "abBAcC";
    CHECK(letters_to_string(letters_from_string(text, 3)) == text);
    CHECK_THROWS_AS(letters_from_string("z", 2), std::domain_error);
    CHECK_THROWS_AS(letters_from_string("a b", 2), std::domain_error);
}

TEST_CASE("exact counts for small ranks") {
    const WordCountTable t2 = count_cyclically_reduced(2, 3);
    CHECK(t2.exact(1).to_u64() == 4);
    CHECK(t2.exact(2).to_u64() == 12);
    CHECK(t2.exact(3).to_u64() == 28);
    CHECK(t2.ball(3).to_u64() == 44);
}

TEST_CASE("transfer counts equal brute enumeration") {
    for (unsigned rank : {2u, 3u}) {
        const unsigned max_t = rank == 2 ? 8 : 5;
        const WordCountTable table = count_cyclically_reduced(rank, max_t);
        for (unsigned t = 1; t <= max_t; ++t) {
            CHECK(table.exact(t).to_u64() == oracles::brute_cyclically_reduced(rank, t).size());
        }
    }
}

TEST_CASE("sandwich bounds hold on every row") {
    for (unsigned rank : {2u, 3u, 5u}) {
        const unsigned max_t = 50;
        const WordCountTable table = count_cyclically_reduced(rank, max_t);
        const std::uint64_t m2 = 2 * rank;
        for (unsigned t = 2; t <= max_t; ++t) {
            BigUint lower(m2);
            for (unsigned i = 0; i < t - 2; ++i) lower.mul_small(m2 - 1);
            lower.mul_small(m2 - 2);
            BigUint upper(m2);
            for (unsigned i = 0; i < t - 1; ++i) upper.mul_small(m2 - 1);
            CHECK(lower <= table.exact(t));
            CHECK(table.exact(t) <= upper);
        }
    }
}

TEST_CASE("cumulative counts sit between the geometric-sum bounds") {
    // 2m[(2m-1)^t - 1]/(2m-1) <= |B_t| <= 2m[(2m-1)^t - 1]/(2m-2),
    // checked multiplied out so only big-integer + and * are needed
    for (unsigned rank : {2u, 3u}) {
        const std::uint64_t m2 = 2 * rank;
        const WordCountTable table = count_cyclically_reduced(rank, 45);
        for (unsigned t = 1; t <= 45; ++t) {
            BigUint pow_term(m2); // 2m (2m-1)^t
            for (unsigned i = 0; i < t; ++i) pow_term.mul_small(m2 - 1);

            BigUint lhs = table.ball(t);
            lhs.mul_small(m2 - 1);
            lhs += BigUint(m2);
            CHECK(pow_term <= lhs);

            BigUint rhs = table.ball(t);
            rhs.mul_small(m2 - 2);
            rhs += BigUint(m2);
            CHECK(rhs <= pow_term);
        }
    }
}

TEST_CASE("rejection acceptance rate bound, exactly from the table") {
    // |S_t| / (2m (2m-1)^(t-1)) >= (2m-2)/(2m-1), i.e. the sampler accepts
    // with at least that probability at every length
    for (unsigned rank : {2u, 4u}) {
        const std::uint64_t m2 = 2 * rank;
        const WordCountTable table = count_cyclically_reduced(rank, 40);
        for (unsigned t = 2; t <= 40; ++t) {
            BigUint lhs = table.exact(t);
            lhs.mul_small(m2 - 1);
            BigUint rhs(m2);
            for (unsigned i = 0; i < t - 1; ++i) rhs.mul_small(m2 - 1);
            rhs.mul_small(m2 - 2);
            CHECK(lhs >= rhs);
        }
    }
}

TEST_CASE("enumeration matches the brute filter") {
    for (unsigned rank : {2u, 3u}) {
        for (unsigned t = 1; t <= (rank == 2 ? 6u : 4u); ++t) {
            const auto fancy = enumerate_cyclically_reduced(rank, t);
            const auto brute = oracles::brute_cyclically_reduced(rank, t);
            REQUIRE(fancy.size() == brute.size());
            std::set<std::vector<Letter>> fancy_set;
            for (const auto& w : fancy) fancy_set.insert(w.letters());
            for (const auto& w : brute) CHECK(fancy_set.count(w) == 1);
        }
    }
}

TEST_CASE("sampler hits single letters uniformly at max length 1") {
    std::map<std::string, int> counts;
    for (int t = 0; t < 8000; ++t)
        ++counts[sample_cyclically_reduced(2, 1, {17, static_cast<std::uint64_t>(t)}).str()];
    CHECK(counts.size() == 4);
    for (const auto& [w, c] : counts) CHECK(std::abs(c / 8000.0 - 0.25) < 0.02);
}

TEST_CASE("sampler length distribution at m=2, max 3") {
    // lengths 1,2,3 with probabilities 4/44, 12/44, 28/44
    const WordCountTable table = count_cyclically_reduced(2, 3);
    Rng rng({4096, 0});
    std::map<std::size_t, int> lengths;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) ++lengths[sample_cyclically_reduced(table, 3, rng).length()];
    const double probs[4] = {0.0, 4.0 / 44.0, 12.0 / 44.0, 28.0 / 44.0};
    for (std::size_t len = 1; len <= 3; ++len) {
        const double expected = probs[len];
        const double sigma = std::sqrt(expected * (1.0 - expected) / trials);
        CHECK(std::abs(lengths[len] / static_cast<double>(trials) - expected) <= 3.5 * sigma);
    }
}

TEST_CASE("sampler uniformity over B_2 (m=2), chi-square at 0.01") {
    const WordCountTable table = count_cyclically_reduced(2, 2);
    Rng rng({271828, 1});
    std::map<std::string, std::uint64_t> counts;
    for (int t = 0; t < 20000; ++t) ++counts[sample_cyclically_reduced(table, 2, rng).str()];
    REQUIRE(counts.size() == 16);
    std::vector<std::uint64_t> cells;
    for (const auto& [w, c] : counts) cells.push_back(c);
    CHECK(chi_square_uniform(cells).p_value > 0.01);
}

TEST_CASE("sampled words satisfy the word invariants") {
    const WordCountTable table = count_cyclically_reduced(3, 12);
    Rng rng({31, 7});
    for (int t = 0; t < 500; ++t) {
        const Word w = sample_cyclically_reduced(table, 12, rng);
        REQUIRE(!w.empty());
        CHECK(w.length() <= 12);
        CHECK(w.cyclically_reduced());
        for (Letter x : w.letters()) CHECK(x < 6);
    }
}

namespace {
// independent period scan: w is a true power iff some proper divisor
// period repeats across the whole word
bool power_oracle(const Word& w) {
    const auto& s = w.letters();
    const std::size_t len = s.size();
    for (std::size_t p = 1; p <= len / 2; ++p) {
        if (len % p != 0) continue;
        bool all = true;
        for (std::size_t i = p; i < len && all; ++i) all = (s[i] == s[i - p]);
        if (all) return true;
    }
    return false;
}
} // namespace

TEST_CASE("true power detection") {
    CHECK(is_true_power(Word::parse("abab", 2)));
    CHECK_FALSE(is_true_power(Word::parse("aba", 2)));
    CHECK(is_true_power(Word::parse("aaaa", 2)));
    CHECK_FALSE(is_true_power(Word::parse("a", 2)));
    CHECK_THROWS_AS(is_true_power(Word()), std::domain_error);

    const WordCountTable table = count_cyclically_reduced(2, 6);
    Rng rng({5, 5});
    for (int t = 0; t < 400; ++t) {
        const Word u = sample_cyclically_reduced(table, 6, rng);
        CHECK(is_true_power(u) == power_oracle(u));
        // u^j stays cyclically reduced and must be flagged
        std::vector<Letter> repeated;
        const unsigned j = 2 + static_cast<unsigned>(rng.below(3));
        for (unsigned rep = 0; rep < j; ++rep)
            repeated.insert(repeated.end(), u.letters().begin(), u.letters().end());
        const Word power = Word::from_letters(repeated);
        REQUIRE(power.length() == u.length() * j);
        CHECK(is_true_power(power));
    }
}
