#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "randset/bigint.hpp"
#include "randset/rng.hpp"

namespace randset {

// Letters over m generators are the integers 0..2m-1; generator i (1-based)
// is 2(i-1), its inverse 2(i-1)+1, so inversion is XOR with 1.
using Letter = std::uint8_t;

inline Letter letter_inverse(Letter x) { return x ^ 1; }
inline unsigned letter_generator(Letter x) { return x / 2 + 1; } // 1-based index
inline bool letter_is_inverse(Letter x) { return (x & 1) != 0; }

constexpr unsigned kMaxRank = 26; // a..z / A..Z serialization

// Serialization: generator i as 'a'+i-1, its inverse as the upper-case twin.
std::string letters_to_string(const std::vector<Letter>& letters);
std::vector<Letter> letters_from_string(const std::string& text, unsigned rank);

// Cancel adjacent inverse pairs; unique free-group normal form.
std::vector<Letter> free_reduce(std::vector<Letter> letters);

// Freely reduced word with cached cyclic-reducedness flag.
class Word {
public:
    Word() = default;

    // free-reduces the input
    static Word from_letters(std::vector<Letter> letters);
    static Word parse(const std::string& text, unsigned rank);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool cyclically_reduced() const { return cyclically_reduced_; }

    Word inverse() const;
    std::string str() const { return letters_to_string(letters_); }

    bool operator==(const Word& other) const { return letters_ == other.letters_; }
    bool operator<(const Word& other) const { return letters_ < other.letters_; }

private:
    std::vector<Letter> letters_;
    bool cyclically_reduced_ = true;
};

// Strip matching first/last inverse pairs after free reduction.
Word cyclic_reduce(const Word& w);

// w = u^j for some j >= 2, tested via the failure-function period.
bool is_true_power(const Word& w);

// Exact counts of cyclically reduced words: counts[t] = |S_t| for
// t = 1..max_length, cumulative[t] = |B_t|. Computed with a three-state
// transfer recurrence over (relation of last letter to the first), in
// big-integer arithmetic.
struct WordCountTable {
    unsigned rank = 0;
    std::vector<BigUint> counts;     // index 0 unused
    std::vector<BigUint> cumulative; // index 0 unused

    const BigUint& exact(unsigned length) const { return counts.at(length); }
    const BigUint& ball(unsigned length) const { return cumulative.at(length); }
};

WordCountTable count_cyclically_reduced(unsigned rank, unsigned max_length);

// All cyclically reduced words of exactly the given length, in
// lexicographic letter order. Intended for desk-scale lengths.
std::vector<Word> enumerate_cyclically_reduced(unsigned rank, unsigned length);

// Uniform over B_max_length: length t with probability |S_t| / |B|, then
// uniform over S_t by sampling reduced words and rejecting the
// non-cyclically-reduced ones (acceptance >= (2m-2)/(2m-1)).
Word sample_cyclically_reduced(unsigned rank, unsigned max_length, SeedSpec seed);

// Same, drawing from an already-built table with a live generator.
Word sample_cyclically_reduced(const WordCountTable& table, unsigned max_length, Rng& rng);

} // namespace randset
