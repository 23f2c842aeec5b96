#include "randset/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace randset {

std::string letters_to_string(const std::vector<Letter>& letters) {
    std::string out;
    out.reserve(letters.size());
    for (Letter x : letters) {
        const char base = letter_is_inverse(x) ? 'A' : 'a';
        out.push_back(static_cast<char>(base + (x / 2)));
    }
    return out;
}

std::vector<Letter> letters_from_string(const std::string& text, unsigned rank) {
    if (rank < 1 || rank > kMaxRank)
        throw std::domain_error("letters_from_string: rank outside 1..26");
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char c : text) {
        unsigned idx;
        bool inv;
        if (c >= 'a' && c <= 'z') {
            idx = static_cast<unsigned>(c - 'a');
            inv = false;
        } else if (c >= 'A' && c <= 'Z') {
            idx = static_cast<unsigned>(c - 'A');
            inv = true;
        } else {
            throw std::domain_error("letters_from_string: invalid character");
        }
        if (idx >= rank)
            throw std::domain_error("letters_from_string: generator outside rank");
        out.push_back(static_cast<Letter>(2 * idx + (inv ? 1 : 0)));
    }
    return out;
}

std::vector<Letter> free_reduce(std::vector<Letter> letters) {
    std::vector<Letter> stack;
    stack.reserve(letters.size());
    for (Letter x : letters) {
        if (!stack.empty() && stack.back() == letter_inverse(x)) {
            stack.pop_back();
        } else {
            stack.push_back(x);
        }
    }
    return stack;
}

namespace {
bool cyclically_reduced_letters(const std::vector<Letter>& letters) {
    return letters.size() < 2 || letters.back() != letter_inverse(letters.front());
}
} // namespace

Word Word::from_letters(std::vector<Letter> letters) {
    Word w;
    w.letters_ = free_reduce(std::move(letters));
    w.cyclically_reduced_ = cyclically_reduced_letters(w.letters_);
    return w;
}

Word Word::parse(const std::string& text, unsigned rank) {
    return from_letters(letters_from_string(text, rank));
}

Word Word::inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (Letter& x : inv) x = letter_inverse(x);
    Word w;
    w.letters_ = std::move(inv); // inverse of a reduced word is reduced
    w.cyclically_reduced_ = cyclically_reduced_letters(w.letters_);
    return w;
}

Word cyclic_reduce(const Word& w) {
    std::size_t lo = 0;
    std::size_t hi = w.letters().size();
    while (hi - lo >= 2 && w.letters()[hi - 1] == letter_inverse(w.letters()[lo])) {
        ++lo;
        --hi;
    }
    return Word::from_letters({w.letters().begin() + static_cast<std::ptrdiff_t>(lo),
                               w.letters().begin() + static_cast<std::ptrdiff_t>(hi)});
}

bool is_true_power(const Word& w) {
    if (w.empty()) throw std::domain_error("is_true_power: empty word");
    if (!w.cyclically_reduced()) throw std::domain_error("is_true_power: word not cyclically reduced");
    const auto& s = w.letters();
    const std::size_t len = s.size();
    // failure function; smallest period = len - fail[len - 1]
    std::vector<std::size_t> fail(len, 0);
    for (std::size_t i = 1; i < len; ++i) {
        std::size_t j = fail[i - 1];
        while (j > 0 && s[i] != s[j]) j = fail[j - 1];
        if (s[i] == s[j]) ++j;
        fail[i] = j;
    }
    const std::size_t period = len - fail[len - 1];
    return period < len && len % period == 0;
}

WordCountTable count_cyclically_reduced(unsigned rank, unsigned max_length) {
    if (rank < 2) throw std::domain_error("count_cyclically_reduced: rank must be >= 2");
    if (max_length < 1) throw std::domain_error("count_cyclically_reduced: length must be >= 1");
    const std::uint64_t m2 = 2ULL * rank;

    WordCountTable table;
    table.rank = rank;
    table.counts.resize(max_length + 1);
    table.cumulative.resize(max_length + 1);

    // Reduced words with a fixed first letter a, grouped by the last letter:
    //   same      = ends with a
    //   inv       = ends with a^-1
    //   other     = ends with one specific letter outside {a, a^-1}
    // Appending any letter except the inverse of the current last one keeps
    // the word reduced, which gives the recurrence below. Cyclically reduced
    // words exclude the inv class.
    BigUint same = 1;
    BigUint inv = 0;
    BigUint other = 0;
    table.counts[1] = BigUint(m2);
    table.cumulative[1] = BigUint(m2);
    for (unsigned t = 2; t <= max_length; ++t) {
        BigUint next_same = other;
        next_same.mul_small(m2 - 2);
        next_same += same;
        BigUint next_inv = other;
        next_inv.mul_small(m2 - 2);
        next_inv += inv;
        BigUint next_other = other;
        next_other.mul_small(m2 - 3);
        next_other += same;
        next_other += inv;
        same = std::move(next_same);
        inv = std::move(next_inv);
        other = std::move(next_other);

        BigUint st = other;
        st.mul_small(m2 - 2);
        st += same;
        st.mul_small(m2);
        table.counts[t] = st;
        table.cumulative[t] = table.cumulative[t - 1] + table.counts[t];
    }
    return table;
}

std::vector<Word> enumerate_cyclically_reduced(unsigned rank, unsigned length) {
    if (rank < 2) throw std::domain_error("enumerate_cyclically_reduced: rank must be >= 2");
    if (length < 1) throw std::domain_error("enumerate_cyclically_reduced: length must be >= 1");
    const unsigned m2 = 2 * rank;
    std::vector<Word> out;
    std::vector<Letter> current;
    current.reserve(length);

    // depth-first over reduced prefixes
    auto recurse = [&](auto&& self, unsigned depth) -> void {
        if (depth == length) {
            if (length < 2 || current.back() != letter_inverse(current.front()))
                out.push_back(Word::from_letters(current));
            return;
        }
        for (unsigned x = 0; x < m2; ++x) {
            if (!current.empty() && current.back() == letter_inverse(static_cast<Letter>(x)))
                continue;
            current.push_back(static_cast<Letter>(x));
            self(self, depth + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

Word sample_cyclically_reduced(const WordCountTable& table, unsigned max_length, Rng& rng) {
    if (max_length + 1 > table.counts.size())
        throw std::domain_error("sample_cyclically_reduced: table shorter than max_length");
    const unsigned m2 = 2 * table.rank;

    // length t with probability |S_t| / |B_max|
    const BigUint draw = BigUint::uniform_below(table.cumulative[max_length], rng);
    unsigned length = 1;
    while (draw >= table.cumulative[length]) ++length;

    std::vector<Letter> letters(length);
    for (;;) {
        letters[0] = static_cast<Letter>(rng.below(m2));
        for (unsigned i = 1; i < length; ++i) {
            // uniform among the 2m-1 letters that keep the word reduced
            const Letter forbidden = letter_inverse(letters[i - 1]);
            Letter x = static_cast<Letter>(rng.below(m2 - 1));
            if (x >= forbidden) x = static_cast<Letter>(x + 1);
            letters[i] = x;
        }
        if (length < 2 || letters.back() != letter_inverse(letters.front()))
            return Word::from_letters(std::move(letters));
    }
}

Word sample_cyclically_reduced(unsigned rank, unsigned max_length, SeedSpec seed) {
    const WordCountTable table = count_cyclically_reduced(rank, max_length);
    Rng rng(seed);
    return sample_cyclically_reduced(table, max_length, rng);
}

} // namespace randset
