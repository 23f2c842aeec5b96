#pragma once

// Brute-force oracles for the test suite. Everything here recomputes the
// quantities under test from first principles (enumeration, direct modular
// indexing) and stays independent of the library code paths it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "randset/multidim.hpp"
#include "randset/smallcancel.hpp"
#include "randset/words.hpp"

namespace oracles {

// Exact rational with 128-bit terms.
struct Rat {
    __int128 num = 0;
    __int128 den = 1;

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a != 0) {
            num /= a;
            den /= a;
        }
    }

    bool operator==(const Rat& o) const { return num * o.den == o.num * den; }
    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

struct ExactMoments {
    Rat mean;
    Rat variance;
};

// Enumerates every pair of subsets of {0..n-1} with |a| = ka, |b| = kb via
// bitmasks and accumulates |a & b| exactly.
inline ExactMoments exact_uniform_intersection_moments(unsigned n, unsigned ka, unsigned kb) {
    if (n > 16) throw std::domain_error("oracle: n too large for mask enumeration");
    std::uint64_t s1 = 0;
    std::uint64_t s2 = 0;
    std::uint64_t pairs = 0;
    const std::uint32_t top = 1u << n;
    for (std::uint32_t a = 0; a < top; ++a) {
        if (static_cast<unsigned>(__builtin_popcount(a)) != ka) continue;
        for (std::uint32_t b = 0; b < top; ++b) {
            if (static_cast<unsigned>(__builtin_popcount(b)) != kb) continue;
            const std::uint64_t c = static_cast<std::uint64_t>(__builtin_popcount(a & b));
            s1 += c;
            s2 += c * c;
            ++pairs;
        }
    }
    ExactMoments m;
    m.mean = Rat{static_cast<__int128>(s1), static_cast<__int128>(pairs)};
    m.mean.normalize();
    // var = S2/P - (S1/P)^2 = (S2 P - S1^2) / P^2
    m.variance = Rat{static_cast<__int128>(s2) * static_cast<__int128>(pairs) -
                         static_cast<__int128>(s1) * static_cast<__int128>(s1),
                     static_cast<__int128>(pairs) * static_cast<__int128>(pairs)};
    m.variance.normalize();
    return m;
}

// All cyclically reduced words of exactly the given length by filtering
// every raw letter sequence.
inline std::vector<std::vector<randset::Letter>> brute_cyclically_reduced(unsigned rank,
                                                                          unsigned length) {
    const unsigned m2 = 2 * rank;
    std::vector<std::vector<randset::Letter>> out;
    std::vector<randset::Letter> word(length);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < length; ++i) total *= m2;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < length; ++i) {
            word[i] = static_cast<randset::Letter>(c % m2);
            c /= m2;
        }
        bool ok = true;
        for (unsigned i = 0; i + 1 < length; ++i) {
            if (word[i + 1] == randset::letter_inverse(word[i])) {
                ok = false;
                break;
            }
        }
        if (ok && length >= 2 && word.back() == randset::letter_inverse(word.front()))
            ok = false;
        if (ok) out.push_back(word);
    }
    return out;
}

// Occurrence-pair piece scan with direct modular indexing: for every pair
// of (relator, offset, orientation) positions, the longest common cyclic
// window, capped at both host lengths; full-length matches within one
// relator are skipped.
struct BrutePieceResult {
    std::vector<std::size_t> max_piece_length; // per relator
};

inline BrutePieceResult brute_piece_scan(const randset::RelatorSet& rels) {
    using randset::Letter;
    struct Pos {
        std::size_t rel;
        std::size_t off;
        bool inv;
    };
    std::vector<std::vector<Letter>> fwd;
    std::vector<std::vector<Letter>> inv;
    for (const auto& w : rels.relators) {
        fwd.push_back(w.letters());
        inv.push_back(w.inverse().letters());
    }
    std::vector<Pos> positions;
    for (std::size_t i = 0; i < fwd.size(); ++i)
        for (int o = 0; o < 2; ++o)
            for (std::size_t off = 0; off < fwd[i].size(); ++off)
                positions.push_back({i, off, o == 1});

    auto at = [&](const Pos& p, std::size_t idx) {
        const auto& arr = p.inv ? inv[p.rel] : fwd[p.rel];
        return arr[(p.off + idx) % arr.size()];
    };

    BrutePieceResult result;
    result.max_piece_length.assign(fwd.size(), 0);
    for (std::size_t a = 0; a < positions.size(); ++a) {
        for (std::size_t b = a + 1; b < positions.size(); ++b) {
            const Pos& pa = positions[a];
            const Pos& pb = positions[b];
            const std::size_t la = fwd[pa.rel].size();
            const std::size_t lb = fwd[pb.rel].size();
            const std::size_t cap = std::min(la, lb);
            for (std::size_t s = cap; s >= 1; --s) {
                if (pa.rel == pb.rel && s == la && s == lb) continue;
                bool equal = true;
                for (std::size_t i = 0; i < s; ++i) {
                    if (at(pa, i) != at(pb, i)) {
                        equal = false;
                        break;
                    }
                }
                if (equal) {
                    result.max_piece_length[pa.rel] =
                        std::max(result.max_piece_length[pa.rel], s);
                    result.max_piece_length[pb.rel] =
                        std::max(result.max_piece_length[pb.rel], s);
                    break;
                }
            }
        }
    }
    return result;
}

// violation iff some relator hosts a piece of length >= lambda * |r|
inline bool brute_violates_c_prime(const BrutePieceResult& pieces,
                                   const randset::RelatorSet& rels, double lambda) {
    for (std::size_t i = 0; i < rels.relators.size(); ++i) {
        const double host = static_cast<double>(rels.relators[i].length());
        if (static_cast<double>(pieces.max_piece_length[i]) >= lambda * host - 1e-9)
            return true;
    }
    return false;
}

// O(|X|^2 k) self-intersection partition by direct shared-value counting.
inline std::vector<std::uint64_t> brute_profile(const randset::TupleSet& x) {
    const unsigned k = x.arity();
    std::vector<std::uint64_t> sizes(k + 1, 0);
    const std::uint64_t count = x.size();
    for (std::uint64_t i = 0; i < count; ++i) {
        for (std::uint64_t j = 0; j < count; ++j) {
            unsigned shared = 0;
            for (unsigned a = 0; a < k; ++a)
                for (unsigned b = 0; b < k; ++b)
                    if (x.tuple(i)[a] == x.tuple(j)[b]) ++shared;
            ++sizes[shared];
        }
    }
    return sizes;
}

} // namespace oracles
