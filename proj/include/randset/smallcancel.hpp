#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randset/words.hpp"

namespace randset {

// Finite presentation relators: distinct, nonempty, cyclically reduced.
struct RelatorSet {
    unsigned rank = 0;
    std::vector<Word> relators;

    static RelatorSet create(unsigned rank, std::vector<Word> relators);
};

// One position in the symmetrized set: read relator `relator` (or its
// inverse when `inverted`) cyclically starting at `offset`.
struct Occurrence {
    std::uint32_t relator = 0;
    std::uint32_t offset = 0;
    bool inverted = false;

    bool operator==(const Occurrence& o) const {
        return relator == o.relator && offset == o.offset && inverted == o.inverted;
    }
};

struct SymmetrizedEntry {
    Word word;
    Occurrence origin;
};

// All rotations of every relator and of its inverse, tagged by origin;
// equal words from distinct origins stay distinct.
std::vector<SymmetrizedEntry> symmetrize(const RelatorSet& r);

struct PieceWitness {
    std::vector<Letter> piece;
    Occurrence first;
    Occurrence second;
};

struct PieceReport {
    std::vector<std::size_t> max_piece_length; // per relator
    std::vector<double> max_ratio;             // per relator, |p| / |r|
    double global_max_ratio = 0.0;
    std::optional<PieceWitness> witness;       // attains the global max
};

// Exhaustive scan over all occurrence pairs of the symmetrized set. Two
// occurrences are distinct when their (relator, offset, orientation)
// triples differ; full-length matches inside one relator (rotations of a
// true power onto themselves) do not count as two occurrences.
PieceReport max_piece_ratio(const RelatorSet& r);

struct CPrimeResult {
    bool satisfies = true;
    std::optional<PieceWitness> witness; // a violating piece when !satisfies
};

// C'(lambda): every piece p hosted in a relator r has |p| < lambda |r|.
// Detection buckets relators by length and hashes cyclic windows of length
// ceil(lambda L) per class; hash hits are verified letter by letter. A
// shared window violates the condition against the shorter host, so the
// boolean agrees with the exhaustive per-host scan.
CPrimeResult satisfies_c_prime(const RelatorSet& r, double lambda);

// A word w in R with xw also in R, where w neither starts nor ends with
// x^-1 (so xw is cyclically reduced); such a pair forces x = 1 in the
// presented group.
std::optional<Word> find_trivializing_pair(const RelatorSet& r, Letter x);

// Explicit density thresholds for the free-subgroup bound.
struct Thresholds {
    unsigned rank = 0;
    double eps = 0.0;
    double mu = 0.0;       // log_{2m}(1 + 1/(4m-4)) - eps
    double lambda = 0.0;   // mu / (15m + 3 mu)
    double d_ao = 0.0;     // 1 / (120 m^2 ln 2m)
    double dens_m = 0.0;   // log_{2m-1}(2m - 5/4)
    double lambda_floor = 0.0; // 1 / (60 m^2 ln 2m)
};

// Throws if eps leaves mu <= 0 or breaks lambda/2 > d_ao or
// d_ao < 1 - dens_m.
Thresholds compute_thresholds(unsigned rank, double eps);

} // namespace randset
