#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randset/multidim.hpp"
#include "randset/samplers.hpp"
#include "randset/universe.hpp"
#include "randset/words.hpp"

namespace randset {

// One CSV row; the schema is fixed:
//   kind,m,n_or_ell,alpha,beta_or_d,lambda,k,trials,successes,p_hat,
//   wilson_lo,wilson_hi,verdict
// Unused numeric fields render as empty columns (m/k when 0, doubles when
// NaN).
struct SweepRow {
    std::string kind;
    unsigned m = 0;
    std::uint64_t n_or_ell = 0;
    double alpha = 0.0;
    double beta_or_d = 0.0;
    double lambda = 0.0;
    unsigned k = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double p_hat = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    std::string verdict;
};

// Rows sorted by cell key, header included, doubles printed with %.10g.
std::string rows_to_csv(std::vector<SweepRow> rows);

enum class SubsetModel { Uniform, Bernoulli, Mixture };

struct IntersectionConfig {
    SubsetModel model = SubsetModel::Uniform;
    std::vector<std::uint64_t> ns;
    std::vector<double> alphas;
    std::vector<double> betas;
    double eps = 0.05;
    std::uint64_t trials = 100;
    std::uint64_t master_seed = 0;
};

// Per (n, alpha, beta): supercritical cells count trials whose |A cap B|
// lands in [n^(a+b-1-eps), n^(a+b-1+eps)]; subcritical cells count empty
// intersections; cells on the critical line a+b = 1 get verdict
// "critical".
std::vector<SweepRow> run_intersection_experiment(const IntersectionConfig& cfg);

struct MultidimFamily {
    enum class Kind { Full, Star, RandomFixed, Explicit };
    Kind kind = Kind::Full;
    double alpha = 0.5;               // RandomFixed: |X| = round(|E^(k)|^alpha)
    std::uint64_t family_seed = 0;    // RandomFixed tuple draw
    std::optional<TupleSet> explicit_x;
};

struct MultidimConfig {
    std::uint64_t n = 0;
    unsigned k = 2;
    MultidimFamily family;
    std::vector<double> ds; // uniform model densities, in (0, 1)
    double eps = 0.05;
    std::uint64_t trials = 100;
    std::uint64_t master_seed = 0;
};

struct MultidimCell {
    SweepRow row;
    double empty_fraction = 0.0;
    // median of log_{|E^(k)|} |A^(k) cap X| over trials with nonzero
    // intersection; NaN when every trial came up empty
    double median_nonzero_exponent = 0.0;
    SmallSelfIntersectionReport condition;
};

struct MultidimResult {
    double alpha = 0.0; // realized log |X| / log |E^(k)|
    std::uint64_t size_x = 0;
    std::vector<MultidimCell> cells;
};

MultidimResult run_multidim_experiment(const MultidimConfig& cfg);

struct BernoulliEmptyConfig {
    std::uint64_t n = 0;
    std::vector<double> ds;
    std::uint64_t trials = 100;
    std::uint64_t master_seed = 0;
};

// Success = empty sample; at d = 0 the fraction calibrates against 1/e.
std::vector<SweepRow> run_bernoulli_empty_experiment(const BernoulliEmptyConfig& cfg);

struct GroupSweepConfig {
    unsigned m = 2;
    unsigned ell = 12;
    double lambda = 0.5;
    std::vector<double> ds;
    std::uint64_t trials = 20;
    std::uint64_t master_seed = 0;
    std::uint64_t max_relators = 5'000'000; // config guard
};

struct GroupSweepResult {
    std::vector<SweepRow> rows; // success = presentation satisfies C'(lambda)
    std::vector<std::string> warnings;
};

// Relator count per trial is round(|B_ell|^d), drawn uniformly without
// replacement from B_ell (clamped to |B_ell| with a warning).
GroupSweepResult run_group_sweep(const GroupSweepConfig& cfg);

struct TrivializationConfig {
    unsigned m = 2;
    unsigned ell = 12;
    std::vector<double> ds;
    std::uint64_t trials = 20;
    std::uint64_t master_seed = 0;
    std::uint64_t max_relators = 5'000'000;
};

// One row per (d, generator); k carries the 1-based generator index and
// success means a trivializing pair (w, xw) was found for that generator.
GroupSweepResult run_trivialization_sweep(const TrivializationConfig& cfg);

} // namespace randset
