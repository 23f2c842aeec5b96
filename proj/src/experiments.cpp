#include "randset/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "randset/smallcancel.hpp"
#include "randset/stats.hpp"

namespace randset {

namespace {

constexpr double kCriticalTol = 1e-12;
constexpr std::uint64_t kSecondStreamBit = 1ULL << 63;

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

SeedSpec trial_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t trial) {
    return {master, (cell << 32) + trial};
}

void fill_stats(SweepRow& row) {
    row.p_hat = static_cast<double>(row.successes) / static_cast<double>(row.trials);
    const WilsonInterval wi = wilson_interval(row.successes, row.trials);
    row.wilson_lo = wi.lo;
    row.wilson_hi = wi.hi;
}

SubsetSample draw_model(SubsetModel model, UniverseSize n, double density, SeedSpec seed) {
    switch (model) {
    case SubsetModel::Uniform: {
        const auto k = static_cast<std::uint64_t>(
            std::floor(std::pow(static_cast<double>(n.n), density)));
        return sample_uniform(n, std::min(k, n.n), seed);
    }
    case SubsetModel::Bernoulli:
        return sample_bernoulli(n, density, seed);
    case SubsetModel::Mixture: {
        // 50/50 mixture of floor(n^a) and max(1, floor(n^a) / 2), densable
        // with density a
        if (n.n > 1'000'000)
            throw std::domain_error("mixture model: dense cardinality law capped at n <= 1e6");
        const auto k = static_cast<std::uint64_t>(
            std::floor(std::pow(static_cast<double>(n.n), density)));
        const std::uint64_t k1 = std::min(k, n.n);
        const std::uint64_t k2 = std::max<std::uint64_t>(1, k1 / 2);
        std::vector<double> weights(n.n + 1, 0.0);
        weights[k1] += 0.5;
        weights[k2] += 0.5;
        return sample_perm_invariant(n, CardinalityLaw::explicit_vector(std::move(weights)),
                                     seed);
    }
    }
    throw std::logic_error("draw_model: unreachable");
}

} // namespace

std::string rows_to_csv(std::vector<SweepRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        auto key = [](const SweepRow& r) {
            return std::tuple(r.kind, r.m, r.n_or_ell,
                              std::isnan(r.alpha) ? -1.0 : r.alpha,
                              std::isnan(r.beta_or_d) ? -1.0 : r.beta_or_d,
                              std::isnan(r.lambda) ? -1.0 : r.lambda, r.k);
        };
        return key(a) < key(b);
    });
    std::string out =
        "kind,m,n_or_ell,alpha,beta_or_d,lambda,k,trials,successes,p_hat,"
        "wilson_lo,wilson_hi,verdict\n";
    for (const SweepRow& r : rows) {
        out += r.kind;
        out += ',';
        if (r.m != 0) out += std::to_string(r.m);
        out += ',';
        out += std::to_string(r.n_or_ell);
        out += ',';
        out += format_double(r.alpha);
        out += ',';
        out += format_double(r.beta_or_d);
        out += ',';
        out += format_double(r.lambda);
        out += ',';
        if (r.k != 0) out += std::to_string(r.k);
        out += ',';
        out += std::to_string(r.trials);
        out += ',';
        out += std::to_string(r.successes);
        out += ',';
        out += format_double(r.p_hat);
        out += ',';
        out += format_double(r.wilson_lo);
        out += ',';
        out += format_double(r.wilson_hi);
        out += ',';
        out += r.verdict;
        out += '\n';
    }
    return out;
}

std::vector<SweepRow> run_intersection_experiment(const IntersectionConfig& cfg) {
    if (cfg.trials < 1) throw std::domain_error("intersection: trials must be >= 1");
    if (cfg.ns.empty() || cfg.alphas.empty() || cfg.betas.empty())
        throw std::domain_error("intersection: empty grid");
    for (double a : cfg.alphas)
        if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("intersection: alpha outside [0,1]");
    for (double b : cfg.betas)
        if (!(b >= 0.0 && b <= 1.0)) throw std::domain_error("intersection: beta outside [0,1]");

    std::vector<SweepRow> rows;
    std::uint64_t cell = 0;
    for (std::uint64_t nval : cfg.ns) {
        const UniverseSize n(nval);
        for (double alpha : cfg.alphas) {
            for (double beta : cfg.betas) {
                const double target = alpha + beta - 1.0;
                const bool critical = std::abs(target) <= kCriticalTol;
                const bool super = target > kCriticalTol;
                const double lo =
                    super ? std::pow(static_cast<double>(nval), target - cfg.eps) : 0.0;
                const double hi =
                    super ? std::pow(static_cast<double>(nval), target + cfg.eps) : 0.0;

                SweepRow row;
                row.kind = "intersection";
                row.n_or_ell = nval;
                row.alpha = alpha;
                row.beta_or_d = beta;
                row.lambda = std::numeric_limits<double>::quiet_NaN();
                row.trials = cfg.trials;
                for (std::uint64_t t = 0; t < cfg.trials; ++t) {
                    const SeedSpec sa = trial_seed(cfg.master_seed, cell, t);
                    SeedSpec sb = sa;
                    sb.stream_index |= kSecondStreamBit;
                    const SubsetSample a = draw_model(cfg.model, n, alpha, sa);
                    const SubsetSample b = draw_model(cfg.model, n, beta, sb);
                    const auto count = static_cast<double>(intersect(a, b).size());
                    const bool hit = super ? (count >= lo && count <= hi) : (count == 0.0);
                    if (hit) ++row.successes;
                }
                fill_stats(row);
                row.verdict = critical ? "critical" : (super ? "supercritical" : "subcritical");
                rows.push_back(std::move(row));
                ++cell;
            }
        }
    }
    return rows;
}

MultidimResult run_multidim_experiment(const MultidimConfig& cfg) {
    if (cfg.trials < 1) throw std::domain_error("multidim: trials must be >= 1");
    if (cfg.ds.empty()) throw std::domain_error("multidim: empty density grid");
    if (cfg.k < 1) throw std::domain_error("multidim: arity must be >= 1");
    const UniverseSize n(cfg.n);
    const double log_ek = log_falling_factorial(cfg.n, cfg.k);

    // realize the fixed tuple set
    std::uint64_t size_x = 0;
    std::optional<TupleSet> explicit_x;
    SelfIntersectionProfile profile;
    switch (cfg.family.kind) {
    case MultidimFamily::Kind::Full:
        size_x = falling_factorial(cfg.n, cfg.k);
        profile = full_self_intersection_profile(n, cfg.k);
        break;
    case MultidimFamily::Kind::Star:
        if (cfg.k != 2) throw std::domain_error("multidim: star family has arity 2");
        size_x = cfg.n - 1;
        profile = star_self_intersection_profile(n);
        break;
    case MultidimFamily::Kind::RandomFixed: {
        const double a = cfg.family.alpha;
        if (!(a > 0.0 && a <= 1.0)) throw std::domain_error("multidim: alpha outside (0,1]");
        size_x = static_cast<std::uint64_t>(std::llround(std::exp(a * log_ek)));
        size_x = std::max<std::uint64_t>(1, size_x);
        explicit_x = sample_distinct_tuples(n, cfg.k, size_x, {cfg.master_seed ^ 0x58A5F0ACULL,
                                                               cfg.family.family_seed});
        profile = self_intersection_profile(*explicit_x);
        break;
    }
    case MultidimFamily::Kind::Explicit:
        if (!cfg.family.explicit_x) throw std::domain_error("multidim: missing explicit X");
        if (cfg.family.explicit_x->arity() != cfg.k)
            throw std::domain_error("multidim: explicit X arity mismatch");
        explicit_x = cfg.family.explicit_x;
        size_x = explicit_x->size();
        profile = self_intersection_profile(*explicit_x);
        break;
    }
    if (size_x == 0) throw std::domain_error("multidim: empty X");

    MultidimResult result;
    result.size_x = size_x;
    result.alpha = std::log(static_cast<double>(size_x)) / log_ek;

    std::uint64_t cell = 0;
    for (double d : cfg.ds) {
        if (!(d > 0.0 && d < 1.0)) throw std::domain_error("multidim: d outside (0,1)");
        MultidimCell out;
        out.condition = small_self_intersection_check(profile, size_x, n, cfg.k, d);

        const double target = result.alpha + d - 1.0;
        const bool critical = std::abs(target) <= kCriticalTol;
        const bool super = target > kCriticalTol;

        SweepRow row;
        row.kind = "multidim";
        row.n_or_ell = cfg.n;
        row.alpha = result.alpha;
        row.beta_or_d = d;
        row.lambda = std::numeric_limits<double>::quiet_NaN();
        row.k = cfg.k;
        row.trials = cfg.trials;

        std::vector<double> nonzero_exponents;
        std::uint64_t empties = 0;
        const auto ka = static_cast<std::uint64_t>(
            std::floor(std::pow(static_cast<double>(cfg.n), d)));
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            const SubsetSample a =
                sample_uniform(n, std::min(ka, cfg.n), trial_seed(cfg.master_seed, cell, t));
            std::uint64_t count = 0;
            switch (cfg.family.kind) {
            case MultidimFamily::Kind::Full:
                count = induced_tuple_count(a, cfg.k);
                break;
            case MultidimFamily::Kind::Star:
                count = star_intersection_count(a, 0);
                break;
            default:
                count = intersect_tuples(a, *explicit_x);
                break;
            }
            if (count == 0) {
                ++empties;
                if (!super) ++row.successes;
                continue;
            }
            const double exponent = std::log(static_cast<double>(count)) / log_ek;
            nonzero_exponents.push_back(exponent);
            if (super && exponent >= target - cfg.eps && exponent <= target + cfg.eps)
                ++row.successes;
        }
        fill_stats(row);
        row.verdict = critical ? "critical" : (super ? "supercritical" : "subcritical");
        out.row = std::move(row);
        out.empty_fraction =
            static_cast<double>(empties) / static_cast<double>(cfg.trials);
        if (nonzero_exponents.empty()) {
            out.median_nonzero_exponent = std::numeric_limits<double>::quiet_NaN();
        } else {
            auto mid = nonzero_exponents.begin() +
                       static_cast<std::ptrdiff_t>(nonzero_exponents.size() / 2);
            std::nth_element(nonzero_exponents.begin(), mid, nonzero_exponents.end());
            out.median_nonzero_exponent = *mid;
        }
        result.cells.push_back(std::move(out));
        ++cell;
    }
    return result;
}

std::vector<SweepRow> run_bernoulli_empty_experiment(const BernoulliEmptyConfig& cfg) {
    if (cfg.trials < 1) throw std::domain_error("bernoulli_empty: trials must be >= 1");
    if (cfg.ds.empty()) throw std::domain_error("bernoulli_empty: empty density grid");
    const UniverseSize n(cfg.n);
    std::vector<SweepRow> rows;
    std::uint64_t cell = 0;
    for (double d : cfg.ds) {
        SweepRow row;
        row.kind = "bernoulli_empty";
        row.n_or_ell = cfg.n;
        row.alpha = std::numeric_limits<double>::quiet_NaN();
        row.beta_or_d = d;
        row.lambda = std::numeric_limits<double>::quiet_NaN();
        row.trials = cfg.trials;
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            if (sample_bernoulli(n, d, trial_seed(cfg.master_seed, cell, t)).empty())
                ++row.successes;
        }
        fill_stats(row);
        rows.push_back(std::move(row));
        ++cell;
    }
    return rows;
}

namespace {

// distinct relators, uniform over B_ell; dedup keys are 64-bit word hashes,
// so a hash hit at worst resamples a fresh word
RelatorSet sample_relator_set(unsigned m, unsigned ell, std::uint64_t count,
                              const WordCountTable& table, Rng& rng) {
    std::vector<Word> words;
    words.reserve(count);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count * 2);
    while (words.size() < count) {
        Word w = sample_cyclically_reduced(table, ell, rng);
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (Letter x : w.letters()) {
            h ^= x;
            h *= 0x100000001B3ULL;
        }
        if (!seen.insert(h).second) continue;
        words.push_back(std::move(w));
    }
    RelatorSet r;
    r.rank = m;
    r.relators = std::move(words);
    return r;
}

std::uint64_t relator_count(const BigUint& ball, double d, std::uint64_t max_relators,
                            bool* clamped) {
    const double log_ball = ball.log();
    const double value = std::exp(d * log_ball);
    *clamped = false;
    if (value > static_cast<double>(max_relators) * 1.5) return max_relators + 1; // over guard
    std::uint64_t count = static_cast<std::uint64_t>(std::llround(value));
    if (ball.fits_u64() && count > ball.to_u64()) {
        count = ball.to_u64();
        *clamped = true;
    }
    return count;
}

} // namespace

GroupSweepResult run_group_sweep(const GroupSweepConfig& cfg) {
    if (cfg.trials < 1) throw std::domain_error("group sweep: trials must be >= 1");
    if (cfg.ds.empty()) throw std::domain_error("group sweep: empty density grid");
    if (!(cfg.lambda > 0.0 && cfg.lambda < 1.0))
        throw std::domain_error("group sweep: lambda outside (0,1)");
    if (cfg.m < 2) throw std::domain_error("group sweep: rank must be >= 2");

    const WordCountTable table = count_cyclically_reduced(cfg.m, cfg.ell);
    GroupSweepResult result;
    std::uint64_t cell = 0;
    for (double d : cfg.ds) {
        if (!(d >= 0.0 && d <= 1.0)) throw std::domain_error("group sweep: d outside [0,1]");
        bool clamped = false;
        const std::uint64_t count =
            relator_count(table.ball(cfg.ell), d, cfg.max_relators, &clamped);
        if (count > cfg.max_relators)
            throw std::domain_error("group sweep: relator count exceeds max_relators guard");
        if (clamped)
            result.warnings.push_back("d=" + format_double(d) +
                                      ": |B_ell|^d exceeds |B_ell|, clamped");

        SweepRow row;
        row.kind = "group_cprime";
        row.m = cfg.m;
        row.n_or_ell = cfg.ell;
        row.alpha = std::numeric_limits<double>::quiet_NaN();
        row.beta_or_d = d;
        row.lambda = cfg.lambda;
        row.trials = cfg.trials;
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            Rng rng(trial_seed(cfg.master_seed, cell, t));
            const RelatorSet r = sample_relator_set(cfg.m, cfg.ell, count, table, rng);
            if (satisfies_c_prime(r, cfg.lambda).satisfies) ++row.successes;
        }
        fill_stats(row);
        const double gap = d - cfg.lambda / 2.0;
        row.verdict = std::abs(gap) <= kCriticalTol ? "critical"
                      : (gap < 0.0 ? "subcritical" : "supercritical");
        result.rows.push_back(std::move(row));
        ++cell;
    }
    return result;
}

GroupSweepResult run_trivialization_sweep(const TrivializationConfig& cfg) {
    if (cfg.trials < 1) throw std::domain_error("trivialization: trials must be >= 1");
    if (cfg.ds.empty()) throw std::domain_error("trivialization: empty density grid");
    if (cfg.m < 2) throw std::domain_error("trivialization: rank must be >= 2");

    const WordCountTable table = count_cyclically_reduced(cfg.m, cfg.ell);
    GroupSweepResult result;
    std::uint64_t cell = 0;
    for (double d : cfg.ds) {
        if (!(d >= 0.0 && d <= 1.0)) throw std::domain_error("trivialization: d outside [0,1]");
        bool clamped = false;
        const std::uint64_t count =
            relator_count(table.ball(cfg.ell), d, cfg.max_relators, &clamped);
        if (count > cfg.max_relators)
            throw std::domain_error("trivialization: relator count exceeds max_relators guard");
        if (clamped)
            result.warnings.push_back("d=" + format_double(d) +
                                      ": |B_ell|^d exceeds |B_ell|, clamped");

        std::vector<std::uint64_t> found(cfg.m, 0);
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            Rng rng(trial_seed(cfg.master_seed, cell, t));
            const RelatorSet r = sample_relator_set(cfg.m, cfg.ell, count, table, rng);
            for (unsigned g = 0; g < cfg.m; ++g) {
                if (find_trivializing_pair(r, static_cast<Letter>(2 * g)).has_value())
                    ++found[g];
            }
        }
        for (unsigned g = 0; g < cfg.m; ++g) {
            SweepRow row;
            row.kind = "group_trivialize";
            row.m = cfg.m;
            row.n_or_ell = cfg.ell;
            row.alpha = std::numeric_limits<double>::quiet_NaN();
            row.beta_or_d = d;
            row.lambda = std::numeric_limits<double>::quiet_NaN();
            row.k = g + 1;
            row.trials = cfg.trials;
            row.successes = found[g];
            fill_stats(row);
            row.verdict = d > 0.5 + kCriticalTol ? "supercritical"
                          : (d < 0.5 - kCriticalTol ? "subcritical" : "critical");
            result.rows.push_back(std::move(row));
        }
        ++cell;
    }
    return result;
}

} // namespace randset
