#include "randset/moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace randset {

double uniform_inclusion_prob(UniverseSize n, std::uint64_t k, unsigned r) {
    if (r > n.n) throw std::domain_error("uniform_inclusion_prob: r exceeds n");
    if (k > n.n) throw std::domain_error("uniform_inclusion_prob: k exceeds n");
    if (r > k) return 0.0;
    if (r == 0) return 1.0;
    if (r > 20) return std::exp(uniform_inclusion_log_prob(n, k, r));
    double p = 1.0;
    for (unsigned i = 0; i < r; ++i)
        p *= static_cast<double>(k - i) / static_cast<double>(n.n - i);
    return p;
}

double uniform_inclusion_log_prob(UniverseSize n, std::uint64_t k, unsigned r) {
    if (r > n.n) throw std::domain_error("uniform_inclusion_log_prob: r exceeds n");
    if (k > n.n) throw std::domain_error("uniform_inclusion_log_prob: k exceeds n");
    if (r > k) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (unsigned i = 0; i < r; ++i)
        s += std::log(static_cast<double>(k - i)) - std::log(static_cast<double>(n.n - i));
    return s;
}

Fraction uniform_inclusion_prob_rational(UniverseSize n, std::uint64_t k, unsigned r) {
    if (n.n > 64) throw std::domain_error("rational inclusion prob: offered for n <= 64");
    if (r > n.n) throw std::domain_error("rational inclusion prob: r exceeds n");
    if (k > n.n) throw std::domain_error("rational inclusion prob: k exceeds n");
    if (r > k) return {0, 1};
    unsigned __int128 num = 1;
    unsigned __int128 den = 1;
    for (unsigned i = 0; i < r; ++i) {
        num *= k - i;
        den *= n.n - i;
        unsigned __int128 a = num;
        unsigned __int128 b = den;
        while (b != 0) {
            const unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        num /= a;
        den /= a;
    }
    if (num > std::numeric_limits<std::uint64_t>::max() ||
        den > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("rational inclusion prob: fraction exceeds 64 bits");
    return {static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den)};
}

MomentPair intersection_moments_uniform(UniverseSize n, std::uint64_t ka, std::uint64_t kb) {
    if (ka > n.n || kb > n.n)
        throw std::domain_error("intersection_moments_uniform: cardinality exceeds n");
    const double nd = static_cast<double>(n.n);
    const double a = static_cast<double>(ka);
    const double b = static_cast<double>(kb);
    MomentPair m;
    m.mean = a * b / nd;
    m.variance = (a * b / (nd * nd * (nd - 1.0))) * (nd * nd - nd * a - nd * b + a * b);
    return m;
}

MomentPair bernoulli_moments(UniverseSize n, double d) {
    if (d > 1.0) throw std::domain_error("bernoulli_moments: density above 1");
    const double nd = static_cast<double>(n.n);
    const double p = std::pow(nd, d - 1.0);
    return {std::pow(nd, d), nd * p * (1.0 - p)};
}

MomentPair perm_invariant_moments(UniverseSize n, double p1, double p2) {
    if (!(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= p1))
        throw std::domain_error("perm_invariant_moments: need 0 <= p2 <= p1 <= 1");
    const double nd = static_cast<double>(n.n);
    const double mean = nd * p1;
    double var = mean + nd * (nd - 1.0) * p2 - mean * mean;
    if (var < 0.0) {
        if (var < -1e-7 * (1.0 + mean * mean))
            throw std::domain_error("perm_invariant_moments: inconsistent pair probability");
        var = 0.0;
    }
    return {mean, var};
}

MomentPair multidim_moments(const SelfIntersectionProfile& profile, std::uint64_t size_x,
                            const std::vector<double>& inclusion_probs, unsigned k) {
    profile.validate(size_x);
    if (profile.k != k) throw std::domain_error("multidim_moments: arity mismatch");
    if (inclusion_probs.size() < 2 * k + 1)
        throw std::domain_error("multidim_moments: need P_r for r up to 2k");
    const double x = static_cast<double>(size_x);
    const double pk = inclusion_probs[k];
    const double p2k = inclusion_probs[2 * k];
    MomentPair m;
    m.mean = x * pk;
    double var = x * x * (p2k - pk * pk);
    for (unsigned i = 1; i <= k; ++i)
        var += static_cast<double>(profile.sizes[i]) * (inclusion_probs[2 * k - i] - p2k);
    if (var < 0.0 && var > -1e-7 * (1.0 + m.mean * m.mean)) var = 0.0;
    m.variance = var;
    return m;
}

MomentPair multidim_moments_uniform(const SelfIntersectionProfile& profile,
                                    std::uint64_t size_x, UniverseSize n,
                                    std::uint64_t ka, unsigned k) {
    std::vector<double> probs(2 * k + 1, 0.0);
    for (unsigned r = 0; r <= 2 * k; ++r) probs[r] = uniform_inclusion_prob(n, ka, r);
    return multidim_moments(profile, size_x, probs, k);
}

namespace bounds {

double intersection_tail(double c, UniverseSize n, double alpha, double beta) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("intersection_tail: c outside (0, 1)");
    if (alpha + beta <= 1.0)
        throw std::domain_error("intersection_tail: needs alpha + beta > 1");
    return 12.0 / (c * c * std::pow(static_cast<double>(n.n), alpha + beta - 1.0));
}

double intersection_tail_min_n(double c, double alpha, double beta) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("intersection_tail_min_n: c outside (0, 1)");
    if (alpha + beta <= 1.0)
        throw std::domain_error("intersection_tail_min_n: needs alpha + beta > 1");
    return std::pow(4.0 / c, 1.0 / (alpha + beta - 1.0));
}

double inclusion_lower(UniverseSize n, double d, double eps, unsigned r) {
    return std::pow(static_cast<double>(n.n), static_cast<double>(r) * (d - 1.0 - eps));
}

double inclusion_upper(UniverseSize n, double d, double eps, unsigned r) {
    return std::pow(static_cast<double>(n.n), static_cast<double>(r) * (d - 1.0 + eps));
}

double inclusion_min_n(unsigned k, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("inclusion_min_n: eps must be positive");
    return std::pow(1.0 + 2.0 * static_cast<double>(k), 1.0 / eps);
}

double square_gap_upper(UniverseSize n, double d, double eps, unsigned k) {
    return std::pow(static_cast<double>(n.n),
                    2.0 * static_cast<double>(k) * (d - 1.0 + eps) - d);
}

bool inclusion_sandwich_holds(UniverseSize n, double d, double eps, unsigned r, unsigned k) {
    if (!(eps > 0.0 && eps < d)) throw std::domain_error("sandwich: need 0 < eps < d");
    if (r < 1 || r > 2 * k) throw std::domain_error("sandwich: need 1 <= r <= 2k");
    const double nd = static_cast<double>(n.n);
    const std::uint64_t card = static_cast<std::uint64_t>(std::floor(std::pow(nd, d)));
    const double log_exact = uniform_inclusion_log_prob(n, card, r);
    const double log_lo = static_cast<double>(r) * (d - 1.0 - eps) * std::log(nd);
    const double log_hi = static_cast<double>(r) * (d - 1.0 + eps) * std::log(nd);
    return log_lo <= log_exact && log_exact <= log_hi;
}

} // namespace bounds

} // namespace randset
