#include "randset/smallcancel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace randset {

RelatorSet RelatorSet::create(unsigned rank, std::vector<Word> relators) {
    if (rank < 2 || rank > kMaxRank)
        throw std::domain_error("RelatorSet: rank outside 2..26");
    std::set<Word> seen;
    for (const Word& w : relators) {
        if (w.empty()) throw std::domain_error("RelatorSet: empty relator");
        if (!w.cyclically_reduced())
            throw std::domain_error("RelatorSet: relator not cyclically reduced");
        for (Letter x : w.letters())
            if (letter_generator(x) > rank)
                throw std::domain_error("RelatorSet: letter outside rank");
        if (!seen.insert(w).second) throw std::domain_error("RelatorSet: duplicate relator");
    }
    RelatorSet r;
    r.rank = rank;
    r.relators = std::move(relators);
    return r;
}

namespace {

// Doubled forward and inverse letter arrays per relator: a cyclic window of
// length s <= |r| at offset o < |r| is a plain slice [o, o+s).
struct DoubledRelator {
    std::vector<Letter> fwd;
    std::vector<Letter> inv;
    std::size_t length = 0;

    explicit DoubledRelator(const Word& w) : length(w.length()) {
        const auto& ls = w.letters();
        fwd.reserve(2 * length);
        fwd.insert(fwd.end(), ls.begin(), ls.end());
        fwd.insert(fwd.end(), ls.begin(), ls.end());
        const Word winv = w.inverse();
        inv.reserve(2 * length);
        inv.insert(inv.end(), winv.letters().begin(), winv.letters().end());
        inv.insert(inv.end(), winv.letters().begin(), winv.letters().end());
    }

    const Letter* window(bool inverted, std::size_t offset) const {
        return (inverted ? inv.data() : fwd.data()) + offset;
    }
};

std::vector<DoubledRelator> double_all(const RelatorSet& r) {
    std::vector<DoubledRelator> out;
    out.reserve(r.relators.size());
    for (const Word& w : r.relators) out.emplace_back(w);
    return out;
}

// Occurrence pairs at distinct triples; full-length matches within one
// relator are rotations of the same closed path, not two occurrences.
bool pair_admissible(const Occurrence& a, const Occurrence& b, std::size_t s,
                     std::size_t len_a, std::size_t len_b) {
    if (a == b) return false;
    if (a.relator == b.relator && s == len_a && s == len_b) return false;
    return true;
}

std::uint64_t hash_window(const Letter* w, std::size_t s) {
    std::uint64_t h = 0xCBF29CE484222325ULL ^ s;
    for (std::size_t i = 0; i < s; ++i) {
        h ^= w[i];
        h *= 0x100000001B3ULL;
        h ^= h >> 29;
    }
    return h;
}

} // namespace

std::vector<SymmetrizedEntry> symmetrize(const RelatorSet& r) {
    std::vector<SymmetrizedEntry> out;
    for (std::uint32_t id = 0; id < r.relators.size(); ++id) {
        const Word& w = r.relators[id];
        const DoubledRelator dbl(w);
        const std::size_t t = w.length();
        for (int orient = 0; orient < 2; ++orient) {
            for (std::uint32_t off = 0; off < t; ++off) {
                const Letter* p = dbl.window(orient == 1, off);
                SymmetrizedEntry entry;
                entry.word = Word::from_letters({p, p + t});
                entry.origin = {id, off, orient == 1};
                out.push_back(std::move(entry));
            }
        }
    }
    return out;
}

PieceReport max_piece_ratio(const RelatorSet& r) {
    const auto dbl = double_all(r);
    const std::size_t nrel = r.relators.size();

    struct Pos {
        std::uint32_t relator;
        std::uint32_t offset;
        bool inverted;
    };
    std::vector<Pos> positions;
    for (std::uint32_t i = 0; i < nrel; ++i)
        for (int orient = 0; orient < 2; ++orient)
            for (std::uint32_t off = 0; off < dbl[i].length; ++off)
                positions.push_back({i, off, orient == 1});

    PieceReport report;
    report.max_piece_length.assign(nrel, 0);
    report.max_ratio.assign(nrel, 0.0);

    for (std::size_t a = 0; a < positions.size(); ++a) {
        for (std::size_t b = a + 1; b < positions.size(); ++b) {
            const Pos& pa = positions[a];
            const Pos& pb = positions[b];
            const std::size_t la = dbl[pa.relator].length;
            const std::size_t lb = dbl[pb.relator].length;
            const std::size_t cap = std::min(la, lb);
            const Letter* wa = dbl[pa.relator].window(pa.inverted, pa.offset);
            const Letter* wb = dbl[pb.relator].window(pb.inverted, pb.offset);
            std::size_t lcp = 0;
            while (lcp < cap && wa[lcp] == wb[lcp]) ++lcp;
            std::size_t s = lcp;
            if (s == la && s == lb && pa.relator == pb.relator) --s; // same closed path
            if (s == 0) continue;

            for (const Pos& host : {pa, pb}) {
                const std::size_t hlen = dbl[host.relator].length;
                if (s > report.max_piece_length[host.relator]) {
                    report.max_piece_length[host.relator] = s;
                    report.max_ratio[host.relator] =
                        static_cast<double>(s) / static_cast<double>(hlen);
                }
                const double ratio = static_cast<double>(s) / static_cast<double>(hlen);
                if (ratio > report.global_max_ratio) {
                    report.global_max_ratio = ratio;
                    PieceWitness w;
                    w.piece.assign(wa, wa + s);
                    w.first = {pa.relator, pa.offset, pa.inverted};
                    w.second = {pb.relator, pb.offset, pb.inverted};
                    report.witness = std::move(w);
                }
            }
        }
    }
    return report;
}

CPrimeResult satisfies_c_prime(const RelatorSet& r, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::domain_error("satisfies_c_prime: lambda outside (0, 1)");
    const auto dbl = double_all(r);
    const std::size_t nrel = r.relators.size();

    // a relator of length L hosts violations through windows of length
    // t(L) = max(1, ceil(lambda L))
    auto threshold_of = [lambda](std::size_t len) {
        const auto t = static_cast<std::size_t>(
            std::ceil(lambda * static_cast<double>(len) - 1e-12));
        return std::max<std::size_t>(1, t);
    };

    // One pass per distinct threshold t. Only relators whose own threshold
    // is t ("hosts") are inserted into the window index; longer relators
    // probe it without being inserted, since a match between two of them is
    // decided at their own class's threshold. This keeps every bucket scan
    // proportional to genuine candidates.
    struct Pass {
        std::size_t t;
        std::vector<std::uint32_t> hosts;
        std::size_t host_mass = 0;
    };
    std::map<std::size_t, Pass> by_threshold;
    for (std::uint32_t i = 0; i < nrel; ++i) {
        const std::size_t t = threshold_of(dbl[i].length);
        Pass& pass = by_threshold[t];
        pass.t = t;
        pass.hosts.push_back(i);
        pass.host_mass += 2 * dbl[i].length;
    }
    std::vector<Pass> passes;
    passes.reserve(by_threshold.size());
    for (auto& [t, pass] : by_threshold) passes.push_back(std::move(pass));
    // biggest host class first: a violating sweep configuration collides
    // within its first few thousand windows
    std::sort(passes.begin(), passes.end(),
              [](const Pass& a, const Pass& b) { return a.host_mass > b.host_mass; });

    struct Packed {
        std::uint32_t relator;
        std::uint32_t offset;
        bool inverted;
    };

    for (const Pass& pass : passes) {
        std::unordered_map<std::uint64_t, std::vector<Packed>> index;
        index.reserve(std::min<std::size_t>(pass.host_mass, 1u << 16));

        auto scan_bucket = [&](std::uint32_t i, std::uint32_t off, bool inverted,
                               const Letter* w,
                               const std::vector<Packed>& bucket) -> std::optional<PieceWitness> {
            const std::size_t len = dbl[i].length;
            for (const Packed& prev : bucket) {
                const std::size_t plen = dbl[prev.relator].length;
                const Letter* pw = dbl[prev.relator].window(prev.inverted, prev.offset);
                if (!std::equal(w, w + pass.t, pw)) continue;
                const Occurrence cur{i, off, inverted};
                const Occurrence old{prev.relator, prev.offset, prev.inverted};
                if (!pair_admissible(cur, old, pass.t, len, plen)) continue;
                if (threshold_of(std::min(len, plen)) > pass.t) continue;
                PieceWitness wit;
                wit.piece.assign(w, w + pass.t);
                wit.first = old;
                wit.second = cur;
                return wit;
            }
            return std::nullopt;
        };

        // hosts: check against earlier hosts, then insert
        for (std::uint32_t i : pass.hosts) {
            const std::size_t len = dbl[i].length;
            for (int orient = 0; orient < 2; ++orient) {
                for (std::uint32_t off = 0; off < len; ++off) {
                    const Letter* w = dbl[i].window(orient == 1, off);
                    const std::uint64_t h = hash_window(w, pass.t);
                    auto& bucket = index[h];
                    if (auto wit = scan_bucket(i, off, orient == 1, w, bucket)) {
                        return {false, std::move(wit)};
                    }
                    bucket.push_back({i, off, orient == 1});
                }
            }
        }
        // longer relators: probe only
        for (std::uint32_t i = 0; i < nrel; ++i) {
            if (threshold_of(dbl[i].length) <= pass.t) continue;
            const std::size_t len = dbl[i].length;
            for (int orient = 0; orient < 2; ++orient) {
                for (std::uint32_t off = 0; off < len; ++off) {
                    const Letter* w = dbl[i].window(orient == 1, off);
                    const auto it = index.find(hash_window(w, pass.t));
                    if (it == index.end()) continue;
                    if (auto wit = scan_bucket(i, off, orient == 1, w, it->second)) {
                        return {false, std::move(wit)};
                    }
                }
            }
        }
    }
    return {};
}

std::optional<Word> find_trivializing_pair(const RelatorSet& r, Letter x) {
    if (letter_generator(x) > r.rank)
        throw std::domain_error("find_trivializing_pair: letter outside rank");
    std::set<Word> members(r.relators.begin(), r.relators.end());
    const Letter xinv = letter_inverse(x);
    for (const Word& w : r.relators) {
        if (w.letters().front() == xinv || w.letters().back() == xinv) continue;
        std::vector<Letter> xw;
        xw.reserve(w.length() + 1);
        xw.push_back(x);
        xw.insert(xw.end(), w.letters().begin(), w.letters().end());
        if (members.count(Word::from_letters(std::move(xw))) > 0) return w;
    }
    return std::nullopt;
}

Thresholds compute_thresholds(unsigned rank, double eps) {
    if (rank < 2) throw std::domain_error("compute_thresholds: rank must be >= 2");
    if (eps < 0.0) throw std::domain_error("compute_thresholds: eps must be >= 0");
    const double m = static_cast<double>(rank);
    const double log2m = std::log(2.0 * m);

    Thresholds th;
    th.rank = rank;
    th.eps = eps;
    th.mu = std::log1p(1.0 / (4.0 * m - 4.0)) / log2m - eps;
    if (th.mu <= 0.0)
        throw std::domain_error("compute_thresholds: eps too large, mu <= 0");
    th.lambda = th.mu / (15.0 * m + 3.0 * th.mu);
    th.d_ao = 1.0 / (120.0 * m * m * log2m);
    th.dens_m = std::log(2.0 * m - 1.25) / std::log(2.0 * m - 1.0);
    th.lambda_floor = 1.0 / (60.0 * m * m * log2m);

    if (!(th.lambda / 2.0 > th.d_ao))
        throw std::domain_error("compute_thresholds: eps too large, lambda/2 <= d_ao");
    if (!(th.d_ao < 1.0 - th.dens_m))
        throw std::domain_error("compute_thresholds: d_ao >= 1 - dens_m");
    return th;
}

} // namespace randset
