#include "randset/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace randset {

BigUint& BigUint::operator+=(const BigUint& other) {
    const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 sum = carry + limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(sum);
        carry = sum >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigUint& BigUint::mul_small(std::uint64_t factor) {
    if (factor == 0) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 prod = static_cast<unsigned __int128>(limb) * factor + carry;
        limb = static_cast<std::uint64_t>(prod);
        carry = prod >> 64;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint64_t>(carry));
        carry >>= 64;
    }
    return *this;
}

int BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    const std::uint64_t top = limbs_.back();
    return 64 * (limbs_.size() - 1) + (64 - static_cast<std::size_t>(__builtin_clzll(top)));
}

std::uint64_t BigUint::to_u64() const {
    if (limbs_.empty()) return 0;
    if (limbs_.size() > 1) throw std::overflow_error("BigUint::to_u64: value exceeds 64 bits");
    return limbs_[0];
}

double BigUint::log() const {
    if (limbs_.empty()) return -std::numeric_limits<double>::infinity();
    // mantissa from the top two limbs, exponent from limb position
    const std::size_t top = limbs_.size();
    long double mant = 0.0L;
    for (std::size_t i = top; i-- > 0 && i + 3 > top;)
        mant = mant * 18446744073709551616.0L + static_cast<long double>(limbs_[i]);
    const std::size_t consumed = std::min<std::size_t>(top, 2) * 64;
    const long double rest_bits = static_cast<long double>(64 * top - consumed);
    return static_cast<double>(std::log(mant) + rest_bits * 0.69314718055994530942L);
}

double BigUint::to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        v = v * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return v;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint64_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / 10);
            rem = cur % 10;
        }
        digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
        while (!work.empty() && work.back() == 0) work.pop_back();
    }
    return {digits.rbegin(), digits.rend()};
}

BigUint BigUint::uniform_below(const BigUint& bound, Rng& rng) {
    if (bound.is_zero()) throw std::domain_error("uniform_below: bound must be positive");
    const std::size_t bits = bound.bit_length();
    const std::size_t limbs = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (limbs - 1);
    const std::uint64_t top_mask =
        top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
    BigUint out;
    for (;;) {
        out.limbs_.assign(limbs, 0);
        for (std::size_t i = 0; i < limbs; ++i) out.limbs_[i] = rng.next_u64();
        out.limbs_.back() &= top_mask;
        out.trim();
        if (out < bound) return out;
    }
}

} // namespace randset
