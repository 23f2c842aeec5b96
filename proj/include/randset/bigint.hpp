#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "randset/rng.hpp"

namespace randset {

// Unsigned big integer, little-endian 64-bit limbs. Covers what exact word
// counting needs: add, small multiply, compare, decimal printing, natural
// log, and uniform random draws below a bound.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) { // NOLINT(google-explicit-constructor)
        if (v != 0) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& other);
    BigUint operator+(const BigUint& other) const {
        BigUint r = *this;
        r += other;
        return r;
    }

    BigUint& mul_small(std::uint64_t factor);

    bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }
    bool operator!=(const BigUint& other) const { return !(*this == other); }
    bool operator<(const BigUint& other) const { return compare(other) < 0; }
    bool operator<=(const BigUint& other) const { return compare(other) <= 0; }
    bool operator>(const BigUint& other) const { return compare(other) > 0; }
    bool operator>=(const BigUint& other) const { return compare(other) >= 0; }

    // Number of significant bits; 0 for zero.
    std::size_t bit_length() const;

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const; // throws std::overflow_error if too large

    // Natural log; -inf for zero.
    double log() const;
    double to_double() const;

    std::string to_string() const;

    // Uniform integer in [0, bound) via top-bit-masked rejection.
    static BigUint uniform_below(const BigUint& bound, Rng& rng);

private:
    int compare(const BigUint& other) const;
    void trim();

    std::vector<std::uint64_t> limbs_;
};

} // namespace randset
