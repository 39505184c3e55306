#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "treecentral/bigcount.hpp"

namespace treecentral {

/// Largest number of significant digits estimate_k accepts.
inline constexpr int kMaxKDigits = 200;

class PrecisionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rigorous enclosure lo / 2^bits <= k <= hi / 2^bits of the growth constant
/// k = 2 exp(sum_i 2^(-i-1) ln(1 + 1/Y_i^2)), Y_0 = 2, Y_{i+1} = Y_i^2 + 1.
struct KInterval {
    mpz_class lo;
    mpz_class hi;
    unsigned long bits = 0;
    int terms_used = 0;  // series index m after which the tail is bounded analytically
};

/// Encloses k with width at most a few units in the last of `bits` fractional bits.
[[nodiscard]] KInterval k_interval(unsigned long bits);

/// floor(k^(2^h)) when the enclosure pins it down, otherwise nullopt.
[[nodiscard]] std::optional<BigCount> floor_k_power(const KInterval& k, int h);

struct KEstimate {
    std::string value;  // decimal, truncated (not rounded) to `precision` significant digits
    int precision = 0;
    int terms_used = 0;
};

/// k to `digits` significant digits, every printed digit correct.
/// Throws PrecisionError when digits is outside [1, kMaxKDigits].
[[nodiscard]] KEstimate estimate_k(int digits);

}  // namespace treecentral
