#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace treecentral {

/// Exact nonnegative integer for subtree counts, backed by GMP.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT: implicit by intent
    explicit BigCount(mpz_class v);

    /// Parses a decimal string. Throws std::invalid_argument on bad input or a negative value.
    static BigCount from_string(const std::string& decimal);

    /// 2^k
    static BigCount power_of_two(unsigned long k);

    [[nodiscard]] std::string to_string() const { return value_.get_str(); }
    [[nodiscard]] const mpz_class& value() const noexcept { return value_; }
    [[nodiscard]] std::size_t bit_length() const;

    BigCount& operator+=(const BigCount& o) { value_ += o.value_; return *this; }
    BigCount& operator*=(const BigCount& o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error when the result would be negative.
    BigCount& operator-=(const BigCount& o);

    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
    friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }

    friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

}  // namespace treecentral
