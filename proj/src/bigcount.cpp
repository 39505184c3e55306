#include "treecentral/bigcount.hpp"

#include <ostream>
#include <stdexcept>

namespace treecentral {

BigCount::BigCount(mpz_class v) : value_(std::move(v)) {
    if (sgn(value_) < 0) throw std::domain_error("BigCount must be nonnegative");
}

BigCount BigCount::from_string(const std::string& decimal) {
    if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not a nonnegative decimal integer: '" + decimal + "'");
    }
    return BigCount(mpz_class(decimal, 10));
}

BigCount BigCount::power_of_two(unsigned long k) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, k);
    return BigCount(std::move(v));
}

std::size_t BigCount::bit_length() const {
    return sgn(value_) == 0 ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

BigCount& BigCount::operator-=(const BigCount& o) {
    if (cmp(value_, o.value_) < 0) throw std::domain_error("BigCount subtraction would go negative");
    value_ -= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_string(); }

}  // namespace treecentral
