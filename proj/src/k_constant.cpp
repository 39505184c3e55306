#include "treecentral/k_constant.hpp"

#include <vector>

namespace treecentral {

namespace {

mpz_class pow2(unsigned long k) {
    mpz_class v;
    mpz_mul_2exp(v.get_mpz_t(), mpz_class(1).get_mpz_t(), k);
    return v;
}

mpz_class shift_floor(const mpz_class& x, unsigned long k) {
    mpz_class r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

mpz_class shift_ceil(const mpz_class& x, unsigned long k) {
    mpz_class r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

mpz_class div_floor(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

mpz_class div_ceil(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

struct Bounds {
    mpz_class lo;
    mpz_class hi;
};

// ln(1 + 1/y^2) = 2 atanh(1/q), q = 2y^2 + 1, as a fixed-point enclosure with `bits` fraction bits.
Bounds log1p_inverse_square(const mpz_class& y, unsigned long bits) {
    const mpz_class q = 2 * y * y + 1;
    const mpz_class q2 = q * q;
    const mpz_class one = pow2(bits);
    Bounds out{0, 0};
    // power = q^(2j+1)
    mpz_class power = q;
    long terms = 0;
    for (long j = 0;; ++j) {
        const mpz_class denom = power * (2 * j + 1);
        // 2 / ((2j+1) q^(2j+1)) in fixed point, floored.
        out.lo += div_floor(2 * one, denom);
        ++terms;
        // Remaining terms sum to at most 4 / q^(2j+3) since q >= 9.
        power *= q2;
        if (4 * one < power) break;
    }
    // Each floor lost < 1 ulp; the tail is < 1 ulp.
    out.hi = out.lo + terms + 1;
    return out;
}

// exp(s) for 0 <= s < 1/2 as fixed point; `s` is itself fixed point.
mpz_class exp_fixed(const mpz_class& s, unsigned long bits, bool upper) {
    const mpz_class one = pow2(bits);
    mpz_class sum = one;
    mpz_class term = one;
    for (long j = 1;; ++j) {
        const mpz_class num = term * s;
        const mpz_class den = one * j;
        term = upper ? div_ceil(num, den) : div_floor(num, den);
        sum += term;
        if (term <= 1) break;
    }
    if (upper) {
        // Remainder after a term <= 1 ulp is at most 1 ulp * sum s^k <= 2 ulps.
        sum += 2;
    }
    return sum;
}

void check_bits(unsigned long bits) {
    if (bits < 8 || bits > 20000) {
        throw PrecisionError("k enclosure supports 8..20000 fraction bits, got " + std::to_string(bits));
    }
}

}  // namespace

KInterval k_interval(unsigned long bits) {
    check_bits(bits);
    const mpz_class one = pow2(bits);

    // Stop at m once the tail bound 2^-m / Y_m^2 is below one ulp.
    mpz_class s_lo = 0;
    mpz_class s_hi = 0;
    mpz_class y = 2;
    int m = 0;
    while (true) {
        const mpz_class tail_den = pow2(static_cast<unsigned long>(m)) * y * y;
        if (tail_den > one) break;
        const auto ln = log1p_inverse_square(y, bits);
        s_lo += shift_floor(ln.lo, static_cast<unsigned long>(m + 1));
        s_hi += shift_ceil(ln.hi, static_cast<unsigned long>(m + 1));
        y = y * y + 1;
        ++m;
    }
    s_hi += div_ceil(one, pow2(static_cast<unsigned long>(m)) * y * y);

    KInterval out;
    out.bits = bits;
    out.terms_used = m;
    out.lo = 2 * exp_fixed(s_lo, bits, false);
    out.hi = 2 * exp_fixed(s_hi, bits, true);
    return out;
}

std::optional<BigCount> floor_k_power(const KInterval& k, int h) {
    if (h < 0 || h > 12) {
        throw PrecisionError("floor_k_power supports 0 <= h <= 12");
    }
    const unsigned long e = 1UL << h;
    mpz_class lo;
    mpz_class hi;
    mpz_pow_ui(lo.get_mpz_t(), k.lo.get_mpz_t(), e);
    mpz_pow_ui(hi.get_mpz_t(), k.hi.get_mpz_t(), e);
    const mpz_class a = shift_floor(lo, k.bits * e);
    const mpz_class b = shift_floor(hi, k.bits * e);
    if (a != b) return std::nullopt;
    return BigCount(a);
}

KEstimate estimate_k(int digits) {
    if (digits < 1 || digits > kMaxKDigits) {
        throw PrecisionError("k digits must be in [1, " + std::to_string(kMaxKDigits) + "], got " +
                             std::to_string(digits));
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
    // log2(10) < 3.33; start with 32 guard bits and widen if the enclosure straddles a digit boundary.
    unsigned long bits = static_cast<unsigned long>(digits) * 10 / 3 + 32;
    while (true) {
        const auto k = k_interval(bits);
        const mpz_class a = shift_floor(k.lo * scale, bits);
        const mpz_class b = shift_floor(k.hi * scale, bits);
        if (a == b) {
            std::string text = a.get_str();
            KEstimate out;
            out.value = digits == 1 ? text : text.substr(0, 1) + "." + text.substr(1);
            out.precision = digits;
            out.terms_used = k.terms_used;
            return out;
        }
        bits *= 2;
    }
}

}  // namespace treecentral
