#pragma once

// Arbitrary-precision fixed point: value = mantissa / 2^p. Every value in a
// computation shares one p; mixing is a contract violation, not a coercion.
// add/sub are exact. mul/div round to nearest with ties to the even
// mantissa, so each rounding op contributes at most 2^(-p-1) absolute error.
// isqrt floors: r <= sqrt(a) < r + 2^-p.

#include <string>

#include "hcdual/errors.hpp"
#include "hcdual/rational.hpp"

namespace hcdual {

// Nearest integer to num/den (den > 0), ties to even.
inline BigInt div_round_nearest_even(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw contract_error("div_round_nearest_even: denominator must be positive");
    bool neg = num < 0;
    BigInt a = neg ? BigInt(-num) : num;
    BigInt q = a / den;
    BigInt r = a - q * den;
    BigInt twice = r << 1;
    if (twice > den || (twice == den && boost::multiprecision::bit_test(q, 0))) ++q;
    return neg ? BigInt(-q) : q;
}

class FixedPoint {
public:
    FixedPoint() = default;
    FixedPoint(BigInt mantissa, long long frac_bits) : m_(std::move(mantissa)), p_(frac_bits) {
        if (frac_bits < 0) throw contract_error("FixedPoint: frac_bits must be >= 0");
    }

    static FixedPoint from_int(long long v, long long p) { return FixedPoint(BigInt(v) << (unsigned)p, p); }

    static FixedPoint from_rational_nearest(const Rational& r, long long p) {
        BigInt m = div_round_nearest_even(rat_num(r) * pow2(p), rat_den(r));
        return FixedPoint(std::move(m), p);
    }

    const BigInt& mantissa() const { return m_; }
    long long frac_bits() const { return p_; }
    Rational to_rational() const { return dyadic(m_, p_); }

    int sign() const { return m_ < 0 ? -1 : (m_ > 0 ? 1 : 0); }
    bool is_zero() const { return m_ == 0; }

    FixedPoint operator-() const { return FixedPoint(-m_, p_); }

    friend FixedPoint operator+(const FixedPoint& a, const FixedPoint& b) {
        check_same_p(a, b);
        return FixedPoint(a.m_ + b.m_, a.p_);
    }
    friend FixedPoint operator-(const FixedPoint& a, const FixedPoint& b) {
        check_same_p(a, b);
        return FixedPoint(a.m_ - b.m_, a.p_);
    }
    friend bool operator==(const FixedPoint& a, const FixedPoint& b) {
        check_same_p(a, b);
        return a.m_ == b.m_;
    }
    friend bool operator<(const FixedPoint& a, const FixedPoint& b) {
        check_same_p(a, b);
        return a.m_ < b.m_;
    }

    // exact: multiply by an integer
    FixedPoint mul_int(const BigInt& c) const { return FixedPoint(m_ * c, p_); }

    // rounded: divide by a nonzero integer
    FixedPoint div_int_nearest(const BigInt& c) const {
        if (c == 0) throw contract_error("FixedPoint: division by zero");
        BigInt num = m_, den = c;
        if (den < 0) { num = -num; den = -den; }
        return FixedPoint(div_round_nearest_even(num, den), p_);
    }

    // Exact decimal rendering; a dyadic always terminates in <= p digits.
    std::string to_decimal_string() const {
        BigInt a = m_ < 0 ? BigInt(-m_) : m_;
        BigInt ip = a >> (unsigned)p_;
        BigInt fm = a - (ip << (unsigned)p_);
        std::string s = (m_ < 0 ? "-" : "") + ip.str();
        if (fm != 0) {
            BigInt five = 1;
            for (long long i = 0; i < p_; ++i) five *= 5;
            std::string digits = (fm * five).str();
            while ((long long)digits.size() < p_) digits.insert(digits.begin(), '0');
            while (!digits.empty() && digits.back() == '0') digits.pop_back();
            s += "." + digits;
        }
        return s + "@p" + std::to_string(p_);
    }

private:
    static void check_same_p(const FixedPoint& a, const FixedPoint& b) {
        if (a.p_ != b.p_)
            throw contract_error("FixedPoint: mixed frac_bits (" + std::to_string(a.p_) + " vs " +
                                 std::to_string(b.p_) + ")");
    }

    BigInt m_ = 0;
    long long p_ = 0;
};

inline FixedPoint fp_mul(const FixedPoint& a, const FixedPoint& b) {
    if (a.frac_bits() != b.frac_bits()) throw contract_error("fp_mul: mixed frac_bits");
    return FixedPoint(div_round_nearest_even(a.mantissa() * b.mantissa(), pow2(a.frac_bits())),
                      a.frac_bits());
}

inline FixedPoint fp_div(const FixedPoint& a, const FixedPoint& b) {
    if (a.frac_bits() != b.frac_bits()) throw contract_error("fp_div: mixed frac_bits");
    if (b.mantissa() == 0) throw contract_error("fp_div: division by zero");
    BigInt num = a.mantissa() * pow2(a.frac_bits());
    BigInt den = b.mantissa();
    if (den < 0) { num = -num; den = -den; }
    return FixedPoint(div_round_nearest_even(num, den), a.frac_bits());
}

// floor semantics: mantissa = floor(sqrt(mantissa_a * 2^p))
inline FixedPoint fp_isqrt(const FixedPoint& a) {
    if (a.mantissa() < 0) throw contract_error("fp_isqrt: negative input");
    BigInt m = boost::multiprecision::sqrt(BigInt(a.mantissa() * pow2(a.frac_bits())));
    return FixedPoint(std::move(m), a.frac_bits());
}

} // namespace hcdual
