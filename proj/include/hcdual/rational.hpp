#pragma once

// Exact integer and rational arithmetic used everywhere results matter.
// All persisted numbers are rendered from these types; no floating point
// value ever reaches a report or a decision.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hcdual/errors.hpp"

namespace hcdual {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0) throw contract_error("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt pow2(long long bits) {
    if (bits < 0) throw contract_error("pow2: negative exponent");
    return BigInt(1) << static_cast<unsigned>(bits);
}

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// mantissa / 2^p as an exact rational
inline Rational dyadic(const BigInt& mantissa, long long p) {
    return Rational(mantissa, pow2(p));
}

// "num/den" in lowest terms; integers render without the "/1".
inline std::string rat_str(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "a/b", plain integers, and finite decimals ("3.5", "-0.25").
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw parse_error("malformed rational '" + text + "'");
        BigInt n(num), d(den);
        if (d == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string ip = text.substr(0, dot);
    std::string fp = text.substr(dot + 1);
    if (fp.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("malformed decimal '" + text + "'");
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip == "-" || ip == "+") ip += "0";
    if (ip.empty()) ip = "0";
    BigInt scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    BigInt whole(ip);
    BigInt frac = fp.empty() ? BigInt(0) : BigInt(fp);
    BigInt num = boost::multiprecision::abs(whole) * scale + frac;
    if (neg) num = -num;
    return Rational(num, scale);
}

struct Thresholds {
    Rational epsilon; // 1/(3 n!)
    Rational delta;   // 1/(3 n n!)
    Rational tau;     // 2/(3 n!), the decision cutoff
};

inline Thresholds factorial_thresholds(int n) {
    if (n < 3) throw contract_error("factorial_thresholds: n must be >= 3");
    BigInt nf = factorial(n);
    Thresholds t;
    t.epsilon = Rational(1, 3 * nf);
    t.delta = Rational(1, 3 * n * nf);
    t.tau = Rational(2, 3 * nf);
    return t;
}

} // namespace hcdual
