#pragma once

// Closed-form per-instance constants of the dual solver. Everything here is
// exact: rationals where the quantity is rational, squared forms where the
// natural quantity is irrational (R, r, L), and an integer iteration budget
// whose inner ceiling is certified by a guarded high-precision evaluation.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <optional>
#include <string>

#include "hcdual/errors.hpp"
#include "hcdual/graph.hpp"
#include "hcdual/rational.hpp"

namespace hcdual {

enum class PrecisionMode { faithful, practical };

inline std::string precision_mode_name(PrecisionMode m) {
    return m == PrecisionMode::faithful ? "faithful" : "practical";
}

struct InstanceConstants {
    int n = 0;
    int m = 0;
    Rational M;             // (4n^2 - 4|E|)/n, simplex budget
    Rational R2;            // R^2 = M^2/n (R = M/sqrt(n) is irrational)
    Rational L2;            // L^2 = n (n+1)^2
    Rational epsilon;       // 1/(3 n!)
    Rational delta;         // 1/(3 n n!)
    Rational tau;           // 2/(3 n!)
    Rational lambda0_coord; // M/n, every coordinate of the start point
    long long N = 0;        // 2 (n+1)^2 ceil(ln(L R^2 / (r eps)))
    long long p = 0;        // fixed-point fractional bits
    PrecisionMode mode = PrecisionMode::practical;

    std::string r_form() const { return rat_str(M) + "/(" + std::to_string(n) + "+sqrt(" + std::to_string(n) + "))"; }
    std::string L_form() const { return "(" + std::to_string(n + 1) + ")*sqrt(" + std::to_string(n) + ")"; }
    std::string lambda_hat_form() const { return r_form(); } // inscribed-ball center coordinate
};

namespace detail {

// ceil(ln(C * (sqrt(n)+1))) for rational C > 0. The argument is algebraic
// and e^k is transcendental, so the ceiling is well defined; we certify it
// with a widening guard band around the nearest integer.
template <unsigned Digits>
inline std::optional<long long> ceil_ln_try(const Rational& C, int n) {
    using BF = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;
    BF x = BF(rat_num(C).str()) / BF(rat_den(C).str()) * (sqrt(BF(n)) + 1);
    if (x <= 0) throw internal_error("ceil_ln: non-positive argument");
    BF v = log(x);
    BF fl = floor(v);
    BF frac = v - fl;
    BF guard = BF("1e-" + std::to_string(Digits / 2));
    if (frac < guard || frac > 1 - guard) return std::nullopt; // too close to call at this precision
    return (long long)fl + 1;
}

inline long long ceil_ln(const Rational& C, int n) {
    if (auto k = ceil_ln_try<100>(C, n)) return *k;
    if (auto k = ceil_ln_try<300>(C, n)) return *k;
    if (auto k = ceil_ln_try<1000>(C, n)) return *k;
    throw internal_error("ceil_ln: could not certify ceiling at 1000 digits");
}

} // namespace detail

inline InstanceConstants instance_constants(const Graph& g, PrecisionMode mode,
                                            std::optional<long long> p_override = std::nullopt) {
    int n = g.vertex_count();
    if (n < 3) throw contract_error("instance_constants: n must be >= 3");
    InstanceConstants c;
    c.n = n;
    c.m = g.edge_count();
    c.M = Rational(4 * (long long)n * n - 4 * (long long)c.m, n);
    if (c.M <= 0) throw internal_error("instance_constants: M <= 0 (impossible for a simple graph)");
    c.R2 = c.M * c.M / n;
    c.L2 = Rational((long long)n * (n + 1) * (n + 1));
    Thresholds t = factorial_thresholds(n);
    c.epsilon = t.epsilon;
    c.delta = t.delta;
    c.tau = t.tau;
    c.lambda0_coord = c.M / n;
    c.mode = mode;

    // L R^2 / (r eps) collapses to 3 n! (n+1) M (sqrt(n)+1)
    Rational C = Rational(3 * factorial(n)) * (n + 1) * c.M;
    long long k = detail::ceil_ln(C, n);
    c.N = 2LL * (n + 1) * (n + 1) * k;
    if (c.N < 1) throw internal_error("instance_constants: N < 1");

    if (mode == PrecisionMode::faithful) {
        c.p = 5 * c.N;
    } else {
        c.p = p_override.value_or(256);
    }
    if (c.p < 1) throw contract_error("instance_constants: precision bits must be >= 1");
    return c;
}

inline long long iteration_budget(const InstanceConstants& c) { return c.N; }

} // namespace hcdual
