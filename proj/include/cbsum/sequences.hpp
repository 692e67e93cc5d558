#pragma once

#include <stdexcept>
#include <vector>

#include "cbsum/rational.hpp"

namespace cbsum {

/// base^e with e >= 0; 0^0 = 1.
inline Integer ipow(const Integer& base, int e) {
    if (e < 0)
        throw std::domain_error("ipow: negative exponent");
    Integer result = 1;
    Integer b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

inline Integer factorial(int n) {
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    Integer result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

/// C(n,k) for n >= 0; vanishes outside 0 <= k <= n.
inline Integer binomial(int n, int k) {
    if (n < 0)
        throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact at every step
    }
    return result;
}

/// C(2n,n) = (2n)!/(n!)^2
inline Integer central_binomial(int n) {
    if (n < 0)
        throw std::domain_error("central_binomial: negative argument");
    return binomial(2 * n, n);
}

/// C(2n,n)/(n+1), always an integer.
inline Integer catalan(int n) {
    if (n < 0)
        throw std::domain_error("catalan: negative argument");
    return central_binomial(n) / (n + 1);
}

/// H_n = sum_{m=1..n} 1/m, H_0 = 0.
inline Rational harmonic(int n) {
    if (n < 0)
        throw std::domain_error("harmonic: negative argument");
    Rational acc;
    for (int m = 1; m <= n; ++m)
        acc += Rational(1, m);
    return acc;
}

/// O_n = sum_{m=1..n} 1/(2m-1), O_0 = 0.
inline Rational odd_harmonic(int n) {
    if (n < 0)
        throw std::domain_error("odd_harmonic: negative argument");
    Rational acc;
    for (int m = 1; m <= n; ++m)
        acc += Rational(1, 2 * m - 1);
    return acc;
}

/// H_0..H_m in one pass.
inline std::vector<Rational> harmonic_prefix(int m) {
    std::vector<Rational> h;
    h.reserve(m + 1);
    Rational acc;
    h.push_back(acc);
    for (int i = 1; i <= m; ++i) {
        acc += Rational(1, i);
        h.push_back(acc);
    }
    return h;
}

/// O_0..O_m in one pass.
inline std::vector<Rational> odd_harmonic_prefix(int m) {
    std::vector<Rational> o;
    o.reserve(m + 1);
    Rational acc;
    o.push_back(acc);
    for (int i = 1; i <= m; ++i) {
        acc += Rational(1, 2 * i - 1);
        o.push_back(acc);
    }
    return o;
}

/// w_k = 4^{-k} C(2k,k), the weight every sum family carries.
/// Satisfies w_k = 2(k+1)(w_k - w_{k+1}).
inline Rational weight(int k) {
    if (k < 0)
        throw std::domain_error("weight: negative argument");
    return Rational(central_binomial(k), ipow(Integer(4), k));
}

/// Generalized binomial C(t,k) = t(t-1)...(t-k+1)/k! for rational t.
inline Rational gen_binomial(const Rational& t, int k) {
    if (k < 0)
        throw std::domain_error("gen_binomial: negative lower index");
    Rational result(1);
    for (int i = 0; i < k; ++i)
        result *= (t - Rational(i));
    return result / Rational(factorial(k));
}

/// The finite rational difference H_t - H_{t-m} for non-integer t:
///   m >= 0:  sum_{j=0..m-1} 1/(t-j)
///   m <  0: -sum_{j=1..-m}  1/(t+j)
/// Non-integer t guarantees no term hits a pole. The values H_t alone are
/// not rational at non-integer t; only these gaps are evaluated.
inline Rational harmonic_gap(const Rational& t, int m) {
    if (t.is_integer())
        throw std::domain_error("harmonic_gap: t must be non-integer");
    Rational acc;
    if (m >= 0) {
        for (int j = 0; j < m; ++j)
            acc += (t - Rational(j)).reciprocal();
    } else {
        for (int j = 1; j <= -m; ++j)
            acc -= (t + Rational(j)).reciprocal();
    }
    return acc;
}

}  // namespace cbsum
