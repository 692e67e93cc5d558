#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cbsum/polynomial.hpp"
#include "cbsum/sequences.hpp"

namespace cbsum {

/// The four sum families: terms 4^{-k} k^r C(2k,k) times 1, O_k, H_k or H_{2k}.
enum class SumFamily { plain, odd, harmonic, even_harmonic };

enum class SumMethod { brute, recursive, closed };

inline std::string family_name(SumFamily f) {
    switch (f) {
        case SumFamily::plain: return "plain";
        case SumFamily::odd: return "O";
        case SumFamily::harmonic: return "H";
        case SumFamily::even_harmonic: return "2H";
    }
    throw std::logic_error("family_name: bad enum");
}

inline SumFamily parse_family(std::string_view s) {
    if (s == "plain") return SumFamily::plain;
    if (s == "O") return SumFamily::odd;
    if (s == "H") return SumFamily::harmonic;
    if (s == "2H") return SumFamily::even_harmonic;
    throw std::invalid_argument("unknown sum family '" + std::string(s) + "'");
}

inline std::string method_name(SumMethod m) {
    switch (m) {
        case SumMethod::brute: return "brute";
        case SumMethod::recursive: return "recursive";
        case SumMethod::closed: return "closed";
    }
    throw std::logic_error("method_name: bad enum");
}

inline SumMethod parse_method(std::string_view s) {
    if (s == "brute") return SumMethod::brute;
    if (s == "recursive") return SumMethod::recursive;
    if (s == "closed") return SumMethod::closed;
    throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

struct SumQuery {
    SumFamily family = SumFamily::plain;
    int r = 0;
    int n = 0;
    SumMethod method = SumMethod::recursive;
};

/// Closed forms exist only where printed: r <= 3 for plain/O/H, r <= 1 for 2H.
inline bool has_closed_form(SumFamily family, int r) {
    if (r < 0)
        return false;
    return family == SumFamily::even_harmonic ? r <= 1 : r <= 3;
}

/// Term-by-term exact summation straight from the definitions; the ground
/// truth every other evaluator is checked against. k^0 = 1 including k = 0.
inline Rational sum_brute(SumFamily family, int r, int n) {
    if (r < 0 || n < 0)
        throw std::domain_error("sum_brute: negative argument");
    Rational acc;
    Rational w(1);        // 4^{-k} C(2k,k)
    Rational h, o, h2;    // H_k, O_k, H_{2k}
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            w *= Rational(2 * k - 1, 2 * k);
            h += Rational(1, k);
            o += Rational(1, 2 * k - 1);
            h2 += Rational(1, 2 * k - 1);
            h2 += Rational(1, 2 * k);
        }
        Rational term = w * Rational(ipow(Integer(k), r));
        switch (family) {
            case SumFamily::plain: break;
            case SumFamily::odd: term *= o; break;
            case SumFamily::harmonic: term *= h; break;
            case SumFamily::even_harmonic: term *= h2; break;
        }
        acc += term;
    }
    return acc;
}

inline Rational sum_brute(const SumQuery& q) { return sum_brute(q.family, q.r, q.n); }

namespace detail {

/// S_0(n) .. S_r(n) by the order recursion
///   (2r+1) S_r(n) = n^r 4^{-n}(2n+1)C(2n,n) + 2 sum_{j=1..r-1} C(r,j+1)(-1)^{j+1} S_{r-j}(n)
/// (empty sum for r <= 1). Scratch memo is call-local.
inline std::vector<Rational> s_plain_upto(int r, int n) {
    Rational x = Rational(2 * n + 1) * weight(n);  // 4^{-n}(2n+1)C(2n,n)
    std::vector<Rational> s;
    s.reserve(r + 1);
    s.push_back(x);
    for (int rr = 1; rr <= r; ++rr) {
        Rational rhs = Rational(ipow(Integer(n), rr)) * x;
        for (int j = 1; j <= rr - 1; ++j) {
            Rational corr = Rational(2 * binomial(rr, j + 1)) * s[rr - j];
            rhs += (j & 1) ? corr : -corr;  // sign (-1)^{j+1}
        }
        s.push_back(rhs / Rational(2 * rr + 1));
    }
    return s;
}

/// S_0^O(n) .. S_r^O(n):
///   base  S_0^O(n) = 4^{-n}C(2n,n)((2n+1)O_n - 2n)
///   (2r+1) S_r^O(n) = n^r 4^{-n}C(2n,n)((2n+1)O_n + 1) - S_r(n)
///                     + 2 sum_{j=1..r-1} C(r,j+1)(-1)^{j+1} S_{r-j}^O(n)
inline std::vector<Rational> s_odd_upto(int r, int n) {
    std::vector<Rational> plain = s_plain_upto(r, n);
    Rational w = weight(n);
    Rational on = odd_harmonic(n);
    std::vector<Rational> s;
    s.reserve(r + 1);
    s.push_back(w * (Rational(2 * n + 1) * on - Rational(2 * n)));
    Rational head = w * (Rational(2 * n + 1) * on + Rational(1));
    for (int rr = 1; rr <= r; ++rr) {
        Rational rhs = Rational(ipow(Integer(n), rr)) * head - plain[rr];
        for (int j = 1; j <= rr - 1; ++j) {
            Rational corr = Rational(2 * binomial(rr, j + 1)) * s[rr - j];
            rhs += (j & 1) ? corr : -corr;
        }
        s.push_back(rhs / Rational(2 * rr + 1));
    }
    return s;
}

/// S_0^H(n) .. S_r^H(n):
///   base  S_0^H(n) = (2n+1)4^{-n}C(2n,n)(H_n - 2) + 2
///   (2r+1) S_r^H(n) = n^r (2n+1)4^{-n}C(2n,n)(H_n + 1) + 2(-1)^r - S_r(n)
///                     + 2 sum_{j=1..r-1} C(r,j+1)(-1)^{j+1} S_{r-j}^H(n)
///                     - 2 sum_{j=0..r}   C(r+1,j)(-1)^{r-j} S_j(n)
inline std::vector<Rational> s_h_upto(int r, int n) {
    std::vector<Rational> plain = s_plain_upto(r, n);
    Rational x = Rational(2 * n + 1) * weight(n);
    Rational hn = harmonic(n);
    std::vector<Rational> s;
    s.reserve(r + 1);
    s.push_back(x * (hn - Rational(2)) + Rational(2));
    Rational head = x * (hn + Rational(1));
    for (int rr = 1; rr <= r; ++rr) {
        Rational rhs = Rational(ipow(Integer(n), rr)) * head - plain[rr];
        rhs += (rr & 1) ? Rational(-2) : Rational(2);  // 2(-1)^r
        for (int j = 1; j <= rr - 1; ++j) {
            Rational corr = Rational(2 * binomial(rr, j + 1)) * s[rr - j];
            rhs += (j & 1) ? corr : -corr;
        }
        for (int j = 0; j <= rr; ++j) {
            Rational corr = Rational(2 * binomial(rr + 1, j)) * plain[j];
            rhs += ((rr - j) & 1) ? corr : -corr;  // -2(-1)^{r-j}
        }
        s.push_back(rhs / Rational(2 * rr + 1));
    }
    return s;
}

/// S_0^{2H}(n) .. S_r^{2H}(n) by the direct recursion
///   base  S_0^{2H}(n) = 4^{-n}C(2n,n)((2n+1)H_{2n} - (4n+1)) + 1
///   (2r+1) S_r^{2H}(n) = n^r 4^{-n}C(2n,n)((2n+1)H_{2n} + n + 3/2) + (-1)^r
///                        - (3/2) S_r(n)
///                        + 2 sum_{j=1..r-1} C(r,j+1)(-1)^{j+1} S_{r-j}^{2H}(n)
///                        -   sum_{j=0..r}   C(r+1,j)(-1)^{r-j} S_j(n)
inline std::vector<Rational> s_2h_upto(int r, int n) {
    std::vector<Rational> plain = s_plain_upto(r, n);
    Rational w = weight(n);
    Rational h2n = harmonic(2 * n);
    std::vector<Rational> s;
    s.reserve(r + 1);
    s.push_back(w * (Rational(2 * n + 1) * h2n - Rational(4 * n + 1)) + Rational(1));
    Rational head = w * (Rational(2 * n + 1) * h2n + Rational(n) + Rational(3, 2));
    for (int rr = 1; rr <= r; ++rr) {
        Rational rhs = Rational(ipow(Integer(n), rr)) * head - Rational(3, 2) * plain[rr];
        rhs += (rr & 1) ? Rational(-1) : Rational(1);  // (-1)^r
        for (int j = 1; j <= rr - 1; ++j) {
            Rational corr = Rational(2 * binomial(rr, j + 1)) * s[rr - j];
            rhs += (j & 1) ? corr : -corr;
        }
        for (int j = 0; j <= rr; ++j) {
            Rational corr = Rational(binomial(rr + 1, j)) * plain[j];
            rhs += ((rr - j) & 1) ? corr : -corr;
        }
        s.push_back(rhs / Rational(2 * rr + 1));
    }
    return s;
}

/// Printed closed forms, one function per family. O has two printed shapes
/// (O_n based and O_{n+1} based); both are kept verbatim.
inline Rational closed_plain(int r, int n) {
    Rational x = Rational(2 * n + 1) * weight(n);
    switch (r) {
        case 0: return x;
        case 1: return Rational(n, 3) * x;
        case 2: return Rational(n, 15) * Rational(3 * n + 2) * x;
        case 3:
            return Rational(n, 105) * Rational(Integer(15) * n * n + 18 * n + 2) * x;
    }
    throw std::domain_error("closed_plain: no closed form for r=" + std::to_string(r));
}

inline Rational closed_odd_on(int r, int n) {
    Rational w = weight(n);
    Rational on = odd_harmonic(n);
    Rational head = Rational(2 * n + 1) * on;
    switch (r) {
        case 0: return w * (head - Rational(2 * n));
        case 1:
            return Rational(n, 3) * w * (head - Rational(2, 3) * Rational(n - 1));
        case 2:
            return Rational(n, 15) * w *
                   (Rational(3 * n + 2) * head -
                    Rational(2, 15) * Rational(9 * n + 7) * Rational(n - 1));
        case 3:
            return Rational(n, 105) * w *
                   (Rational(Integer(15) * n * n + 18 * n + 2) * head -
                    Rational(2, 105) * Rational(Integer(225) * n * n + 198 * n - 71) *
                        Rational(n - 1));
    }
    throw std::domain_error("closed_odd_on: no closed form for r=" + std::to_string(r));
}

inline Rational closed_odd_on1(int r, int n) {
    Rational x = Rational(2 * n + 1) * weight(n);
    Rational on1 = odd_harmonic(n + 1);
    switch (r) {
        case 1: return Rational(n, 3) * x * (on1 - Rational(1, 3));
        case 2:
            return Rational(n, 15) * x *
                   (Rational(3 * n + 2) * on1 - Rational(1, 15) * Rational(9 * n + 16));
        case 3:
            return Rational(n, 105) * x *
                   (Rational(Integer(15) * n * n + 18 * n + 2) * on1 -
                    Rational(1, 105) * Rational(Integer(225) * n * n + 648 * n + 352));
    }
    throw std::domain_error("closed_odd_on1: no closed form for r=" + std::to_string(r));
}

inline Rational closed_h(int r, int n) {
    Rational x = Rational(2 * n + 1) * weight(n);
    Rational hn = harmonic(n);
    switch (r) {
        case 0: return x * (hn - Rational(2)) + Rational(2);
        case 1:
            return Rational(1, 3) * x *
                       (Rational(n) * hn - Rational(2, 3) * Rational(n) + Rational(2)) -
                   Rational(2, 3);
        case 2:
            return Rational(1, 5) * x *
                       (Rational(n, 3) * Rational(3 * n + 2) * hn -
                        Rational(2, 45) * Rational(Integer(9) * n * n - 14 * n + 15)) +
                   Rational(2, 15);
        case 3:
            return Rational(1, 7) * x *
                       (Rational(n, 15) * Rational(Integer(15) * n * n + 18 * n + 2) * hn -
                        Rational(2, 1575) *
                            Rational(Integer(225) * n * n * n - Integer(297) * n * n +
                                     37 * n + 105)) +
                   Rational(2, 105);
    }
    throw std::domain_error("closed_h: no closed form for r=" + std::to_string(r));
}

inline Rational closed_2h(int r, int n) {
    Rational w = weight(n);
    Rational h2n = harmonic(2 * n);
    switch (r) {
        case 0:
            return w * (Rational(2 * n + 1) * h2n - Rational(4 * n + 1)) + Rational(1);
        case 1:
            return Rational(1, 9) * w *
                       (Rational(3 * n) * Rational(2 * n + 1) * h2n -
                        Rational(Integer(4) * n * n) + Rational(7 * n + 3)) -
                   Rational(1, 3);
    }
    throw std::domain_error("closed_2h: no closed form for r=" + std::to_string(r));
}

}  // namespace detail

/// S_r(n) by the order recursion.
inline Rational s_plain(int r, int n) {
    if (r < 0 || n < 0)
        throw std::domain_error("s_plain: negative argument");
    return detail::s_plain_upto(r, n).back();
}

/// S_r^O(n) by the recursion seeded with the closed r = 0 base.
inline Rational s_odd(int r, int n) {
    if (r < 0 || n < 0)
        throw std::domain_error("s_odd: negative argument");
    return detail::s_odd_upto(r, n).back();
}

/// S_r^H(n) by the recursion seeded with the closed r = 0 base.
inline Rational s_h(int r, int n) {
    if (r < 0 || n < 0)
        throw std::domain_error("s_h: negative argument");
    return detail::s_h_upto(r, n).back();
}

/// S_r^{2H}(n), evaluated both through the O/H decomposition
/// S_r^{2H} = S_r^O + S_r^H/2 and through its own recursion; the two routes
/// must agree.
inline Rational s_2h(int r, int n) {
    if (r < 0 || n < 0)
        throw std::domain_error("s_2h: negative argument");
    Rational via_split = s_odd(r, n) + s_h(r, n) / Rational(2);
    Rational via_recursion = detail::s_2h_upto(r, n).back();
    if (via_split != via_recursion)
        throw std::logic_error("s_2h: decomposition and recursion disagree at r=" +
                               std::to_string(r) + " n=" + std::to_string(n));
    return via_split;
}

/// The printed closed form for (family, r). For family O with r in 1..3 both
/// printed shapes are evaluated and must agree. Throws std::domain_error for
/// pairs with no printed closed form.
inline Rational closed_form(SumFamily family, int r, int n) {
    if (r < 0 || n < 0)
        throw std::domain_error("closed_form: negative argument");
    if (!has_closed_form(family, r))
        throw std::domain_error("closed_form: no printed closed form for family " +
                                family_name(family) + " r=" + std::to_string(r));
    switch (family) {
        case SumFamily::plain:
            return detail::closed_plain(r, n);
        case SumFamily::odd: {
            Rational v = detail::closed_odd_on(r, n);
            if (r >= 1) {
                Rational alt = detail::closed_odd_on1(r, n);
                if (v != alt)
                    throw std::logic_error("closed_form: O_n and O_{n+1} shapes disagree");
            }
            return v;
        }
        case SumFamily::harmonic:
            return detail::closed_h(r, n);
        case SumFamily::even_harmonic:
            return detail::closed_2h(r, n);
    }
    throw std::logic_error("closed_form: bad family enum");
}

inline Rational closed_form(const SumQuery& q) { return closed_form(q.family, q.r, q.n); }

/// Dispatch on q.method.
inline Rational evaluate(const SumQuery& q) {
    switch (q.method) {
        case SumMethod::brute:
            return sum_brute(q);
        case SumMethod::closed:
            return closed_form(q);
        case SumMethod::recursive:
            switch (q.family) {
                case SumFamily::plain: return s_plain(q.r, q.n);
                case SumFamily::odd: return s_odd(q.r, q.n);
                case SumFamily::harmonic: return s_h(q.r, q.n);
                case SumFamily::even_harmonic: return s_2h(q.r, q.n);
            }
    }
    throw std::logic_error("evaluate: bad enum");
}

/// P_r(x), the degree r-1 polynomial with S_r(n) = n(2n+1)4^{-n}C(2n,n)P_r(n)
/// for r >= 1. Built from P_1 = 1/3 by
///   (2r+1) P_r(x) = x^{r-1} + 2 sum_{j=1..r-1} C(r,j+1)(-1)^{j+1} P_{r-j}(x).
inline Polynomial p_poly(int r) {
    if (r < 1)
        throw std::domain_error("p_poly: r must be >= 1");
    std::vector<Polynomial> p;
    p.reserve(r + 1);
    p.push_back(Polynomial());  // unused slot 0
    p.push_back(Polynomial::constant(Rational(1, 3)));
    for (int rr = 2; rr <= r; ++rr) {
        Polynomial rhs = Polynomial::monomial(rr - 1);
        for (int j = 1; j <= rr - 1; ++j) {
            Polynomial corr = Rational(2 * binomial(rr, j + 1)) * p[rr - j];
            rhs = (j & 1) ? rhs + corr : rhs - corr;
        }
        p.push_back(Rational(1, 2 * rr + 1) * rhs);
    }
    return p[r];
}

}  // namespace cbsum
