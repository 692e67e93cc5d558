#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbsum/stirling.hpp"
#include "cbsum/sums.hpp"

namespace cbsum {

/// Free parameters of a registry identity. Not every identity uses every
/// slot: pure-n identities ignore r and t, and only the general-parameter
/// identities take a (non-integer) t.
struct IdentityParams {
    int n = 0;
    int r = 0;
    std::optional<Rational> t;
};

struct VerificationReport {
    std::string key;
    IdentityParams params;
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

enum class Side { lhs, rhs };

/// How the r slot behaves for an identity: pinned to one exponent by the
/// key, a free exponent, or (for the polynomial seed identity) an index
/// into the fixed x sample list.
enum class RSlot { fixed, free, sample_index };

struct Identity {
    std::string key;
    std::string domain;     // human-readable parameter domain, comma-free
    std::string statement;  // the identity in plain ASCII math
    int n_min = 0;
    RSlot r_slot = RSlot::fixed;
    int r_fixed = 0;        // value when r_slot == fixed
    bool uses_t = false;
    std::function<Rational(const IdentityParams&)> lhs;
    std::function<Rational(const IdentityParams&)> rhs;
};

/// x sample points for the polynomial seed identity, selected by params.r.
inline const std::vector<Rational>& gould_x_samples() {
    static const std::vector<Rational> xs = {
        Rational(0), Rational(1), Rational(-1), Rational(2, 3), Rational(-3, 2)};
    return xs;
}

namespace detail {

// H_{j-t} - H_{n-t} as a finite gap anchored at n-t; never a lone H value.
inline Rational hgap_to(const Rational& n_minus_t, int n, int j) {
    return -harmonic_gap(n_minus_t, n - j);
}

/// sum_{k=0..n} (-1)^k k^r C(t,k) (H_t - H_{t-k})
inline Rational theorem_lhs(int n, int r, const Rational& t) {
    Rational acc;
    Rational ct(1);  // C(t,k)
    Rational gap;    // H_t - H_{t-k}
    for (int k = 1; k <= n; ++k) {  // k = 0 term carries a zero gap
        Rational edge = t - Rational(k - 1);
        ct *= edge / Rational(k);
        gap += edge.reciprocal();
        Rational term = Rational(ipow(Integer(k), r)) * ct * gap;
        acc += (k & 1) ? -term : term;
    }
    return acc;
}

/// sum_{k=0..r} (-1)^k k! rS(r,k,n-k) C(n-t,n-k) (H_{k-t} - H_{n-t});
/// terms past k = n vanish (negative lower binomial index), so the loop
/// caps at min(r, n).
inline Rational theorem_rhs(int n, int r, const Rational& t) {
    Rational acc;
    Rational nt = Rational(n) - t;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        Rational hdiff = hgap_to(nt, n, k);
        if (hdiff.is_zero()) continue;
        // shifted Stirling number: shift n-k, upper offset r, lower offset k
        Rational term = Rational(factorial(k) * r_stirling2(r, k, n - k)) *
                        gen_binomial(nt, n - k) * hdiff;
        acc += (k & 1) ? -term : term;
    }
    return acc;
}

/// sum_{k=0..n} (-1)^k C(t,n-k) k^r (H_t - H_{t-(n-k)})
inline Rational zha_lhs(int n, int r, const Rational& t) {
    Rational acc;
    Rational ct = gen_binomial(t, n);  // C(t,m) at m = n, stepped down
    Rational gap = harmonic_gap(t, n);
    for (int k = 0; k <= n; ++k) {
        int m = n - k;
        if (!gap.is_zero()) {
            Rational term = ct * Rational(ipow(Integer(k), r)) * gap;
            acc += (k & 1) ? -term : term;
        }
        if (m > 0) {
            Rational edge = t - Rational(m - 1);
            ct *= Rational(m) / edge;
            gap -= edge.reciprocal();
        }
    }
    return acc;
}

/// (-1)^n sum_{k=0..r} k! S(r,k) C(n-t,n-k) (H_{k-t} - H_{n-t})
inline Rational zha_rhs(int n, int r, const Rational& t) {
    Rational acc;
    Rational nt = Rational(n) - t;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        Integer s2 = stirling2(r, k);
        if (s2 == 0) continue;
        Rational hdiff = hgap_to(nt, n, k);
        if (hdiff.is_zero()) continue;
        acc += Rational(factorial(k) * s2) * gen_binomial(nt, n - k) * hdiff;
    }
    return (n & 1) ? -acc : acc;
}

/// sum_{k=0..n} (-1)^{n-k} C(n-t,n-k) k^r (H_{k-t} - H_{n-t})
inline Rational z15_lhs(int n, int r, const Rational& t) {
    Rational acc;
    Rational nt = Rational(n) - t;
    Rational cnt = gen_binomial(nt, n);
    Rational gap = harmonic_gap(nt, n);  // H_{n-t} - H_{k-t} at k = 0, stepped
    for (int k = 0; k <= n; ++k) {
        int m = n - k;
        if (!gap.is_zero()) {
            Rational term = cnt * Rational(ipow(Integer(k), r)) * gap;
            acc += (m & 1) ? term : -term;  // (-1)^{n-k} times the negated gap
        }
        if (m > 0) {
            Rational edge = nt - Rational(m - 1);
            cnt *= Rational(m) / edge;
            gap -= edge.reciprocal();
        }
    }
    return acc;
}

/// sum_{k=0..r} k! S(r,k) C(t,n-k) (H_t - H_{t-(n-k)})
inline Rational z15_rhs(int n, int r, const Rational& t) {
    Rational acc;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        Integer s2 = stirling2(r, k);
        if (s2 == 0) continue;
        Rational gap = harmonic_gap(t, n - k);
        if (gap.is_zero()) continue;
        acc += Rational(factorial(k) * s2) * gen_binomial(t, n - k) * gap;
    }
    return acc;
}

/// Explicit r = 0..3 expansions of theorem_rhs with spelled-out
/// coefficients.
inline Rational explicit_rhs(int n, int r, const Rational& t) {
    Rational nt = Rational(n) - t;
    auto piece = [&](const Rational& coef, int j) {
        if (coef.is_zero() || n - j < 0)
            return Rational(0);
        return coef * gen_binomial(nt, n - j) * hgap_to(nt, n, j);
    };
    Integer nn = n;
    switch (r) {
        case 0:
            return piece(Rational(1), 0);
        case 1:
            return piece(Rational(-1), 1) + piece(Rational(n), 0);
        case 2:
            return piece(Rational(2), 2) + piece(Rational(-(2 * n - 1)), 1) +
                   piece(Rational(nn * nn), 0);
        case 3:
            return piece(Rational(-6), 3) + piece(Rational(6 * (n - 1)), 2) +
                   piece(Rational(-(Integer(3) * nn * nn - 3 * nn + 1)), 1) +
                   piece(Rational(nn * nn * nn), 0);
    }
    throw std::domain_error("explicit_rhs: r out of 0..3");
}

/// Closed form of S_r^O(n) through shifted Stirling numbers:
/// 4^{-n} sum_{k=0..r} (-1)^k k! rS(r,k,n-k) 4^k C(2n+1,2k+1) C(2(n-k),n-k)
///        C(n,k)^{-1} (O_{n+1} - O_{k+1})
inline Rational odd_sum_stirling_rhs(int n, int r) {
    auto o = odd_harmonic_prefix(n + 1);
    Rational acc;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        Rational od = o[n + 1] - o[k + 1];
        if (od.is_zero()) continue;
        Integer num = factorial(k) * r_stirling2(r, k, n - k) * ipow(Integer(4), k) *
                      binomial(2 * n + 1, 2 * k + 1) * central_binomial(n - k);
        Rational term = Rational(num, binomial(n, k)) * od;
        acc += (k & 1) ? -term : term;
    }
    return acc / Rational(ipow(Integer(4), n));
}

/// sum_{k=1..n} 4^{-k}/(2k-1) k^r C(2k,k) (1 - O_{k-1})
inline Rational odd_inverse_lhs(int n, int r) {
    Rational acc;
    Rational w(1);
    Rational o_prev;  // O_{k-1}
    for (int k = 1; k <= n; ++k) {
        w *= Rational(2 * k - 1, 2 * k);
        if (k >= 2) o_prev += Rational(1, 2 * k - 3);
        Rational factor = Rational(1) - o_prev;
        if (factor.is_zero()) continue;
        acc += w / Rational(2 * k - 1) * Rational(ipow(Integer(k), r)) * factor;
    }
    return acc;
}

/// 4^{-n} C(2n,n) sum_{k=0..r} (-1)^k k! rS(r,k,n-k) C(n,k) 4^k C(2k,k)^{-1}
///        (O_n - O_k)
inline Rational odd_inverse_rhs(int n, int r) {
    auto o = odd_harmonic_prefix(n);
    Rational acc;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        Rational od = o[n] - o[k];
        if (od.is_zero()) continue;
        Rational term = Rational(factorial(k) * r_stirling2(r, k, n - k) *
                                     binomial(n, k) * ipow(Integer(4), k),
                                 central_binomial(k)) *
                        od;
        acc += (k & 1) ? -term : term;
    }
    return weight(n) * acc;
}

/// sum_{k=0..n} 4^k C(2(n-k),n-k) k^r O_{n-k}
inline Rational shift_odd_lhs(int n, int r) {
    auto o = odd_harmonic_prefix(n);
    Rational acc;
    for (int k = 0; k <= n; ++k) {
        if (o[n - k].is_zero()) continue;
        acc += Rational(ipow(Integer(4), k) * central_binomial(n - k) *
                        ipow(Integer(k), r)) *
               o[n - k];
    }
    return acc;
}

/// (2n+1) C(2n,n) sum_{k=0..r} 4^k/(2k+1) k! S(r,k) C(n,k) C(2k,k)^{-1}
///        (O_{n+1} - O_{k+1})
inline Rational shift_odd_rhs(int n, int r) {
    auto o = odd_harmonic_prefix(n + 1);
    Rational acc;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        Integer s2 = stirling2(r, k);
        if (s2 == 0) continue;
        Rational od = o[n + 1] - o[k + 1];
        if (od.is_zero()) continue;
        acc += Rational(ipow(Integer(4), k) * factorial(k) * s2 * binomial(n, k),
                        Integer(2 * k + 1) * central_binomial(k)) *
               od;
    }
    return Rational(Integer(2 * n + 1) * central_binomial(n)) * acc;
}

/// sum_{k=0..n-1} 4^k/(2(n-k)-1) C(2(n-k),n-k) k^r (1 - O_{n-k-1})
inline Rational shift_inv_lhs(int n, int r) {
    auto o = odd_harmonic_prefix(n);
    Rational acc;
    for (int k = 0; k <= n - 1; ++k) {
        Rational factor = Rational(1) - o[n - k - 1];
        if (factor.is_zero()) continue;
        acc += Rational(ipow(Integer(4), k) * central_binomial(n - k) *
                            ipow(Integer(k), r),
                        2 * (n - k) - 1) *
               factor;
    }
    return acc;
}

/// C(2n,n) sum_{k=0..r} 4^k C(2k,k)^{-1} k! S(r,k) C(n,k) (O_n - O_k)
inline Rational shift_inv_rhs(int n, int r) {
    auto o = odd_harmonic_prefix(n);
    Rational acc;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        Integer s2 = stirling2(r, k);
        if (s2 == 0) continue;
        Rational od = o[n] - o[k];
        if (od.is_zero()) continue;
        acc += Rational(ipow(Integer(4), k) * factorial(k) * s2 * binomial(n, k),
                        central_binomial(k)) *
               od;
    }
    return Rational(central_binomial(n)) * acc;
}

/// sum_{k=0..n} (-1)^k/(2k+1) C(n,k) 4^k C(2k,k)^{-1} k^r (O_{n+1} - O_{k+1})
inline Rational rev_odd_lhs(int n, int r) {
    auto o = odd_harmonic_prefix(n + 1);
    Rational acc;
    for (int k = 0; k <= n; ++k) {
        Rational od = o[n + 1] - o[k + 1];
        if (od.is_zero()) continue;
        Rational term = Rational(binomial(n, k) * ipow(Integer(4), k) *
                                     ipow(Integer(k), r),
                                 Integer(2 * k + 1) * central_binomial(k)) *
                        od;
        acc += (k & 1) ? -term : term;
    }
    return acc;
}

/// (2n+1)^{-1} C(2n,n)^{-1} sum_{k=0..r} (-1)^k k! S(r,k) 4^k C(2(n-k),n-k)
///        O_{n-k}
inline Rational rev_odd_rhs(int n, int r) {
    auto o = odd_harmonic_prefix(n);
    Rational acc;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        Integer s2 = stirling2(r, k);
        if (s2 == 0) continue;
        if (o[n - k].is_zero()) continue;
        Rational term =
            Rational(factorial(k) * s2 * ipow(Integer(4), k) * central_binomial(n - k)) *
            o[n - k];
        acc += (k & 1) ? -term : term;
    }
    return acc / Rational(Integer(2 * n + 1) * central_binomial(n));
}

/// sum_{k=0..n} (-1)^k C(n,k) 4^k C(2k,k)^{-1} k^r (O_n - O_k)
inline Rational rev_inv_lhs(int n, int r) {
    auto o = odd_harmonic_prefix(n);
    Rational acc;
    for (int k = 0; k <= n; ++k) {
        Rational od = o[n] - o[k];
        if (od.is_zero()) continue;
        Rational term = Rational(binomial(n, k) * ipow(Integer(4), k) *
                                     ipow(Integer(k), r),
                                 central_binomial(k)) *
                        od;
        acc += (k & 1) ? -term : term;
    }
    return acc;
}

/// C(2n,n)^{-1} sum_{k=0..r} (-1)^k/(2(n-k)-1) k! S(r,k) 4^k C(2(n-k),n-k)
///        (1 - O_{n-k-1}); the k = n term vanishes (its harmonic factor is
///        the zero gap) and is skipped rather than reading O_{-1}.
inline Rational rev_inv_rhs(int n, int r) {
    auto o = odd_harmonic_prefix(n);
    Rational acc;
    int kmax = std::min(r, n);
    for (int k = 0; k <= kmax; ++k) {
        if (n - k - 1 < 0) continue;
        Integer s2 = stirling2(r, k);
        if (s2 == 0) continue;
        Rational factor = Rational(1) - o[n - k - 1];
        if (factor.is_zero()) continue;
        Rational term = Rational(factorial(k) * s2 * ipow(Integer(4), k) *
                                     central_binomial(n - k),
                                 2 * (n - k) - 1) *
                        factor;
        acc += (k & 1) ? -term : term;
    }
    return acc / Rational(central_binomial(n));
}

}  // namespace detail

/// Full identity registry in fixed order. Every entry carries exact
/// evaluators of both displayed sides.
inline const std::vector<Identity>& list_identities() {
    using P = IdentityParams;
    static const std::vector<Identity> reg = [] {
        std::vector<Identity> v;
        auto add = [&v](Identity id) { v.push_back(std::move(id)); };

        add({"riordan-partial", "n >= 0",
             "sum_{k=0..n} 4^(-k) C(2k,k)/(1-2k) = 4^(-n) C(2n,n)",
             0, RSlot::fixed, 0, false,
             [](const P& p) {
                 Rational acc;
                 Rational w(1);
                 for (int k = 0; k <= p.n; ++k) {
                     if (k > 0) w *= Rational(2 * k - 1, 2 * k);
                     acc += w / Rational(1 - 2 * k);
                 }
                 return acc;
             },
             [](const P& p) { return weight(p.n); }});

        add({"dual-inverse", "n >= 0",
             "sum_{k=0..n} (-1)^k C(n,k) 4^k C(2k,k)^(-1) = 1/(1-2n)",
             0, RSlot::fixed, 0, false,
             [](const P& p) {
                 Rational acc;
                 for (int k = 0; k <= p.n; ++k) {
                     Rational term(binomial(p.n, k) * ipow(Integer(4), k),
                                   central_binomial(k));
                     acc += (k & 1) ? -term : term;
                 }
                 return acc;
             },
             [](const P& p) { return Rational(1, 1 - 2 * p.n); }});

        add({"s0-closed", "n >= 0",
             "sum_{k=0..n} 4^(-k) C(2k,k) = 4^(-n) (2n+1) C(2n,n)",
             0, RSlot::fixed, 0, false,
             [](const P& p) { return sum_brute(SumFamily::plain, 0, p.n); },
             [](const P& p) { return detail::closed_plain(0, p.n); }});

        for (int r = 1; r <= 3; ++r)
            add({"s-closed-r" + std::to_string(r), "n >= 0",
                 "sum_{k=0..n} 4^(-k) k^" + std::to_string(r) +
                     " C(2k,k) equals its printed closed form",
                 0, RSlot::fixed, r, false,
                 [](const P& p) { return sum_brute(SumFamily::plain, p.r, p.n); },
                 [](const P& p) { return detail::closed_plain(p.r, p.n); }});

        add({"s0O-closed", "n >= 0",
             "sum_{k=0..n} 4^(-k) C(2k,k) O_k = 4^(-n) C(2n,n) ((2n+1)O_n - 2n)",
             0, RSlot::fixed, 0, false,
             [](const P& p) { return sum_brute(SumFamily::odd, 0, p.n); },
             [](const P& p) { return detail::closed_odd_on(0, p.n); }});

        for (int r = 1; r <= 3; ++r)
            add({"sO-closed-r" + std::to_string(r), "n >= 0",
                 "sum_{k=0..n} 4^(-k) k^" + std::to_string(r) +
                     " C(2k,k) O_k equals its printed O_n closed form",
                 0, RSlot::fixed, r, false,
                 [](const P& p) { return sum_brute(SumFamily::odd, p.r, p.n); },
                 [](const P& p) { return detail::closed_odd_on(p.r, p.n); }});

        for (int r = 1; r <= 3; ++r)
            add({"sO-mod-r" + std::to_string(r), "n >= 0",
                 "sum_{k=0..n} 4^(-k) k^" + std::to_string(r) +
                     " C(2k,k) O_k equals its printed O_{n+1} closed form",
                 0, RSlot::fixed, r, false,
                 [](const P& p) { return sum_brute(SumFamily::odd, p.r, p.n); },
                 [](const P& p) { return detail::closed_odd_on1(p.r, p.n); }});

        add({"s0H-closed", "n >= 0",
             "sum_{k=0..n} 4^(-k) C(2k,k) H_k = (2n+1) 4^(-n) C(2n,n) (H_n - 2) + 2",
             0, RSlot::fixed, 0, false,
             [](const P& p) { return sum_brute(SumFamily::harmonic, 0, p.n); },
             [](const P& p) { return detail::closed_h(0, p.n); }});

        for (int r = 1; r <= 3; ++r)
            add({"sH-closed-r" + std::to_string(r), "n >= 0",
                 "sum_{k=0..n} 4^(-k) k^" + std::to_string(r) +
                     " C(2k,k) H_k equals its printed closed form",
                 0, RSlot::fixed, r, false,
                 [](const P& p) { return sum_brute(SumFamily::harmonic, p.r, p.n); },
                 [](const P& p) { return detail::closed_h(p.r, p.n); }});

        add({"s02H-closed", "n >= 0",
             "sum_{k=0..n} 4^(-k) C(2k,k) H_{2k} = 4^(-n) C(2n,n) ((2n+1)H_{2n} - (4n+1)) + 1",
             0, RSlot::fixed, 0, false,
             [](const P& p) { return sum_brute(SumFamily::even_harmonic, 0, p.n); },
             [](const P& p) { return detail::closed_2h(0, p.n); }});

        add({"s2H-r1", "n >= 0",
             "sum_{k=0..n} 4^(-k) k C(2k,k) H_{2k} equals its printed closed form",
             0, RSlot::fixed, 1, false,
             [](const P& p) { return sum_brute(SumFamily::even_harmonic, 1, p.n); },
             [](const P& p) { return detail::closed_2h(1, p.n); }});

        add({"general-id", "n >= 0; r >= 0; t non-integer",
             "sum_{k=0..n} (-1)^k k^r C(t,k)(H_t - H_{t-k}) = "
             "sum_{k=0..r} (-1)^k k! rS(r;k;n-k) C(n-t;n-k)(H_{k-t} - H_{n-t})",
             0, RSlot::free, 0, true,
             [](const P& p) { return detail::theorem_lhs(p.n, p.r, *p.t); },
             [](const P& p) { return detail::theorem_rhs(p.n, p.r, *p.t); }});

        for (int r = 0; r <= 3; ++r)
            add({"id-explicit-r" + std::to_string(r), "n >= 0; t non-integer",
                 "explicit expansion of the general identity at r = " +
                     std::to_string(r),
                 0, RSlot::fixed, r, true,
                 [](const P& p) { return detail::theorem_lhs(p.n, p.r, *p.t); },
                 [](const P& p) { return detail::explicit_rhs(p.n, p.r, *p.t); }});

        add({"sO-stirling", "n >= 0; r >= 0",
             "sum_{k=0..n} 4^(-k) k^r C(2k,k) O_k as a shifted-Stirling closed form",
             0, RSlot::free, 0, false,
             [](const P& p) { return sum_brute(SumFamily::odd, p.r, p.n); },
             [](const P& p) { return detail::odd_sum_stirling_rhs(p.n, p.r); }});

        add({"odd-inverse-general", "n >= 0; r >= 0",
             "sum_{k=1..n} 4^(-k)/(2k-1) k^r C(2k,k)(1 - O_{k-1}) as a "
             "shifted-Stirling closed form",
             0, RSlot::free, 0, false,
             [](const P& p) { return detail::odd_inverse_lhs(p.n, p.r); },
             [](const P& p) { return detail::odd_inverse_rhs(p.n, p.r); }});

        add({"odd-inverse-r0", "n >= 0",
             "sum_{k=1..n} 4^(-k)/(2k-1) C(2k,k)(1 - O_{k-1}) = 4^(-n) C(2n,n) O_n",
             0, RSlot::fixed, 0, false,
             [](const P& p) { return detail::odd_inverse_lhs(p.n, 0); },
             [](const P& p) { return weight(p.n) * odd_harmonic(p.n); }});

        add({"ohn-complement", "n >= 0",
             "sum_{k=1..n} 4^(-k) C(2k,k) O_{k-1}/(2k-1) = 1 - 4^(-n) C(2n,n)(O_n + 1)",
             0, RSlot::fixed, 0, false,
             [](const P& p) {
                 Rational acc;
                 Rational w(1);
                 Rational o_prev;
                 for (int k = 1; k <= p.n; ++k) {
                     w *= Rational(2 * k - 1, 2 * k);
                     if (k >= 2) o_prev += Rational(1, 2 * k - 3);
                     if (o_prev.is_zero()) continue;
                     acc += w * o_prev / Rational(2 * k - 1);
                 }
                 return acc;
             },
             [](const P& p) {
                 return Rational(1) - weight(p.n) * (odd_harmonic(p.n) + Rational(1));
             }});

        add({"zha-general", "n >= 0; r >= 0; t non-integer",
             "sum_{k=0..n} (-1)^k C(t;n-k) k^r (H_t - H_{t-n+k}) = "
             "(-1)^n sum_{k=0..r} k! S(r;k) C(n-t;n-k)(H_{k-t} - H_{n-t})",
             0, RSlot::free, 0, true,
             [](const P& p) { return detail::zha_lhs(p.n, p.r, *p.t); },
             [](const P& p) { return detail::zha_rhs(p.n, p.r, *p.t); }});

        add({"zha-neg-half", "n >= 0; r >= 0",
             "sum_{k=0..n} 4^k C(2(n-k);n-k) k^r O_{n-k} as a Stirling closed form",
             0, RSlot::free, 0, false,
             [](const P& p) { return detail::shift_odd_lhs(p.n, p.r); },
             [](const P& p) { return detail::shift_odd_rhs(p.n, p.r); }});

        add({"zha-pos-half", "n >= 1; r >= 0",
             "sum_{k=0..n-1} 4^k/(2(n-k)-1) C(2(n-k);n-k) k^r (1 - O_{n-k-1}) "
             "as a Stirling closed form",
             1, RSlot::free, 0, false,
             [](const P& p) { return detail::shift_inv_lhs(p.n, p.r); },
             [](const P& p) { return detail::shift_inv_rhs(p.n, p.r); }});

        add({"z15-general", "n >= 0; r >= 0; t non-integer",
             "sum_{k=0..n} (-1)^(n-k) C(n-t;n-k) k^r (H_{k-t} - H_{n-t}) = "
             "sum_{k=0..r} k! S(r;k) C(t;n-k)(H_t - H_{t-n+k})",
             0, RSlot::free, 0, true,
             [](const P& p) { return detail::z15_lhs(p.n, p.r, *p.t); },
             [](const P& p) { return detail::z15_rhs(p.n, p.r, *p.t); }});

        add({"z15-neg-half", "n >= 0; r >= 0",
             "sum_{k=0..n} (-1)^k/(2k+1) C(n;k) 4^k C(2k;k)^(-1) k^r "
             "(O_{n+1} - O_{k+1}) as a Stirling closed form",
             0, RSlot::free, 0, false,
             [](const P& p) { return detail::rev_odd_lhs(p.n, p.r); },
             [](const P& p) { return detail::rev_odd_rhs(p.n, p.r); }});

        add({"z15-pos-half", "n >= 0; r >= 0",
             "sum_{k=0..n} (-1)^k C(n;k) 4^k C(2k;k)^(-1) k^r (O_n - O_k) "
             "as a Stirling closed form",
             0, RSlot::free, 0, false,
             [](const P& p) { return detail::rev_inv_lhs(p.n, p.r); },
             [](const P& p) { return detail::rev_inv_rhs(p.n, p.r); }});

        add({"k194", "n >= 0",
             "sum_{k=0..n} (-1)^k/(2k+1) C(n;k) 4^k C(2k;k)^(-1) O_{k+1} = 1/(2n+1)^2",
             0, RSlot::fixed, 0, false,
             [](const P& p) {
                 auto o = odd_harmonic_prefix(p.n + 1);
                 Rational acc;
                 for (int k = 0; k <= p.n; ++k) {
                     Rational term(binomial(p.n, k) * ipow(Integer(4), k),
                                   Integer(2 * k + 1) * central_binomial(k));
                     term *= o[k + 1];
                     acc += (k & 1) ? -term : term;
                 }
                 return acc;
             },
             [](const P& p) {
                 return Rational(1, Integer(2 * p.n + 1) * (2 * p.n + 1));
             }});

        add({"k194-aux", "n >= 0",
             "sum_{k=0..n} (-1)^k 4^k/(2k+1) C(n;k) C(2k;k)^(-1) = 1/(2n+1)",
             0, RSlot::fixed, 0, false,
             [](const P& p) {
                 Rational acc;
                 for (int k = 0; k <= p.n; ++k) {
                     Rational term(binomial(p.n, k) * ipow(Integer(4), k),
                                   Integer(2 * k + 1) * central_binomial(k));
                     acc += (k & 1) ? -term : term;
                 }
                 return acc;
             },
             [](const P& p) { return Rational(1, 2 * p.n + 1); }});

        add({"inverse-square", "n >= 0",
             "sum_{k=0..n} (-1)^k C(n;k)/(2k+1)^2 = 4^n C(2n;n)^(-1) O_{n+1}/(2n+1)",
             0, RSlot::fixed, 0, false,
             [](const P& p) {
                 Rational acc;
                 for (int k = 0; k <= p.n; ++k) {
                     Rational term(binomial(p.n, k),
                                   Integer(2 * k + 1) * (2 * k + 1));
                     acc += (k & 1) ? -term : term;
                 }
                 return acc;
             },
             [](const P& p) {
                 return Rational(ipow(Integer(4), p.n),
                                 Integer(2 * p.n + 1) * central_binomial(p.n)) *
                        odd_harmonic(p.n + 1);
             }});

        add({"gbx", "n >= 0",
             "sum_{k=0..n} (-1)^k C(n;k) 4^k C(2k;k)^(-1) O_k = -2n/(2n-1)^2",
             0, RSlot::fixed, 0, false,
             [](const P& p) {
                 auto o = odd_harmonic_prefix(p.n);
                 Rational acc;
                 for (int k = 0; k <= p.n; ++k) {
                     if (o[k].is_zero()) continue;
                     Rational term(binomial(p.n, k) * ipow(Integer(4), k),
                                   central_binomial(k));
                     term *= o[k];
                     acc += (k & 1) ? -term : term;
                 }
                 return acc;
             },
             [](const P& p) {
                 return Rational(Integer(-2) * p.n,
                                 Integer(2 * p.n - 1) * (2 * p.n - 1));
             }});

        add({"binom-transform-final", "n >= 0",
             "sum_{k=0..n} (-1)^k C(n;k) 2k/(2k-1)^2 = -4^n C(2n;n)^(-1) O_n",
             0, RSlot::fixed, 0, false,
             [](const P& p) {
                 Rational acc;
                 for (int k = 0; k <= p.n; ++k) {
                     if (k == 0) continue;
                     Rational term(binomial(p.n, k) * 2 * k,
                                   Integer(2 * k - 1) * (2 * k - 1));
                     acc += (k & 1) ? -term : term;
                 }
                 return acc;
             },
             [](const P& p) {
                 return -Rational(ipow(Integer(4), p.n), central_binomial(p.n)) *
                        odd_harmonic(p.n);
             }});

        add({"gould-base", "n >= 0; r selects the x sample (0..4); t non-integer",
             "sum_{k=0..n} (-1)^k C(t;k) x^k = "
             "sum_{k=0..n} C(n-t;k) (1-x)^(n-k) x^k at sampled rational x",
             0, RSlot::sample_index, 0, true,
             [](const P& p) {
                 const Rational& x = gould_x_samples()[p.r];
                 Rational acc;
                 Rational ct(1);
                 Rational xp(1);
                 for (int k = 0; k <= p.n; ++k) {
                     if (k > 0) {
                         ct *= (*p.t - Rational(k - 1)) / Rational(k);
                         xp *= x;
                     }
                     Rational term = ct * xp;
                     acc += (k & 1) ? -term : term;
                 }
                 return acc;
             },
             [](const P& p) {
                 const Rational& x = gould_x_samples()[p.r];
                 Rational one_minus_x = Rational(1) - x;
                 Rational nt = Rational(p.n) - *p.t;
                 Rational acc;
                 Rational cnt(1);
                 Rational xp(1);
                 for (int k = 0; k <= p.n; ++k) {
                     if (k > 0) {
                         cnt *= (nt - Rational(k - 1)) / Rational(k);
                         xp *= x;
                     }
                     acc += cnt * pow(one_minus_x, p.n - k) * xp;
                 }
                 return acc;
             }});

        return v;
    }();
    return reg;
}

inline const Identity& find_identity(const std::string& key) {
    for (const auto& id : list_identities())
        if (id.key == key)
            return id;
    throw std::domain_error("unknown identity key '" + key + "'");
}

/// Domain validation shared by evaluate_side / check_identity / sweep.
inline void validate_params(const Identity& id, const IdentityParams& p) {
    if (p.n < id.n_min)
        throw std::domain_error(id.key + ": n must be >= " + std::to_string(id.n_min));
    switch (id.r_slot) {
        case RSlot::fixed:
            if (p.r != id.r_fixed)
                throw std::domain_error(id.key + ": r is fixed at " +
                                        std::to_string(id.r_fixed));
            break;
        case RSlot::free:
            if (p.r < 0)
                throw std::domain_error(id.key + ": r must be >= 0");
            break;
        case RSlot::sample_index:
            if (p.r < 0 || p.r >= static_cast<int>(gould_x_samples().size()))
                throw std::domain_error(id.key + ": r selects an x sample in 0..4");
            break;
    }
    if (id.uses_t) {
        if (!p.t)
            throw std::domain_error(id.key + ": requires parameter t");
        if (p.t->is_integer())
            throw std::domain_error(id.key + ": t must be a non-integer rational");
    }
}

inline Rational evaluate_side(const std::string& key, Side side, const IdentityParams& p) {
    const Identity& id = find_identity(key);
    validate_params(id, p);
    return side == Side::lhs ? id.lhs(p) : id.rhs(p);
}

inline VerificationReport check_identity(const std::string& key, const IdentityParams& p) {
    const Identity& id = find_identity(key);
    validate_params(id, p);
    VerificationReport rep;
    rep.key = key;
    rep.params = p;
    rep.lhs = id.lhs(p);
    rep.rhs = id.rhs(p);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

/// Grid for a sweep. r bounds apply only when the identity's r slot is not
/// pinned by the key; t values apply only to identities that take t.
struct SweepGrid {
    int n_min = 0;
    int n_max = 30;
    int r_min = 0;
    int r_max = 4;
    std::vector<Rational> t_values;
};

/// The t defaults keep denominators small so full sweeps stay fast.
inline const std::vector<Rational>& default_t_samples() {
    static const std::vector<Rational> ts = {Rational(1, 3), Rational(-1, 2),
                                             Rational(1, 2), Rational(7, 2),
                                             Rational(-5, 3)};
    return ts;
}

inline SweepGrid default_grid(const Identity& id, int n_max = 30, int r_max = 4) {
    SweepGrid g;
    g.n_min = id.n_min;
    g.n_max = std::max(id.n_min, n_max);
    switch (id.r_slot) {
        case RSlot::fixed:
            g.r_min = g.r_max = id.r_fixed;
            break;
        case RSlot::free:
            g.r_min = 0;
            g.r_max = std::max(0, r_max);
            break;
        case RSlot::sample_index:
            g.r_min = 0;
            g.r_max = static_cast<int>(gould_x_samples().size()) - 1;
            break;
    }
    if (id.uses_t)
        g.t_values = default_t_samples();
    return g;
}

namespace detail {

struct GridAxes {
    int n_lo, n_hi, r_lo, r_hi;
    std::vector<std::optional<Rational>> ts;
};

inline GridAxes grid_axes(const Identity& id, const SweepGrid& grid) {
    GridAxes a;
    a.n_lo = std::max(grid.n_min, id.n_min);
    a.n_hi = grid.n_max;
    a.r_lo = grid.r_min;
    a.r_hi = grid.r_max;
    if (id.r_slot == RSlot::fixed)
        a.r_lo = a.r_hi = id.r_fixed;
    if (id.r_slot == RSlot::sample_index) {
        a.r_lo = std::max(a.r_lo, 0);
        a.r_hi = std::min(a.r_hi, static_cast<int>(gould_x_samples().size()) - 1);
    }
    if (id.uses_t) {
        const auto& src = grid.t_values.empty() ? default_t_samples() : grid.t_values;
        for (const auto& t : src)
            a.ts.emplace_back(t);
    } else {
        a.ts.emplace_back(std::nullopt);
    }
    return a;
}

}  // namespace detail

/// Checks every grid point in lexicographic (n, r, t) order, t iterating in
/// the listed order. Failures are reported, never thrown.
inline std::vector<VerificationReport> sweep(const std::string& key, const SweepGrid& grid) {
    const Identity& id = find_identity(key);
    std::vector<VerificationReport> reports;
    detail::GridAxes a = detail::grid_axes(id, grid);
    for (int n = a.n_lo; n <= a.n_hi; ++n)
        for (int r = a.r_lo; r <= a.r_hi; ++r)
            for (const auto& t : a.ts) {
                IdentityParams p{n, r, t};
                reports.push_back(check_identity(key, p));
            }
    return reports;
}

inline std::vector<VerificationReport> sweep(const std::string& key) {
    return sweep(key, default_grid(find_identity(key)));
}

}  // namespace cbsum
