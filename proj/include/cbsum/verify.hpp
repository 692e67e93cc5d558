#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbsum/identities.hpp"
#include "cbsum/stirling.hpp"
#include "cbsum/sums.hpp"

namespace cbsum {

/// One named exhaustive check: how many grid points ran and how many failed,
/// with the first few failures kept for reporting.
struct CheckResult {
    std::string name;
    long long points = 0;
    long long failures = 0;
    std::vector<VerificationReport> failure_details;  // capped

    static constexpr int kMaxDetails = 16;

    void record(const VerificationReport& rep) {
        ++points;
        if (!rep.equal) {
            ++failures;
            if (static_cast<int>(failure_details.size()) < kMaxDetails)
                failure_details.push_back(rep);
        }
    }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    long long points() const {
        long long p = 0;
        for (const auto& c : checks) p += c.points;
        return p;
    }
    long long failures() const {
        long long f = 0;
        for (const auto& c : checks) f += c.failures;
        return f;
    }
    bool ok() const { return failures() == 0; }
};

struct SuiteOptions {
    int n_max = 30;
    int r_max = 4;
    std::optional<Rational> t_override;  // replaces the t sample set
    std::string perturb_key;             // fault injection for harness self-tests
};

namespace detail {

inline VerificationReport make_report(std::string name, IdentityParams p, Rational lhs,
                                      Rational rhs) {
    VerificationReport rep;
    rep.key = std::move(name);
    rep.params = std::move(p);
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace detail

/// Sweeps every registry identity over its declared grid. When
/// opts.perturb_key names an entry, that entry's right side is deliberately
/// shifted by 1 so the harness can prove it detects a wrong coefficient.
inline SuiteReport run_identities_suite(const SuiteOptions& opts = {}) {
    SuiteReport report;
    report.suite = "identities";
    bool perturb_found = opts.perturb_key.empty();
    for (const auto& id : list_identities()) {
        SweepGrid grid = default_grid(id, opts.n_max, opts.r_max);
        if (opts.t_override)
            grid.t_values = {*opts.t_override};
        bool perturb = id.key == opts.perturb_key;
        perturb_found = perturb_found || perturb;
        CheckResult check;
        check.name = id.key;
        detail::GridAxes axes = detail::grid_axes(id, grid);
        for (int n = axes.n_lo; n <= axes.n_hi; ++n)
            for (int r = axes.r_lo; r <= axes.r_hi; ++r)
                for (const auto& t : axes.ts) {
                    IdentityParams p{n, r, t};
                    Rational lhs = id.lhs(p);
                    Rational rhs = id.rhs(p);
                    if (perturb)
                        rhs += Rational(1);
                    check.record(detail::make_report(id.key, p, lhs, rhs));
                }
        report.checks.push_back(std::move(check));
    }
    if (!perturb_found)
        throw std::domain_error("unknown identity key '" + opts.perturb_key + "'");
    return report;
}

/// Recursive-vs-brute oracle equivalence, closed forms, the 2H
/// decomposition, and the polynomial family.
inline SuiteReport run_sums_suite(const SuiteOptions& opts = {}) {
    SuiteReport report;
    report.suite = "sums";
    const SumFamily families[] = {SumFamily::plain, SumFamily::odd, SumFamily::harmonic,
                                  SumFamily::even_harmonic};

    for (SumFamily fam : families) {
        CheckResult check;
        check.name = "sums/recursive-vs-brute/" + family_name(fam);
        for (int r = 0; r <= opts.r_max; ++r)
            for (int n = 0; n <= opts.n_max; ++n) {
                SumQuery q{fam, r, n, SumMethod::recursive};
                check.record(detail::make_report(check.name, IdentityParams{n, r, {}},
                                                 evaluate(q), sum_brute(q)));
            }
        report.checks.push_back(std::move(check));
    }

    for (SumFamily fam : families) {
        CheckResult check;
        check.name = "sums/closed-vs-brute/" + family_name(fam);
        int r_hi = fam == SumFamily::even_harmonic ? 1 : 3;
        for (int r = 0; r <= r_hi; ++r)
            for (int n = 0; n <= opts.n_max; ++n)
                check.record(detail::make_report(check.name, IdentityParams{n, r, {}},
                                                 closed_form(fam, r, n),
                                                 sum_brute(fam, r, n)));
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check;
        check.name = "sums/2h-decomposition";
        for (int r = 0; r <= opts.r_max; ++r)
            for (int n = 0; n <= opts.n_max; ++n)
                check.record(detail::make_report(
                    check.name, IdentityParams{n, r, {}}, s_2h(r, n),
                    s_odd(r, n) + s_h(r, n) / Rational(2)));
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check;
        check.name = "sums/poly-form";
        int r_hi = std::max(1, opts.r_max);
        for (int r = 1; r <= r_hi; ++r) {
            Polynomial pr = p_poly(r);
            for (int n = 1; n <= opts.n_max; ++n)
                check.record(detail::make_report(
                    check.name, IdentityParams{n, r, {}}, s_plain(r, n),
                    Rational(n) * Rational(2 * n + 1) * weight(n) *
                        pr.evaluate(Rational(n))));
        }
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check;
        check.name = "sums/poly-degree";
        for (int r = 1; r <= 8; ++r) {
            Rational got(p_poly(r).degree());
            check.record(detail::make_report(check.name, IdentityParams{0, r, {}}, got,
                                             Rational(r - 1)));
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

/// Alternating power sums against both Stirling triangles, the zero-shift
/// reduction, and the falling-factorial expansion. The triangle ranges are
/// the declared ones and do not scale with the bounds options.
inline SuiteReport run_stirling_suite(const SuiteOptions& = {}) {
    SuiteReport report;
    report.suite = "stirling";

    {
        CheckResult check;
        check.name = "stirling/power-sum-vs-triangle";
        StirlingTable table(12);
        for (int k = 0; k <= 12; ++k)
            for (int r = 0; r <= 12; ++r) {
                Integer expect = factorial(k) * table.at(r, k);
                if (k & 1) expect = -expect;
                check.record(detail::make_report(check.name, IdentityParams{r, k, {}},
                                                 Rational(alt_power_sum(k, r, 0)),
                                                 Rational(expect)));
            }
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check;
        check.name = "stirling/alt-sum-vs-shift-recurrence";
        for (int v = 0; v <= 6; ++v) {
            RStirlingTable table(v, 10);
            for (int n = 0; n <= 10; ++n)
                for (int k = 0; k <= 10; ++k)
                    check.record(detail::make_report(check.name,
                                                     IdentityParams{n, k, {}},
                                                     Rational(r_stirling2(n, k, v)),
                                                     Rational(table.at(n, k))));
        }
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check;
        check.name = "stirling/zero-shift-reduction";
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= 12; ++k)
                check.record(detail::make_report(check.name, IdentityParams{n, k, {}},
                                                 Rational(r_stirling2(n, k, 0)),
                                                 Rational(stirling2(n, k))));
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check;
        check.name = "stirling/falling-factorial";
        for (int n = 0; n <= 10; ++n)
            for (int x = -5; x <= 5; ++x) {
                Integer rhs = 0;
                for (int k = 0; k <= n; ++k) {
                    Integer ff = 1;  // (x)_k
                    for (int i = 0; i < k; ++i)
                        ff *= x - i;
                    rhs += stirling2(n, k) * ff;
                }
                check.record(detail::make_report(check.name, IdentityParams{n, x, {}},
                                                 Rational(ipow(Integer(x), n)),
                                                 Rational(rhs)));
            }
        report.checks.push_back(std::move(check));
    }

    return report;
}

/// Dispatch by suite name; "all" concatenates every suite.
inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {}) {
    if (name == "identities")
        return run_identities_suite(opts);
    if (name == "sums")
        return run_sums_suite(opts);
    if (name == "stirling")
        return run_stirling_suite(opts);
    if (name == "all") {
        SuiteReport all;
        all.suite = "all";
        for (const auto& part : {run_identities_suite(opts), run_sums_suite(opts),
                                 run_stirling_suite(opts)})
            for (const auto& c : part.checks)
                all.checks.push_back(c);
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace cbsum
