// Acceptance suite: one criterion per section, one PASS/FAIL line each, all
// comparisons at exact rational equality (tolerance zero). Exits nonzero when
// any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <string>

#include "cbsum/cbsum.hpp"

#ifndef CBSUM_CLI_PATH
#error "CBSUM_CLI_PATH must point at the built cbsum binary"
#endif

namespace {

using namespace cbsum;
using Clock = std::chrono::steady_clock;

int g_failed = 0;

struct Criterion {
    long long points = 0;
    long long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++points;
        if (!ok) {
            ++failures;
            if (first_failure.empty())
                first_failure = what;
        }
    }
};

void report(int index, const std::string& name, const Criterion& c, double seconds,
            double budget_seconds) {
    bool ok = c.failures == 0 && (budget_seconds <= 0 || seconds < budget_seconds);
    if (!ok)
        ++g_failed;
    std::printf("%s  criterion %d: %s (%lld points, %lld failures, %.2fs%s)\n",
                ok ? "PASS" : "FAIL", index, name.c_str(), c.points, c.failures, seconds,
                budget_seconds > 0 ? (", budget " + std::to_string((int)budget_seconds) + "s").c_str()
                                   : "");
    if (c.failures > 0)
        std::printf("      first failure: %s\n", c.first_failure.c_str());
}

std::string at(int n, int r) {
    return "n=" + std::to_string(n) + " r=" + std::to_string(r);
}

// 1. Recursive evaluators equal brute summation for every family,
//    r in 0..6, n in 0..50.
void criterion_oracle_equivalence() {
    auto start = Clock::now();
    Criterion c;
    const SumFamily fams[] = {SumFamily::plain, SumFamily::odd, SumFamily::harmonic,
                              SumFamily::even_harmonic};
    for (SumFamily fam : fams)
        for (int r = 0; r <= 6; ++r)
            for (int n = 0; n <= 50; ++n) {
                SumQuery q{fam, r, n, SumMethod::recursive};
                c.expect(evaluate(q) == sum_brute(q), family_name(fam) + " " + at(n, r));
            }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(1, "oracle equivalence", c, secs, 10.0);
}

// 2. Every printed closed form (including both odd-family shapes)
//    reproduces the brute sum for n in 0..50.
void criterion_closed_forms() {
    auto start = Clock::now();
    Criterion c;
    for (int n = 0; n <= 50; ++n) {
        for (int r = 0; r <= 3; ++r) {
            c.expect(detail::closed_plain(r, n) == sum_brute(SumFamily::plain, r, n),
                     "plain " + at(n, r));
            c.expect(detail::closed_odd_on(r, n) == sum_brute(SumFamily::odd, r, n),
                     "odd/O_n " + at(n, r));
            c.expect(detail::closed_h(r, n) == sum_brute(SumFamily::harmonic, r, n),
                     "harmonic " + at(n, r));
        }
        for (int r = 1; r <= 3; ++r)
            c.expect(detail::closed_odd_on1(r, n) == sum_brute(SumFamily::odd, r, n),
                     "odd/O_{n+1} " + at(n, r));
        for (int r = 0; r <= 1; ++r)
            c.expect(detail::closed_2h(r, n) == sum_brute(SumFamily::even_harmonic, r, n),
                     "even-harmonic " + at(n, r));
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(2, "closed-form reproduction", c, secs, 5.0);
}

// 3. The general-parameter identity over the full declared grid.
void criterion_general_identity_grid() {
    auto start = Clock::now();
    Criterion c;
    const Rational ts[] = {Rational(1, 3), Rational(-1, 2), Rational(1, 2),
                           Rational(7, 2), Rational(-5, 3)};
    for (int n = 0; n <= 15; ++n)
        for (int r = 0; r <= 4; ++r)
            for (const auto& t : ts) {
                auto rep = check_identity("general-id", {n, r, t});
                c.expect(rep.equal, at(n, r) + " t=" + t.to_string());
            }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(3, "general identity grid", c, secs, 10.0);
}

// 4. Alternating power sums against both Stirling triangles.
void criterion_power_sum_lemma() {
    auto start = Clock::now();
    Criterion c;
    StirlingTable plain_table(12);
    for (int k = 0; k <= 12; ++k)
        for (int r = 0; r <= 12; ++r) {
            Integer expect = factorial(k) * plain_table.at(r, k);
            if (k & 1) expect = -expect;
            c.expect(alt_power_sum(k, r, 0) == expect, "zero-shift k=" + std::to_string(k) +
                                                           " r=" + std::to_string(r));
        }
    for (int v = 0; v <= 6; ++v) {
        RStirlingTable table(v, 10);
        for (int k = 0; k <= 10; ++k)
            for (int r = 0; r <= 10; ++r) {
                Integer expect = factorial(k) * table.at(r, k);
                if (k & 1) expect = -expect;
                bool ok = alt_power_sum(k, r, v) == expect &&
                          r_stirling2(r, k, v) == table.at(r, k);
                c.expect(ok, "shift v=" + std::to_string(v) + " k=" + std::to_string(k) +
                                 " r=" + std::to_string(r));
            }
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(4, "alternating power sum lemma", c, secs, 0);
}

// 5. Every registry identity over its full declared sweep; the two pure
//    reciprocal-square shapes checked against their printed right sides.
void criterion_registry_sweeps() {
    auto start = Clock::now();
    Criterion c;
    for (const auto& id : list_identities()) {
        auto reports = sweep(id.key, default_grid(id, 30, 4));
        for (const auto& rep : reports)
            c.expect(rep.equal, id.key + " " + at(rep.params.n, rep.params.r));
    }
    for (int n = 1; n <= 30; ++n) {
        auto k = check_identity("k194", {n, 0, {}});
        c.expect(k.equal && k.rhs == Rational(1, Integer(2 * n + 1) * (2 * n + 1)),
                 "k194 n=" + std::to_string(n));
        auto g = check_identity("gbx", {n, 0, {}});
        c.expect(g.equal && g.rhs == Rational(Integer(-2) * n,
                                              Integer(2 * n - 1) * (2 * n - 1)),
                 "gbx n=" + std::to_string(n));
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(5, "registry identity sweeps", c, secs, 0);
}

// 6. The polynomial family: degrees, the factored form of S_r(n), and the
//    three printed coefficient lists.
void criterion_polynomial_family() {
    auto start = Clock::now();
    Criterion c;
    for (int r = 1; r <= 8; ++r)
        c.expect(p_poly(r).degree() == r - 1, "degree r=" + std::to_string(r));
    for (int r = 1; r <= 6; ++r) {
        Polynomial pr = p_poly(r);
        for (int n = 1; n <= 40; ++n)
            c.expect(s_plain(r, n) == Rational(n) * Rational(2 * n + 1) * weight(n) *
                                          pr.evaluate(Rational(n)),
                     "factored form " + at(n, r));
    }
    c.expect(p_poly(1) == Polynomial({Rational(1, 3)}), "P_1");
    c.expect(p_poly(2) == Polynomial({Rational(2, 15), Rational(1, 5)}), "P_2");
    c.expect(p_poly(3) == Polynomial({Rational(2, 105), Rational(6, 35), Rational(1, 7)}),
             "P_3");
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(6, "polynomial family", c, secs, 0);
}

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    CliRun res;
    std::string cmd = std::string(CBSUM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return res;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        res.output.append(buf.data(), got);
    int status = pclose(pipe);
    if (WIFEXITED(status))
        res.exit_code = WEXITSTATUS(status);
    return res;
}

// 7. CLI contract: a clean build verifies green; a deliberately perturbed
//    closed-form coefficient flips the exit code and is named in the output.
void criterion_cli_contract() {
    auto start = Clock::now();
    Criterion c;
    CliRun clean = run_cli("verify --suite all --n-max 20 --r-max 4");
    c.expect(clean.exit_code == 0, "verify --suite all exit=" +
                                       std::to_string(clean.exit_code));
    c.expect(clean.output.find("result=PASS") != std::string::npos,
             "clean verify output lacks result=PASS");
    CliRun mutated = run_cli("verify --suite identities --n-max 10 --perturb s-closed-r1");
    c.expect(mutated.exit_code == 1, "perturbed verify exit=" +
                                         std::to_string(mutated.exit_code));
    c.expect(mutated.output.find("s-closed-r1: FAIL") != std::string::npos,
             "perturbed verify does not name the failing key");
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(7, "cli verification contract", c, secs, 0);
}

}  // namespace

int main() {
    criterion_oracle_equivalence();
    criterion_closed_forms();
    criterion_general_identity_grid();
    criterion_power_sum_lemma();
    criterion_registry_sweeps();
    criterion_polynomial_family();
    criterion_cli_contract();
    if (g_failed == 0) {
        std::printf("acceptance: all 7 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failed);
    return 1;
}
