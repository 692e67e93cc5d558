// Command-line front end: evaluate the sum families, emit tables, print the
// P_r polynomials, list the identity registry and run verification sweeps.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbsum/cbsum.hpp"

namespace {

using cbsum::Integer;
using cbsum::Rational;
using nlohmann::json;

// Exact truncated decimal expansion, marked as approximate by the caller.
std::string decimal_approx(const Rational& q, int digits = 12) {
    Integer num = boost::multiprecision::abs(q.numerator());
    const Integer& den = q.denominator();
    Integer whole = num / den;
    Integer rem = num % den;
    std::string s = q.sign() < 0 ? "-" : "";
    s += whole.str();
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        Integer digit = rem / den;
        frac += char('0' + digit.convert_to<int>());
        rem %= den;
    }
    while (!frac.empty() && frac.back() == '0')
        frac.pop_back();
    if (!frac.empty())
        s += "." + frac;
    return s;
}

struct EvalArgs {
    std::string family = "plain";
    int r = 0;
    int n = 0;
    std::string method = "recursive";
    std::string format = "plain";
    bool decimal = false;
};

int cmd_eval(const EvalArgs& a) {
    cbsum::SumQuery q;
    q.family = cbsum::parse_family(a.family);
    q.method = cbsum::parse_method(a.method);
    q.r = a.r;
    q.n = a.n;
    Rational value = cbsum::evaluate(q);
    if (a.format == "json") {
        json row{{"n", q.n}, {"value", value.to_string()}};
        if (a.decimal)
            row["decimal"] = decimal_approx(value);
        std::cout << row.dump() << "\n";
    } else if (a.format == "csv") {
        std::cout << "n,value" << (a.decimal ? ",decimal" : "") << "\n";
        std::cout << q.n << "," << value;
        if (a.decimal)
            std::cout << "," << decimal_approx(value);
        std::cout << "\n";
    } else {
        std::cout << value;
        if (a.decimal)
            std::cout << " ~ " << decimal_approx(value);
        std::cout << "\n";
    }
    return 0;
}

struct TableArgs {
    std::string family = "plain";
    int r = 0;
    int n_max = 0;
    std::string method = "recursive";
    std::string format = "plain";
    bool decimal = false;
};

int cmd_table(const TableArgs& a) {
    cbsum::SumQuery q;
    q.family = cbsum::parse_family(a.family);
    q.method = cbsum::parse_method(a.method);
    q.r = a.r;
    std::vector<Rational> values;
    values.reserve(a.n_max + 1);
    for (int n = 0; n <= a.n_max; ++n) {
        q.n = n;
        values.push_back(cbsum::evaluate(q));
    }
    if (a.format == "json") {
        json rows = json::array();
        for (int n = 0; n <= a.n_max; ++n) {
            json row{{"n", n}, {"value", values[n].to_string()}};
            if (a.decimal)
                row["decimal"] = decimal_approx(values[n]);
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << "\n";
    } else {
        if (a.format == "csv")
            std::cout << "n,value" << (a.decimal ? ",decimal" : "") << "\n";
        for (int n = 0; n <= a.n_max; ++n) {
            std::cout << n << "," << values[n];
            if (a.decimal)
                std::cout << "," << decimal_approx(values[n]);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_poly(int r, const std::string& format) {
    cbsum::Polynomial p = cbsum::p_poly(r);
    if (format == "json") {
        json coeffs = json::array();
        for (const auto& c : p.coefficients())
            coeffs.push_back(c.to_string());
        std::cout << json{{"r", r}, {"coefficients", coeffs}}.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "k,coeff\n";
        for (std::size_t k = 0; k < p.coefficients().size(); ++k)
            std::cout << k << "," << p.coefficients()[k] << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
    return 0;
}

int cmd_identities(const std::string& format) {
    const auto& reg = cbsum::list_identities();
    if (format == "json") {
        json rows = json::array();
        for (const auto& id : reg)
            rows.push_back(
                {{"key", id.key}, {"domain", id.domain}, {"statement", id.statement}});
        std::cout << rows.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "key,domain\n";
        for (const auto& id : reg)
            std::cout << id.key << "," << id.domain << "\n";
    } else {
        for (const auto& id : reg)
            std::cout << id.key << "  [" << id.domain << "]  " << id.statement << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    int n_max = 30;
    int r_max = 4;
    std::string t_text;
    std::string perturb_key;
    std::string format = "plain";
};

json failure_to_json(const cbsum::VerificationReport& d) {
    json row{{"key", d.key},
             {"n", d.params.n},
             {"r", d.params.r},
             {"lhs", d.lhs.to_string()},
             {"rhs", d.rhs.to_string()},
             {"equal", d.equal}};
    if (d.params.t)
        row["t"] = d.params.t->to_string();
    return row;
}

int cmd_verify(const VerifyArgs& a) {
    cbsum::SuiteOptions opts;
    opts.n_max = a.n_max;
    opts.r_max = a.r_max;
    if (!a.t_text.empty())
        opts.t_override = Rational::parse(a.t_text);
    opts.perturb_key = a.perturb_key;

    cbsum::SuiteReport report = cbsum::run_suite(a.suite, opts);

    if (a.format == "json") {
        json checks = json::array();
        json failures = json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"key", c.name}, {"points", c.points}, {"failures", c.failures}});
            for (const auto& d : c.failure_details)
                failures.push_back(failure_to_json(d));
        }
        json out{{"suite", report.suite},
                 {"ok", report.ok()},
                 {"points", report.points()},
                 {"failures", report.failures()},
                 {"checks", checks},
                 {"failure_details", failures}};
        std::cout << out.dump() << "\n";
    } else if (a.format == "csv") {
        std::cout << "key,points,failures\n";
        for (const auto& c : report.checks)
            std::cout << c.name << "," << c.points << "," << c.failures << "\n";
    } else {
        for (const auto& c : report.checks) {
            if (c.failures == 0) {
                std::cout << c.name << ": PASS points=" << c.points << "\n";
            } else {
                std::cout << c.name << ": FAIL failures=" << c.failures
                          << " points=" << c.points << "\n";
                int shown = 0;
                for (const auto& d : c.failure_details) {
                    if (++shown > 3) break;
                    std::cout << "  n=" << d.params.n << " r=" << d.params.r;
                    if (d.params.t)
                        std::cout << " t=" << *d.params.t;
                    std::cout << " lhs=" << d.lhs << " rhs=" << d.rhs << "\n";
                }
            }
        }
        std::cout << "suite=" << report.suite << " checks=" << report.checks.size()
                  << " points=" << report.points() << " failures=" << report.failures()
                  << " result=" << (report.ok() ? "PASS" : "FAIL") << "\n";
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic evaluation and verification of central-binomial "
                 "harmonic sum identities"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"plain", "csv", "json"};
    auto format_check = CLI::IsMember(formats);
    const std::vector<std::string> families = {"plain", "H", "O", "2H"};
    const std::vector<std::string> methods = {"brute", "recursive", "closed"};

    EvalArgs ev;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one sum S_r(n) of a family");
    eval_cmd->add_option("--family", ev.family, "Sum family")
        ->check(CLI::IsMember(families));
    eval_cmd->add_option("--r", ev.r, "Power of k in the summand")
        ->check(CLI::NonNegativeNumber);
    eval_cmd->add_option("--n", ev.n, "Upper summation limit")
        ->check(CLI::NonNegativeNumber);
    eval_cmd->add_option("--method", ev.method, "Evaluation route")
        ->check(CLI::IsMember(methods));
    eval_cmd->add_option("--format", ev.format, "Output format")
        ->check(format_check)
        ->envname("CBSUM_FORMAT");
    eval_cmd->add_flag("--decimal", ev.decimal, "Also print a marked decimal approximation");

    TableArgs tb;
    auto* table_cmd = app.add_subcommand("table", "Tabulate a sum family for n = 0..n-max");
    table_cmd->add_option("--family", tb.family, "Sum family")
        ->check(CLI::IsMember(families));
    table_cmd->add_option("--r", tb.r, "Power of k in the summand")
        ->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--n-max", tb.n_max, "Largest n")
        ->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--method", tb.method, "Evaluation route")
        ->check(CLI::IsMember(methods));
    table_cmd->add_option("--format", tb.format, "Output format")
        ->check(format_check)
        ->envname("CBSUM_FORMAT");
    table_cmd->add_flag("--decimal", tb.decimal, "Also print a marked decimal approximation");

    int poly_r = 1;
    std::string poly_format = "plain";
    auto* poly_cmd =
        app.add_subcommand("poly", "Print the coefficients of P_r from degree 0 upward");
    poly_cmd->add_option("--r", poly_r, "Polynomial index (>= 1)");
    poly_cmd->add_option("--format", poly_format, "Output format")
        ->check(format_check)
        ->envname("CBSUM_FORMAT");

    VerifyArgs vf;
    auto* verify_cmd =
        app.add_subcommand("verify", "Run exhaustive exact-equality verification sweeps");
    verify_cmd->add_option("--suite", vf.suite, "all | sums | identities | stirling");
    verify_cmd->add_option("--n-max", vf.n_max, "Largest n per sweep (>= 1)");
    verify_cmd->add_option("--r-max", vf.r_max, "Largest free exponent r")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--t", vf.t_text,
                           "Replace the t sample set with one rational (\"p/q\")");
    verify_cmd->add_option("--perturb", vf.perturb_key,
                           "Self-test fault injection: shift the named identity's "
                           "right side by 1")
        ->group("");  // hidden
    verify_cmd->add_option("--format", vf.format, "Output format")
        ->check(format_check)
        ->envname("CBSUM_FORMAT");

    std::string ids_format = "plain";
    auto* ids_cmd = app.add_subcommand("identities", "List the identity registry");
    ids_cmd->add_option("--format", ids_format, "Output format")
        ->check(format_check)
        ->envname("CBSUM_FORMAT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(eval_cmd))
            return cmd_eval(ev);
        if (app.got_subcommand(table_cmd))
            return cmd_table(tb);
        if (app.got_subcommand(poly_cmd)) {
            if (poly_r < 1) {
                std::cerr << "error: poly requires --r >= 1\n";
                return 2;
            }
            return cmd_poly(poly_r, poly_format);
        }
        if (app.got_subcommand(verify_cmd)) {
            if (vf.n_max < 1) {
                std::cerr << "error: --n-max must be >= 1\n";
                return 2;
            }
            return cmd_verify(vf);
        }
        if (app.got_subcommand(ids_cmd))
            return cmd_identities(ids_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
