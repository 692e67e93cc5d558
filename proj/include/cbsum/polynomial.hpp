#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "cbsum/rational.hpp"

namespace cbsum {

/// Dense univariate polynomial with rational coefficients, stored from
/// degree 0 upward. The leading coefficient is nonzero unless the value is
/// the zero polynomial (empty coefficient list, degree -1).
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
        normalize();
    }

    static Polynomial constant(Rational value) {
        return Polynomial(std::vector<Rational>{std::move(value)});
    }

    static Polynomial monomial(int degree, Rational coefficient = Rational(1)) {
        std::vector<Rational> c(degree + 1);
        c[degree] = std::move(coefficient);
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }

    Rational coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return Rational(0);
        return c_[i];
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational evaluate(const Rational& x) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return Polynomial();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> c(p.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = s * p.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

    /// Coefficients up to degree max_degree inclusive; the truncated-series
    /// workhorse for formal power series checks.
    Polynomial truncated(int max_degree) const {
        if (max_degree < 0)
            return Polynomial();
        auto end = c_.begin() + std::min<std::size_t>(c_.size(), max_degree + 1);
        return Polynomial(std::vector<Rational>(c_.begin(), end));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// "2/15, 1/5" style listing from degree 0 upward; "0" for the zero
    /// polynomial.
    std::string to_string() const {
        if (c_.empty())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].to_string();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

private:
    std::vector<Rational> c_;

    void normalize() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
};

}  // namespace cbsum
