#pragma once

#include <stdexcept>
#include <vector>

#include "cbsum/sequences.hpp"

namespace cbsum {

/// sum_{p=0..k} (-1)^p C(k,p) (v+p)^r with the 0^0 = 1 convention.
/// Equals (-1)^k k! times the shifted Stirling number with shift v,
/// upper offset r and lower offset k.
inline Integer alt_power_sum(int k, int r, int v) {
    if (k < 0 || r < 0 || v < 0)
        throw std::domain_error("alt_power_sum: negative argument");
    Integer acc = 0;
    for (int p = 0; p <= k; ++p) {
        Integer term = binomial(k, p) * ipow(Integer(v + p), r);
        if (p & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

/// Triangle of Stirling numbers of the second kind S(n,k), built once up to
/// max_n via S(n,k) = k S(n-1,k) + S(n-1,k-1); immutable afterwards.
class StirlingTable {
public:
    explicit StirlingTable(int max_n) : max_n_(max_n) {
        if (max_n < 0)
            throw std::domain_error("StirlingTable: negative size");
        rows_.resize(max_n + 1);
        rows_[0] = {Integer(1)};
        for (int n = 1; n <= max_n; ++n) {
            rows_[n].assign(n + 1, Integer(0));
            for (int k = 1; k <= n; ++k) {
                Integer up = (k <= n - 1) ? rows_[n - 1][k] : Integer(0);
                rows_[n][k] = Integer(k) * up + rows_[n - 1][k - 1];
            }
        }
    }

    int max_n() const { return max_n_; }

    Integer at(int n, int k) const {
        if (n < 0 || n > max_n_)
            throw std::out_of_range("StirlingTable: n out of range");
        if (k < 0 || k > n)
            return 0;
        return rows_[n][k];
    }

private:
    int max_n_;
    std::vector<std::vector<Integer>> rows_;
};

/// S(n,k) via the triangle recurrence on a private scratch row; 0 outside
/// 0 <= k <= n.
inline Integer stirling2(int n, int k) {
    if (n < 0)
        throw std::domain_error("stirling2: negative upper argument");
    if (k < 0 || k > n)
        return 0;
    std::vector<Integer> row{Integer(1)};  // row n = 0
    for (int m = 1; m <= n; ++m) {
        std::vector<Integer> next(m + 1, Integer(0));
        for (int j = 1; j <= m; ++j)
            next[j] = Integer(j) * (j < m ? row[j] : Integer(0)) + row[j - 1];
        row = std::move(next);
    }
    return row[k];
}

/// Shifted variant: entry (n,k) holds the count for n added elements and k
/// added blocks on top of `shift` pre-seeded singleton blocks. Recurrence
/// (k + shift)-weighted; the shift-0 table is the plain Stirling triangle.
class RStirlingTable {
public:
    RStirlingTable(int shift, int max_n) : shift_(shift), max_n_(max_n) {
        if (shift < 0 || max_n < 0)
            throw std::domain_error("RStirlingTable: negative argument");
        rows_.resize(max_n + 1);
        rows_[0] = {Integer(1)};
        for (int n = 1; n <= max_n; ++n) {
            rows_[n].assign(n + 1, Integer(0));
            for (int k = 0; k <= n; ++k) {
                Integer up = (k <= n - 1) ? rows_[n - 1][k] : Integer(0);
                Integer diag = (k >= 1) ? rows_[n - 1][k - 1] : Integer(0);
                rows_[n][k] = Integer(k + shift_) * up + diag;
            }
        }
    }

    int shift() const { return shift_; }
    int max_n() const { return max_n_; }

    Integer at(int n, int k) const {
        if (n < 0 || n > max_n_)
            throw std::out_of_range("RStirlingTable: n out of range");
        if (k < 0 || k > n)
            return 0;
        return rows_[n][k];
    }

private:
    int shift_;
    int max_n_;
    std::vector<std::vector<Integer>> rows_;
};

/// r-Stirling number of the second kind with shift r, upper offset n and
/// lower offset k (total indices n+r over k+r). Primary route is the
/// alternating power sum; the RStirlingTable recurrence is the independent
/// cross-check. Reduces to stirling2(n,k) at r = 0.
inline Integer r_stirling2(int n, int k, int r) {
    if (n < 0 || r < 0)
        throw std::domain_error("r_stirling2: negative argument");
    if (k < 0 || k > n)
        return 0;
    Integer signed_sum = alt_power_sum(k, n, r);
    if (k & 1)
        signed_sum = -signed_sum;
    Integer kfact = factorial(k);
    if (signed_sum % kfact != 0)
        throw std::logic_error("r_stirling2: power sum not divisible by k!");
    return signed_sum / kfact;
}

}  // namespace cbsum
