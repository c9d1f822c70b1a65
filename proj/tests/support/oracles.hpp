#pragma once

// Test-side reference computations. They deliberately avoid the library's
// own algorithms (its Smith normal form, elimination and canonical
// coordinates) so that agreement is evidence rather than tautology.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "ncspectrum/abelian.hpp"
#include "ncspectrum/algebra.hpp"

namespace oracle {

using Int = mpz_class;
using IntRows = std::vector<std::vector<Int>>;

inline IntRows rows_of(const ncs::IntegerMatrix& m) {
    IntRows out(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

/// Determinant by cofactor expansion along the first row.
inline Int cofactor_det(const IntRows& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        IntRows minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Int(-term);
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Smith diagonal from determinantal divisors: D_k = gcd of all k x k
/// minors, d_k = D_k / D_{k-1}. Exponential; meant for matrices up to 6 x 6.
inline std::vector<Int> determinantal_diagonal(const IntRows& m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<Int> out;
    Int previous = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        Int g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntRows minor(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(abs(cofactor_det(minor))).get_mpz_t());
            }
        if (g == 0) {
            out.resize(std::min(rows, cols), 0);
            return out;
        }
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

/// Textbook Smith diagonal by repeated Euclidean row and column reduction,
/// always pivoting on an entry of least absolute value so that entries stay
/// small. No transforms are tracked.
inline std::vector<Int> euclid_diagonal(IntRows m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<Int> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) {
                out.resize(std::min(rows, cols), 0);
                return out;
            }
            std::swap(m[t], m[pr]);
            for (auto& row : m) std::swap(row[t], row[pc]);
            bool remainder = false;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m[r][t] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), m[r][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
                remainder = remainder || m[r][t] != 0;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m[t][c] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), m[t][c].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
                remainder = remainder || m[t][c] != 0;
            }
            if (remainder) continue;  // a smaller entry now exists; re-pivot
            // Pivot must divide the rest; otherwise fold the offending row in.
            bool folded = false;
            for (std::size_t r = t + 1; r < rows && !folded; ++r)
                for (std::size_t c = t + 1; c < cols && !folded; ++c)
                    if (m[r][c] % m[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
                        folded = true;
                    }
            if (!folded) break;
        }
        out.push_back(abs(m[t][t]));
    }
    return out;
}

/// Invariant factors of Z^ngens / rowspace(relations), via euclid_diagonal.
inline ncs::InvariantFactors invariant_factors(const ncs::IntegerMatrix& relations, std::size_t ngens) {
    auto diag = euclid_diagonal(rows_of(relations), ngens);
    ncs::InvariantFactors f;
    std::size_t nonzero = 0;
    for (const auto& d : diag)
        if (d != 0) {
            ++nonzero;
            if (d > 1) f.torsion.push_back(d);
        }
    std::sort(f.torsion.begin(), f.torsion.end());
    f.free_rank = ngens - nonzero;
    return f;
}

inline ncs::IntegerMatrix product(const ncs::IntegerMatrix& a, const ncs::IntegerMatrix& b) {
    ncs::IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

inline Int det(const ncs::IntegerMatrix& m) { return cofactor_det(rows_of(m)); }

/// Exact rank over Q by fraction Gaussian elimination on the real and
/// imaginary parts stacked as a real matrix [[A, -B], [B, A]] (rank doubles).
inline std::size_t complex_rank(const ncs::ExactMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<mpq_class>> a(2 * r, std::vector<mpq_class>(2 * c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            a[i][j] = m(i, j).re();
            a[i][j + c] = -m(i, j).im();
            a[i + r][j] = m(i, j).im();
            a[i + r][j + c] = m(i, j).re();
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * c && rank < 2 * r; ++col) {
        std::size_t piv = rank;
        while (piv < 2 * r && a[piv][col] == 0) ++piv;
        if (piv == 2 * r) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = 0; i < 2 * r; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            mpq_class f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < 2 * c; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank / 2;
}

/// Sum of the diagonal entries of every block: the total rank of a projection.
inline mpq_class real_trace(const ncs::AlgebraElement& x) {
    mpq_class t = 0;
    for (const auto& p : x.parts())
        for (std::size_t i = 0; i < p.rows(); ++i) t += p(i, i).re();
    return t;
}

}  // namespace oracle
