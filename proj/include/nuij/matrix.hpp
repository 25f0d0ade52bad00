#pragma once

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nuij/rational.hpp"

namespace nuij {

/// Fraction-free (Bareiss) determinant of a rational matrix. Rows are
/// scaled to integers first; the elimination itself divides exactly at
/// every step, so intermediate values stay the size of minors instead of
/// growing exponentially.
inline Rational det_bareiss(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return Rational(1);
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("det_bareiss: matrix must be square");

    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class denom = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
                    m[i][j].den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j].num() * (row_lcm / m[i][j].den());
        denom *= row_lcm;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0)
                ++pivot;
            if (pivot == n)
                return Rational(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return Rational(det, denom);
}

/// Laplace (cofactor) expansion along the rows, with minors shared
/// across branches, as the independent cross-check for the elimination
/// kernels. Never divides; O(2^n) minors, so small matrices only.
template <typename Scalar>
Scalar det_cofactor(const std::vector<std::vector<Scalar>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("det_cofactor: matrix must be square");
    if (n == 0)
        return Scalar(1);
    if (n > 16)
        throw std::invalid_argument("det_cofactor: matrix too large for expansion");

    // minor[mask] = determinant of the submatrix of the last popcount(mask)
    // rows and the column set mask. The sign alternates with the column's
    // position among the active ones.
    std::vector<Scalar> minor(std::size_t{1} << n, Scalar(0));
    std::vector<bool> ready(std::size_t{1} << n, false);
    auto expand = [&](auto&& self, unsigned mask) -> const Scalar& {
        if (ready[mask])
            return minor[mask];
        const int k = std::popcount(mask);
        const std::size_t row = n - static_cast<std::size_t>(k);
        if (k == 1) {
            minor[mask] = m[row][static_cast<std::size_t>(std::countr_zero(mask))];
        } else {
            Scalar det(0);
            int sign = 1;
            for (unsigned rest = mask; rest != 0; rest &= rest - 1) {
                const unsigned bit = rest & (0u - rest);
                const auto col = static_cast<std::size_t>(std::countr_zero(bit));
                Scalar term = m[row][col] * self(self, mask & ~bit);
                det = (sign > 0) ? det + term : det - term;
                sign = -sign;
            }
            minor[mask] = std::move(det);
        }
        ready[mask] = true;
        return minor[mask];
    };
    return expand(expand, (1u << n) - 1u);
}

/// Bareiss elimination over any exact scalar with exact division
/// (one-step fraction-free recurrence).
template <typename Scalar>
Scalar det_bareiss_generic(std::vector<std::vector<Scalar>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return Scalar(1);
    int sign = 1;
    Scalar prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero())
                ++pivot;
            if (pivot == n)
                return Scalar(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = Scalar(0);
        }
        prev = a[k][k];
    }
    Scalar det = a[n - 1][n - 1];
    return sign > 0 ? det : Scalar(0) - det;
}

/// Symmetric matrix of rationals.
class SymMatrix {
public:
    explicit SymMatrix(std::vector<std::vector<Rational>> entries)
        : e_(std::move(entries)) {
        const std::size_t n = e_.size();
        for (const auto& row : e_)
            if (row.size() != n)
                throw std::invalid_argument("SymMatrix: matrix must be square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (e_[i][j] != e_[j][i])
                    throw std::invalid_argument("SymMatrix: matrix must be symmetric");
    }

    static SymMatrix diagonal(const std::vector<Rational>& diag) {
        std::vector<std::vector<Rational>> e(diag.size(),
                                             std::vector<Rational>(diag.size()));
        for (std::size_t i = 0; i < diag.size(); ++i)
            e[i][i] = diag[i];
        return SymMatrix(std::move(e));
    }

    int n() const { return static_cast<int>(e_.size()); }
    const Rational& at(int i, int j) const { return e_.at(i).at(j); }
    const std::vector<std::vector<Rational>>& rows() const { return e_; }

    /// Submatrix keeping the given (sorted) diagonal positions.
    std::vector<std::vector<Rational>> principal_submatrix(
        const std::vector<int>& keep) const {
        std::vector<std::vector<Rational>> sub(keep.size(),
                                               std::vector<Rational>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j)
                sub[i][j] = at(keep[i], keep[j]);
        return sub;
    }

private:
    std::vector<std::vector<Rational>> e_;
};

/// Exact check that all C(n, j) principal j x j minors coincide.
inline bool principal_minors_all_equal(const SymMatrix& m, int j) {
    if (j < 1 || j > m.n())
        throw std::invalid_argument("principal_minors_all_equal: j out of range");
    std::vector<int> pick(j);
    for (int i = 0; i < j; ++i)
        pick[i] = i;
    bool have_first = false;
    Rational first(0);
    while (true) {
        Rational minor = det_bareiss(m.principal_submatrix(pick));
        if (!have_first) {
            first = minor;
            have_first = true;
        } else if (minor != first) {
            return false;
        }
        // Next combination in lexicographic order.
        int i = j - 1;
        while (i >= 0 && pick[i] == m.n() - j + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int t = i + 1; t < j; ++t)
            pick[t] = pick[t - 1] + 1;
    }
    return true;
}

} // namespace nuij
