#pragma once

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "nuij/bipoly.hpp"
#include "nuij/matrix.hpp"
#include "nuij/quad_ext.hpp"
#include "nuij/rational.hpp"
#include "nuij/sequences.hpp"

namespace nuij {

/// The d x d symmetric matrix with alpha on the diagonal and beta in
/// every off-diagonal position.
struct SpecialToeplitz {
    int d;
    QuadExt alpha;
    QuadExt beta;

    SpecialToeplitz(int size, QuadExt a, QuadExt b)
        : d(size), alpha(std::move(a)), beta(std::move(b)) {
        if (d < 1)
            throw std::invalid_argument("SpecialToeplitz: d must be >= 1");
    }

    std::vector<std::vector<QuadExt>> entries() const {
        std::vector<std::vector<QuadExt>> m(d, std::vector<QuadExt>(d, beta));
        for (int i = 0; i < d; ++i)
            m[i][i] = alpha;
        return m;
    }

    /// Rational view, for the principal-minor diagnostics.
    SymMatrix as_sym_matrix() const {
        std::vector<std::vector<Rational>> m(
            d, std::vector<Rational>(d, beta.as_rational()));
        for (int i = 0; i < d; ++i)
            m[i][i] = alpha.as_rational();
        return SymMatrix(std::move(m));
    }
};

/// Closed-form determinant t_{alpha,beta}(k) = (a-b)^(k-1) (a+(k-1)b).
inline QuadExt toeplitz_det_closed(const QuadExt& alpha, const QuadExt& beta, int k) {
    if (k < 1)
        throw std::invalid_argument("toeplitz_det_closed: k must be >= 1");
    return (alpha - beta).pow(k - 1) * (alpha + QuadExt(Rational(k - 1)) * beta);
}

/// Independent determinant of T_{alpha,beta}(k): cofactor expansion for
/// small k, generic fraction-free elimination beyond. Never consults the
/// closed form.
inline QuadExt toeplitz_det_oracle(const QuadExt& alpha, const QuadExt& beta, int k) {
    if (k < 1)
        throw std::invalid_argument("toeplitz_det_oracle: k must be >= 1");
    const auto m = SpecialToeplitz(k, alpha, beta).entries();
    if (k <= 10)
        return det_cofactor(m);
    return det_bareiss_generic(m);
}

/// The sequence a_i = t_{alpha,beta}(i) / i!, i = 1..d, generated by a
/// special Toeplitz matrix. Every a_i must come out rational.
inline NuijCandidate udr_sequence(const QuadExt& alpha, const QuadExt& beta, int d) {
    if (d < 1)
        throw std::invalid_argument("udr_sequence: d must be >= 1");
    std::vector<Rational> a(d);
    for (int i = 1; i <= d; ++i) {
        QuadExt t = toeplitz_det_closed(alpha, beta, i);
        QuadExt ai = t / QuadExt(Rational(factorial(i)));
        if (!ai.is_rational())
            throw std::domain_error("udr_sequence: entry " + std::to_string(i) +
                                    " is irrational");
        a[i - 1] = ai.as_rational();
    }
    return NuijCandidate(d, std::move(a));
}

/// Recovered representation data: alpha is always unique; beta is unique
/// for d >= 3 and for beta = 0, while d = 2 admits both signs.
struct UDRWitness {
    QuadExt alpha;
    std::vector<QuadExt> beta_solutions;
};

/// Refutation: the first index at which no real beta can satisfy
/// a_i = t_{alpha,beta}(i)/i!, and the exact residual t(i)/i! - a_i at
/// that index (for the +sqrt(D) branch). A negative discriminant
/// D = alpha^2 - 2 a_2 is reported at index 2 with residual D.
struct UDRRejection {
    int failed_index;
    QuadExt residual;
};

using RecoverResult = std::variant<UDRWitness, UDRRejection>;

/// Inverts a_i = t_{alpha,beta}(i)/i! over Q(sqrt(D)), D = alpha^2 - 2 a_2.
inline RecoverResult recover_udr(const NuijCandidate& a) {
    const QuadExt alpha(a.at(1));
    if (a.d == 1)
        return UDRWitness{alpha, {QuadExt(Rational(0))}};

    // t(2)/2! = (alpha^2 - beta^2)/2 forces beta^2 = alpha^2 - 2 a_2.
    const Rational disc = a.at(1) * a.at(1) - Rational(2) * a.at(2);
    if (disc.sign() < 0)
        return UDRRejection{2, QuadExt(disc)};

    std::vector<QuadExt> candidates;
    const QuadExt root = QuadExt::sqrt(disc);
    candidates.push_back(root);
    if (!root.is_zero())
        candidates.push_back(-root);

    if (a.d == 2)
        return UDRWitness{alpha, candidates};

    std::vector<QuadExt> survivors;
    int first_fail_index = 0;
    QuadExt first_fail_residual;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const QuadExt& beta = candidates[c];
        int fail = 0;
        QuadExt residual;
        for (int i = 3; i <= a.d; ++i) {
            QuadExt got = toeplitz_det_closed(alpha, beta, i) /
                          QuadExt(Rational(factorial(i)));
            QuadExt diff = got - QuadExt(a.at(i));
            if (!diff.is_zero()) {
                fail = i;
                residual = diff;
                break;
            }
        }
        if (fail == 0) {
            survivors.push_back(beta);
        } else if (c == 0) {
            first_fail_index = fail;
            first_fail_residual = residual;
        }
    }
    if (!survivors.empty())
        return UDRWitness{alpha, survivors};
    return UDRRejection{first_fail_index, first_fail_residual};
}

inline bool is_udr(const NuijCandidate& a) {
    return std::holds_alternative<UDRWitness>(recover_udr(a));
}

/// det(zI + D + s T_{alpha,beta}(d)) with D = diag(lambdas), as an exact
/// bivariate polynomial: every entry has degree <= 1 in z and s, so the
/// determinant is recovered from exact evaluations on a (d+1) x (d+1)
/// node grid.
inline BiPoly detrep_bipoly(const std::vector<Rational>& lambdas,
                            const Rational& alpha, const Rational& beta) {
    const int d = static_cast<int>(lambdas.size());
    if (d < 1)
        throw std::invalid_argument("detrep_bipoly: need at least one root");

    std::vector<Rational> nodes(d + 1);
    for (int i = 0; i <= d; ++i)
        nodes[i] = Rational(i);

    std::vector<std::vector<Rational>> values(d + 1, std::vector<Rational>(d + 1));
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (int zi = 0; zi <= d; ++zi) {
        for (int sj = 0; sj <= d; ++sj) {
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    m[r][c] = (r == c) ? nodes[zi] + lambdas[r] + nodes[sj] * alpha
                                       : nodes[sj] * beta;
            values[zi][sj] = det_bareiss(m);
        }
    }
    return bipoly_interpolate(values, nodes, nodes, d, d);
}

/// Forward direction of the representation characterization, checked
/// symbolically: the pencil built from a = (t(1)/1!, ..., t(d)/d!)
/// equals det(zI + D + s T_{alpha,beta}) as an exact bivariate
/// polynomial.
inline bool verify_udr(const std::vector<Rational>& lambdas, const Rational& alpha,
                       const Rational& beta) {
    const int d = static_cast<int>(lambdas.size());
    if (d < 1)
        throw std::invalid_argument("verify_udr: need at least one root");
    const HyperbolicPoly p = HyperbolicPoly::from_negated_roots(lambdas);
    const NuijCandidate a = udr_sequence(QuadExt(alpha), QuadExt(beta), d);
    const Pencil pencil = build_pencil(p, a);
    return detrep_bipoly(lambdas, alpha, beta) == pencil.bipoly();
}

} // namespace nuij
