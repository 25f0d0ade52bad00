#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "nuij/bipoly.hpp"
#include "nuij/rational.hpp"
#include "nuij/sturm.hpp"
#include "nuij/unipoly.hpp"

namespace nuij {

/// Coefficient sequence a = (a_1, ..., a_d) with the implicit convention
/// a_0 = 1. Candidates carry no membership guarantee; whether they are
/// Nuij sequences is a separate query, so refutation witnesses are
/// first-class values.
struct NuijCandidate {
    int d = 1;
    std::vector<Rational> a;

    NuijCandidate(int degree, std::vector<Rational> seq)
        : d(degree), a(std::move(seq)) {
        if (d < 1)
            throw std::invalid_argument("NuijCandidate: d must be >= 1");
        if (static_cast<int>(a.size()) != d)
            throw std::invalid_argument("NuijCandidate: sequence length must equal d");
    }

    static NuijCandidate zeros(int d) {
        return NuijCandidate(d, std::vector<Rational>(d, Rational(0)));
    }

    /// a_k for k = 0..d, with a_0 = 1.
    Rational at(int k) const {
        if (k == 0)
            return Rational(1);
        return a.at(k - 1);
    }

    friend bool operator==(const NuijCandidate& x, const NuijCandidate& y) {
        return x.d == y.d && x.a == y.a;
    }
};

/// Monic polynomial certified hyperbolic (all roots real) at construction.
class HyperbolicPoly {
public:
    explicit HyperbolicPoly(UniPoly p) : poly_(std::move(p)) {
        if (poly_.is_zero() || !poly_.is_monic())
            throw std::invalid_argument("HyperbolicPoly: polynomial must be monic");
        if (!is_hyperbolic(poly_))
            throw std::domain_error("HyperbolicPoly: polynomial has non-real roots");
    }

    static HyperbolicPoly from_negated_roots(const std::vector<Rational>& roots) {
        return HyperbolicPoly(UniPoly::from_negated_roots(roots));
    }

    const UniPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }

private:
    UniPoly poly_;
};

/// q_a(z) = z^d + sum_k a_k (z^d)^(k) = z^d + sum_k a_k d!/(d-k)! z^(d-k).
inline UniPoly q_poly(const NuijCandidate& a) {
    std::vector<Rational> c(a.d + 1);
    c[a.d] = Rational(1);
    for (int k = 1; k <= a.d; ++k)
        c[a.d - k] = a.at(k) * Rational(falling_factorial(a.d, k));
    return UniPoly(std::move(c));
}

/// The linear map b_d: entry k is d!/(d-k)! * a_k, so that q_poly(a) is
/// the monic polynomial with coefficient vector bd_map(a).
inline std::vector<Rational> bd_map(const NuijCandidate& a) {
    std::vector<Rational> b(a.d);
    for (int k = 1; k <= a.d; ++k)
        b[k - 1] = a.at(k) * Rational(falling_factorial(a.d, k));
    return b;
}

/// Decides Nuij membership: a is a Nuij sequence iff q_a is hyperbolic.
/// The single hyperbolicity check at s = 1 suffices; the general-s claim
/// follows from the scaling relation between q_a and rescaled sequences.
inline bool is_nuij(const NuijCandidate& a) {
    return is_hyperbolic(q_poly(a));
}

/// Pencil p_a(z, s): monic of degree d in z, with the coefficient of
/// z^(d-i) of degree at most i in s.
class Pencil {
public:
    Pencil(BiPoly f, int d) : f_(std::move(f)), d_(d) {
        if (d_ < 1)
            throw std::invalid_argument("Pencil: d must be >= 1");
        if (!(f_.z_coefficient(d_) == UniPoly::constant(1)))
            throw std::invalid_argument("Pencil: coefficient of z^d must be 1");
        if (f_.deg_z() != d_)
            throw std::invalid_argument("Pencil: degree in z must equal d");
        for (int i = 0; i <= d_; ++i)
            if (f_.z_coefficient(d_ - i).degree() > i)
                throw std::invalid_argument(
                    "Pencil: coefficient of z^(d-i) must have s-degree <= i");
    }

    const BiPoly& bipoly() const { return f_; }
    int degree() const { return d_; }

private:
    BiPoly f_;
    int d_;
};

/// p_a(z, s) = p(z) + sum_k a_k s^k p^(k)(z).
inline Pencil build_pencil(const HyperbolicPoly& p, const NuijCandidate& a) {
    if (p.degree() != a.d)
        throw std::invalid_argument("build_pencil: deg(p) must equal a.d");
    BiPoly f = BiPoly::from_unipoly_z(p.poly());
    for (int k = 1; k <= a.d; ++k) {
        const UniPoly pk = p.poly().derivative(k);
        for (int j = 0; j <= pk.degree(); ++j)
            f.add_term(j, k, a.at(k) * pk.coeff(j));
    }
    return Pencil(std::move(f), a.d);
}

/// The section z -> p_a(z, s0): monic of degree d.
inline UniPoly pencil_section(const Pencil& pencil, const Rational& s0) {
    return pencil.bipoly().substitute_s(s0);
}

/// Composition (b o a)_k = sum_{i=0..k} a_i b_{k-i} with a_0 = b_0 = 1,
/// truncated at d. Matches applying the perturbations in sequence.
inline NuijCandidate compose(const NuijCandidate& a, const NuijCandidate& b) {
    if (a.d != b.d)
        throw std::invalid_argument("compose: dimension mismatch");
    std::vector<Rational> c(a.d);
    for (int k = 1; k <= a.d; ++k) {
        Rational sum(0);
        for (int i = 0; i <= k; ++i)
            sum += a.at(i) * b.at(k - i);
        c[k - 1] = sum;
    }
    return NuijCandidate(a.d, std::move(c));
}

/// Left fold of compose over a nonempty list sharing one d.
inline NuijCandidate iterate_compose(const std::vector<NuijCandidate>& seqs) {
    if (seqs.empty())
        throw std::invalid_argument("iterate_compose: empty list");
    NuijCandidate acc = seqs.front();
    for (std::size_t i = 1; i < seqs.size(); ++i)
        acc = compose(acc, seqs[i]);
    return acc;
}

/// Elementary symmetric polynomials of the entries: the returned list
/// (c_1, ..., c_d) gives the coefficients of prod_i (z + x_i).
inline std::vector<Rational> viete(const std::vector<Rational>& roots) {
    std::vector<Rational> c(roots.size(), Rational(0));
    // Incremental expansion of the product, one factor at a time.
    for (std::size_t n = 0; n < roots.size(); ++n) {
        for (std::size_t k = n + 1; k-- > 1;)
            c[k] += roots[n] * c[k - 1];
        c[0] += roots[n];
    }
    return c;
}

/// Membership query result with the refutation data for non-members:
/// the count of non-real roots of q_a (with multiplicity) is nonzero
/// exactly when a is not a Nuij sequence.
struct MembershipReport {
    bool member;
    UniPoly q;
    int nonreal_root_count; // 0 for members
};

inline MembershipReport check_membership(const NuijCandidate& a) {
    UniPoly q = q_poly(a);
    const int real_count = real_root_count_with_multiplicity(q);
    return {real_count == q.degree(), std::move(q), a.d - real_count};
}

/// Checks the exact bivariate identity T_a((z+w)^d) = q_a(z+w), where
/// T_a(f) = f + sum_k a_k f^(k). Holds for every sequence; returning
/// false would indicate a defect, not a property of the input.
inline bool verify_shift_identity(const NuijCandidate& a) {
    const int d = a.d;
    // Left side: sum_i C(d,i) w^(d-i) T_a(z^i), with
    // T_a(z^i) = sum_{j<=i} a_j i!/(i-j)! z^(i-j). The second variable w
    // is stored in the s slot.
    BiPoly lhs;
    for (int i = 0; i <= d; ++i) {
        const Rational binom = Rational(binomial(d, i));
        for (int j = 0; j <= i; ++j)
            lhs.add_term(i - j, d - i,
                         binom * a.at(j) * Rational(falling_factorial(i, j)));
    }
    const BiPoly rhs = BiPoly::substitute_sum(q_poly(a));
    return lhs == rhs;
}

} // namespace nuij
