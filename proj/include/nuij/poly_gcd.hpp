#pragma once

#include <utility>
#include <vector>

#include "nuij/rational.hpp"
#include "nuij/unipoly.hpp"

namespace nuij {
namespace detail {

/// Integer polynomial, ascending coefficients, trailing zeros trimmed.
/// Working representation for remainder sequences: rational inputs are
/// scaled to Z[x] and every intermediate is reduced to its primitive
/// part, which keeps coefficient growth linear instead of exponential.
using IPoly = std::vector<mpz_class>;

inline void ipoly_trim(IPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline int ipoly_deg(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

inline IPoly ipoly_from(const UniPoly& p) {
    mpz_class den_lcm = 1;
    for (const Rational& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    IPoly r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = p.coeffs()[i].num() * (den_lcm / p.coeffs()[i].den());
    ipoly_trim(r);
    return r;
}

inline UniPoly ipoly_to_unipoly(const IPoly& p) {
    std::vector<Rational> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        c[i] = Rational(p[i]);
    return UniPoly(std::move(c));
}

/// gcd of all coefficients, always nonnegative; 0 for the zero polynomial.
inline mpz_class ipoly_content(const IPoly& p) {
    mpz_class g = 0;
    for (const mpz_class& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

/// Divides out the content; the sign of the leading coefficient is kept.
inline IPoly ipoly_primitive(IPoly p) {
    mpz_class g = ipoly_content(p);
    if (g > 1)
        for (mpz_class& c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

inline IPoly ipoly_derivative(const IPoly& p) {
    if (p.size() <= 1)
        return {};
    IPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        r[i - 1] = p[i] * static_cast<unsigned long>(i);
    return r;
}

/// Pseudo-remainder: returns (r, t) with r = lc(g)^t * (f mod g), the
/// true rational remainder scaled into Z[x]. t is reported so callers
/// that care about signs (Sturm chains) can undo an odd number of
/// negative-leading-coefficient multiplications.
inline std::pair<IPoly, int> ipoly_pseudo_rem(IPoly f, const IPoly& g) {
    const int dg = ipoly_deg(g);
    const mpz_class& glc = g.back();
    int t = 0;
    while (ipoly_deg(f) >= dg) {
        const int shift = ipoly_deg(f) - dg;
        mpz_class flc = f.back();
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] *= glc;
        for (int i = 0; i <= dg; ++i)
            f[i + shift] -= flc * g[i];
        ipoly_trim(f);
        ++t;
    }
    return {std::move(f), t};
}

/// Primitive-PRS gcd in Z[x]; result is primitive with positive leading
/// coefficient (or empty for gcd(0, 0)).
inline IPoly ipoly_gcd(IPoly a, IPoly b) {
    ipoly_trim(a);
    ipoly_trim(b);
    if (a.empty())
        std::swap(a, b);
    if (b.empty()) {
        if (!a.empty() && a.back() < 0)
            for (mpz_class& c : a)
                c = -c;
        return ipoly_primitive(std::move(a));
    }
    if (ipoly_deg(a) < ipoly_deg(b))
        std::swap(a, b);
    a = ipoly_primitive(std::move(a));
    b = ipoly_primitive(std::move(b));
    while (true) {
        IPoly r = ipoly_pseudo_rem(a, b).first;
        if (r.empty())
            break;
        a = std::move(b);
        b = ipoly_primitive(std::move(r));
    }
    if (b.back() < 0)
        for (mpz_class& c : b)
            c = -c;
    return b;
}

} // namespace detail

/// Monic gcd over Q[x]; gcd(0, 0) is defined as 0.
inline UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero())
        return UniPoly::zero();
    detail::IPoly g = detail::ipoly_gcd(detail::ipoly_from(a), detail::ipoly_from(b));
    return detail::ipoly_to_unipoly(g).monic();
}

/// p / gcd(p, p'), made monic: the same distinct roots, all simple.
inline UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero())
        throw std::domain_error("square_free_part: zero polynomial");
    if (p.degree() == 0)
        return UniPoly::constant(1);
    UniPoly g = poly_gcd(p, p.derivative());
    return p.divide_exact(g).monic();
}

inline bool is_square_free(const UniPoly& p) {
    if (p.is_zero())
        return false;
    if (p.degree() <= 1)
        return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

/// Repeated-gcd chain G_0 = p, G_{j+1} = gcd(G_j, G_j'), ending at the
/// first constant. A root of multiplicity m in p appears in exactly
/// G_0 .. G_{m-1}, which is how multiplicities are recovered.
inline std::vector<UniPoly> gcd_chain(const UniPoly& p) {
    if (p.is_zero())
        throw std::domain_error("gcd_chain: zero polynomial");
    std::vector<UniPoly> chain{p.monic()};
    while (chain.back().degree() > 0)
        chain.push_back(poly_gcd(chain.back(), chain.back().derivative()));
    return chain;
}

} // namespace nuij
