#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nuij/poly_gcd.hpp"
#include "nuij/rational.hpp"
#include "nuij/unipoly.hpp"

namespace nuij {

/// Interval endpoint that may be -inf or +inf. Infinite endpoints are
/// handled through leading-coefficient signs, never by substituting a
/// large finite bound.
class Bound {
public:
    static Bound neg_inf() { return Bound(Kind::kNegInf, Rational(0)); }
    static Bound pos_inf() { return Bound(Kind::kPosInf, Rational(0)); }
    static Bound at(Rational r) { return Bound(Kind::kFinite, std::move(r)); }

    bool is_finite() const { return kind_ == Kind::kFinite; }
    bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
    bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
    const Rational& value() const { return value_; }

    friend bool operator<(const Bound& a, const Bound& b) {
        if (a.is_neg_inf())
            return !b.is_neg_inf();
        if (a.is_pos_inf())
            return false;
        if (b.is_pos_inf())
            return true;
        if (b.is_neg_inf())
            return false;
        return a.value_ < b.value_;
    }

private:
    enum class Kind { kNegInf, kFinite, kPosInf };
    Bound(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rational value_;
};

namespace detail {

/// Sign of p(num/den) for den > 0, evaluated homogeneously in Z.
inline int ipoly_sign_at(const IPoly& p, const mpz_class& num, const mpz_class& den) {
    if (p.empty())
        return 0;
    mpz_class acc = p.back(), dp = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        dp *= den;
        acc = acc * num + p[i] * dp;
    }
    return sgn(acc);
}

inline int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

} // namespace detail

/// Sturm chain of a square-free polynomial. Elements are kept as
/// primitive integer polynomials; every element equals the canonical
/// chain member times a positive rational, which leaves all sign
/// variations intact. By Sturm's theorem, V(a) - V(b) is the number of
/// distinct real roots in (a, b].
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p) {
        if (p.is_zero())
            throw std::domain_error("SturmChain: zero polynomial");
        chain_.push_back(detail::ipoly_primitive(detail::ipoly_from(p)));
        if (detail::ipoly_deg(chain_[0]) == 0)
            return;
        chain_.push_back(detail::ipoly_primitive(detail::ipoly_derivative(chain_[0])));
        while (detail::ipoly_deg(chain_.back()) > 0) {
            const detail::IPoly& g = chain_.back();
            auto [r, t] = detail::ipoly_pseudo_rem(chain_[chain_.size() - 2], g);
            if (r.empty())
                break;
            // r = lc(g)^t * rem; flip so the stored element is a positive
            // multiple of -rem as the chain requires.
            const bool flip = (sgn(g.back()) < 0) && (t % 2 == 1);
            detail::IPoly next = detail::ipoly_primitive(std::move(r));
            if (!flip)
                for (mpz_class& c : next)
                    c = -c;
            chain_.push_back(std::move(next));
        }
        // A square-free input terminates in a nonzero constant.
        if (detail::ipoly_deg(chain_.back()) > 0)
            throw std::domain_error("SturmChain: polynomial is not square-free");
    }

    int variations_at(const Bound& b) const {
        std::vector<int> signs(chain_.size());
        for (std::size_t i = 0; i < chain_.size(); ++i) {
            const detail::IPoly& p = chain_[i];
            if (b.is_finite()) {
                signs[i] = detail::ipoly_sign_at(p, b.value().num(), b.value().den());
            } else if (b.is_pos_inf()) {
                signs[i] = sgn(p.back());
            } else {
                signs[i] = (detail::ipoly_deg(p) % 2 == 0) ? sgn(p.back()) : -sgn(p.back());
            }
        }
        return detail::count_variations(signs);
    }

    /// Distinct real roots in (lo, hi].
    int count(const Bound& lo, const Bound& hi) const {
        return variations_at(lo) - variations_at(hi);
    }

private:
    std::vector<detail::IPoly> chain_;
};

/// Exact count of distinct real roots of a square-free p in (lo, hi].
/// Non-square-free input is an error; take square_free_part first.
inline int sturm_root_count(const UniPoly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero())
        throw std::domain_error("sturm_root_count: zero polynomial");
    if (!(lo < hi))
        throw std::invalid_argument("sturm_root_count: empty interval");
    return SturmChain(p).count(lo, hi);
}

inline int sturm_root_count(const UniPoly& p) {
    return sturm_root_count(p, Bound::neg_inf(), Bound::pos_inf());
}

/// True iff all roots of p are real (counted with multiplicity): the
/// square-free part must have as many distinct real roots as its degree.
inline bool is_hyperbolic(const UniPoly& p) {
    if (p.is_zero())
        throw std::domain_error("is_hyperbolic: zero polynomial");
    if (p.degree() == 0)
        return true;
    UniPoly sf = square_free_part(p);
    return SturmChain(sf).count(Bound::neg_inf(), Bound::pos_inf()) == sf.degree();
}

/// Strict Cauchy bound: every real root lies in (-B, B).
inline Rational root_bound(const UniPoly& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i)
        m = std::max(m, (p.coeff(i) / p.leading()).abs());
    return Rational(1) + m;
}

struct RootInterval {
    Rational lo, hi;   // the root lies in (lo, hi]
    int multiplicity = 1;
};

/// Disjoint isolating intervals, sorted ascending; each holds exactly
/// one distinct real root and the multiplicities sum to deg(p).
struct RootIsolation {
    std::vector<RootInterval> intervals;
};

/// Sum over all real roots of their multiplicities.
inline int real_root_count_with_multiplicity(const UniPoly& p) {
    if (p.is_zero())
        throw std::domain_error("real_root_count_with_multiplicity: zero polynomial");
    int total = 0;
    for (const UniPoly& g : gcd_chain(p)) {
        if (g.degree() == 0)
            break;
        total += sturm_root_count(square_free_part(g));
    }
    return total;
}

/// Sturm-guided bisection on the square-free part. Requires a
/// hyperbolic input; multiplicities are recovered from the repeated-gcd
/// chain.
inline RootIsolation isolate_and_refine_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero())
        throw std::domain_error("isolate_and_refine_roots: zero polynomial");
    if (width.sign() <= 0)
        throw std::invalid_argument("isolate_and_refine_roots: width must be positive");
    if (!is_hyperbolic(p))
        throw std::domain_error("isolate_and_refine_roots: polynomial has non-real roots");

    RootIsolation out;
    if (p.degree() == 0)
        return out;

    const UniPoly sf = square_free_part(p);
    const SturmChain chain(sf);
    const Rational bound = root_bound(sf);
    const Rational half(1, 2);

    struct Segment {
        Rational lo, hi;
        int v_lo, v_hi;
    };
    std::vector<Segment> stack;
    {
        Segment whole{-bound, bound, chain.variations_at(Bound::at(-bound)),
                      chain.variations_at(Bound::at(bound))};
        if (whole.v_lo - whole.v_hi > 0)
            stack.push_back(std::move(whole));
    }
    while (!stack.empty()) {
        Segment seg = std::move(stack.back());
        stack.pop_back();
        const int roots = seg.v_lo - seg.v_hi;
        if (roots == 1 && seg.hi - seg.lo <= width) {
            out.intervals.push_back({seg.lo, seg.hi, 1});
            continue;
        }
        Rational mid = (seg.lo + seg.hi) * half;
        const int v_mid = chain.variations_at(Bound::at(mid));
        if (seg.v_lo - v_mid > 0)
            stack.push_back({seg.lo, mid, seg.v_lo, v_mid});
        if (v_mid - seg.v_hi > 0)
            stack.push_back({mid, seg.hi, v_mid, seg.v_hi});
    }
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

    // Multiplicity of the root in I: one more than the deepest gcd-chain
    // member that still has a root in I.
    const std::vector<UniPoly> g_chain = gcd_chain(p);
    std::vector<SturmChain> sf_chains;
    for (const UniPoly& g : g_chain) {
        if (g.degree() == 0)
            break;
        sf_chains.emplace_back(square_free_part(g));
    }
    for (RootInterval& iv : out.intervals) {
        int m = 0;
        for (const SturmChain& c : sf_chains) {
            if (c.count(Bound::at(iv.lo), Bound::at(iv.hi)) == 0)
                break;
            ++m;
        }
        iv.multiplicity = m;
    }
    return out;
}

} // namespace nuij
