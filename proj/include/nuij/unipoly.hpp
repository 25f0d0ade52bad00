#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nuij/rational.hpp"

namespace nuij {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending degree. The zero polynomial has an empty coefficient list;
/// otherwise the stored leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending_coeffs)
        : c_(std::move(ascending_coeffs)) {
        trim();
    }
    UniPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Rational c) { return UniPoly({std::move(c)}); }
    static UniPoly monomial(Rational c, int k) {
        if (k < 0)
            throw std::invalid_argument("UniPoly: negative exponent");
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return UniPoly(std::move(v));
    }

    /// monic (z + r_1)(z + r_2)...(z + r_n); the empty product is 1.
    static UniPoly from_negated_roots(const std::vector<Rational>& r) {
        UniPoly p = constant(1);
        for (const Rational& root : r)
            p = p * UniPoly({root, Rational(1)});
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(int k) const {
        static const Rational kZero(0);
        if (k < 0 || k >= static_cast<int>(c_.size()))
            return kZero;
        return c_[k];
    }
    const Rational& leading() const {
        if (is_zero())
            throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_monic() const { return !is_zero() && leading() == Rational(1); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] = -c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& p) {
        if (s.is_zero())
            return UniPoly();
        std::vector<Rational> r(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            r[i] = s * p.c_[i];
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Rational evaluate(const Rational& z) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    /// k-th formal derivative; k = 0 returns the polynomial unchanged,
    /// k > degree returns zero.
    UniPoly derivative(int k = 1) const {
        if (k < 0)
            throw std::invalid_argument("UniPoly: negative derivative order");
        if (k == 0)
            return *this;
        if (k > degree())
            return UniPoly();
        std::vector<Rational> r(c_.size() - k);
        for (std::size_t i = k; i < c_.size(); ++i) {
            // coefficient of z^(i-k) is c_i * i!/(i-k)!
            r[i - k] = c_[i] * Rational(falling_factorial(i, k));
        }
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero())
            throw std::domain_error("UniPoly: cannot normalize the zero polynomial");
        return (Rational(1) / leading()) * *this;
    }

    /// Euclidean division over Q: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero())
            throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly rem = a;
        std::vector<Rational> q;
        if (a.degree() >= b.degree())
            q.resize(a.degree() - b.degree() + 1);
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int shift = rem.degree() - b.degree();
            Rational f = rem.leading() / b.leading();
            q[shift] = f;
            rem = rem - UniPoly::monomial(f, shift) * b;
        }
        return {UniPoly(std::move(q)), rem};
    }

    /// Exact quotient; throws if the division leaves a remainder.
    UniPoly divide_exact(const UniPoly& b) const {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero())
            throw std::domain_error("UniPoly: inexact division");
        return q;
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero())
            return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            if (c_[k].is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += c_[k].str();
            if (k > 0)
                out += "*" + var + "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Newton interpolation through (nodes[i], values[i]); nodes must be
/// pairwise distinct. Returns the unique polynomial of degree < n.
inline UniPoly interpolate(const std::vector<Rational>& nodes,
                           const std::vector<Rational>& values) {
    if (nodes.size() != values.size())
        throw std::invalid_argument("interpolate: size mismatch");
    if (nodes.empty())
        throw std::invalid_argument("interpolate: empty node list");
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("interpolate: duplicate nodes");

    // Divided differences in place.
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);

    // Horner expansion of the Newton form.
    UniPoly p = UniPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        p = p * UniPoly({-nodes[i], Rational(1)}) + UniPoly::constant(dd[i]);
    return p;
}

} // namespace nuij
