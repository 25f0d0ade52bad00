#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nuij/rational.hpp"
#include "nuij/unipoly.hpp"

namespace nuij {

/// Bivariate polynomial in (z, s) over Rational, stored as a sparse map
/// from (deg_z, deg_s) to nonzero coefficients. Equality is exact map
/// equality.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (deg_z, deg_s)

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const Rational& c) {
        BiPoly p;
        p.add_term(0, 0, c);
        return p;
    }
    static BiPoly term(int dz, int ds, const Rational& c) {
        if (dz < 0 || ds < 0)
            throw std::invalid_argument("BiPoly: negative exponent");
        BiPoly p;
        p.add_term(dz, ds, c);
        return p;
    }

    /// Embeds p(z) as a bivariate polynomial constant in s.
    static BiPoly from_unipoly_z(const UniPoly& p) {
        BiPoly r;
        for (int k = 0; k <= p.degree(); ++k)
            r.add_term(k, 0, p.coeff(k));
        return r;
    }

    /// q(z+s) expanded via the binomial theorem.
    static BiPoly substitute_sum(const UniPoly& q) {
        BiPoly r;
        for (int m = 0; m <= q.degree(); ++m) {
            if (q.coeff(m).is_zero())
                continue;
            for (int t = 0; t <= m; ++t)
                r.add_term(t, m - t, q.coeff(m) * Rational(binomial(m, t)));
        }
        return r;
    }

    void add_term(int dz, int ds, const Rational& c) {
        if (c.is_zero())
            return;
        auto it = terms_.find({dz, ds});
        if (it == terms_.end()) {
            terms_.emplace(Key{dz, ds}, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    int deg_z() const {
        int d = 0;
        for (const auto& [k, c] : terms_)
            d = std::max(d, k.first);
        return terms_.empty() ? -1 : d;
    }
    int deg_s() const {
        int d = 0;
        for (const auto& [k, c] : terms_)
            d = std::max(d, k.second);
        return terms_.empty() ? -1 : d;
    }

    Rational coeff(int dz, int ds) const {
        auto it = terms_.find({dz, ds});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// The coefficient of z^k, as a polynomial in s.
    UniPoly z_coefficient(int k) const {
        std::vector<Rational> c;
        for (const auto& [key, v] : terms_) {
            if (key.first != k)
                continue;
            if (static_cast<int>(c.size()) <= key.second)
                c.resize(key.second + 1);
            c[key.second] = v;
        }
        return UniPoly(std::move(c));
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, c] : b.terms_)
            r.add_term(k.first, k.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, c] : b.terms_)
            r.add_term(k.first, k.second, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k, -c);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.terms_ == b.terms_;
    }

    Rational evaluate(const Rational& z, const Rational& s) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_)
            acc += c * z.pow(k.first) * s.pow(k.second);
        return acc;
    }

    /// Substitutes s = s0, returning a polynomial in z.
    UniPoly substitute_s(const Rational& s0) const {
        std::vector<Rational> c;
        for (const auto& [k, v] : terms_) {
            if (static_cast<int>(c.size()) <= k.first)
                c.resize(k.first + 1);
            c[k.first] += v * s0.pow(k.second);
        }
        return UniPoly(std::move(c));
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += c.str() + "*z^" + std::to_string(k.first) + "*s^" +
                   std::to_string(k.second);
        }
        return out;
    }

private:
    std::map<Key, Rational> terms_;
};

/// Tensor-product interpolation: recovers the unique polynomial of
/// degree <= deg_z_bound in z and <= deg_s_bound in s from its values on
/// the grid z_nodes x s_nodes (values[i][j] at (z_nodes[i], s_nodes[j])).
inline BiPoly bipoly_interpolate(const std::vector<std::vector<Rational>>& values,
                                 const std::vector<Rational>& z_nodes,
                                 const std::vector<Rational>& s_nodes,
                                 int deg_z_bound, int deg_s_bound) {
    if (static_cast<int>(z_nodes.size()) != deg_z_bound + 1 ||
        static_cast<int>(s_nodes.size()) != deg_s_bound + 1)
        throw std::invalid_argument("bipoly_interpolate: node count must be bound+1");
    if (values.size() != z_nodes.size())
        throw std::invalid_argument("bipoly_interpolate: value grid shape mismatch");
    for (const auto& row : values)
        if (row.size() != s_nodes.size())
            throw std::invalid_argument("bipoly_interpolate: value grid shape mismatch");

    // Interpolate each grid row along s, then each s-coefficient along z.
    std::vector<UniPoly> rows(z_nodes.size());
    for (std::size_t i = 0; i < z_nodes.size(); ++i)
        rows[i] = interpolate(s_nodes, values[i]);

    BiPoly result;
    std::vector<Rational> column(z_nodes.size());
    for (int k = 0; k <= deg_s_bound; ++k) {
        for (std::size_t i = 0; i < z_nodes.size(); ++i)
            column[i] = rows[i].coeff(k);
        UniPoly in_z = interpolate(z_nodes, column);
        for (int j = 0; j <= in_z.degree(); ++j)
            result.add_term(j, k, in_z.coeff(j));
    }
    return result;
}

/// Evaluates f on a node grid; inverse of bipoly_interpolate within the
/// stated degree bounds.
inline std::vector<std::vector<Rational>>
bipoly_evaluate_grid(const BiPoly& f, const std::vector<Rational>& z_nodes,
                     const std::vector<Rational>& s_nodes) {
    std::vector<std::vector<Rational>> values(z_nodes.size(),
                                              std::vector<Rational>(s_nodes.size()));
    for (std::size_t i = 0; i < z_nodes.size(); ++i)
        for (std::size_t j = 0; j < s_nodes.size(); ++j)
            values[i][j] = f.evaluate(z_nodes[i], s_nodes[j]);
    return values;
}

} // namespace nuij
