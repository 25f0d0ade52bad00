#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nuij/bipoly.hpp"
#include "nuij/quad_ext.hpp"
#include "nuij/rational.hpp"
#include "nuij/sequences.hpp"
#include "nuij/toeplitz.hpp"
#include "nuij/unipoly.hpp"

// JSON wire formats. Rationals always cross as "p/q" strings ("p" when
// the denominator is 1); nothing here ever round-trips through floats.

namespace nuij {

using json = nlohmann::json;

inline void to_json(json& j, const Rational& r) { j = r.str(); }

inline void from_json(const json& j, Rational& r) {
    if (!j.is_string())
        throw std::invalid_argument("Rational: expected a \"p/q\" string");
    r = Rational::parse(j.get<std::string>());
}

inline void to_json(json& j, const QuadExt& q) {
    j = json{{"x", q.x()}, {"y", q.y()}, {"D", q.radicand()}};
}

inline void from_json(const json& j, QuadExt& q) {
    q = QuadExt(j.at("x").get<Rational>(), j.at("y").get<Rational>(),
                j.at("D").get<Rational>());
}

inline void to_json(json& j, const UniPoly& p) {
    j = json::array();
    for (const Rational& c : p.coeffs())
        j.push_back(c);
}

inline void from_json(const json& j, UniPoly& p) {
    if (!j.is_array())
        throw std::invalid_argument("UniPoly: expected an array of rationals");
    p = UniPoly(j.get<std::vector<Rational>>());
}

inline void to_json(json& j, const BiPoly& f) {
    j = json::array();
    for (const auto& [key, c] : f.terms())
        j.push_back(json{{"dz", key.first}, {"ds", key.second}, {"c", c}});
}

inline void from_json(const json& j, BiPoly& f) {
    if (!j.is_array())
        throw std::invalid_argument("BiPoly: expected an array of terms");
    f = BiPoly();
    for (const json& t : j)
        f.add_term(t.at("dz").get<int>(), t.at("ds").get<int>(),
                   t.at("c").get<Rational>());
}

inline void to_json(json& j, const NuijCandidate& a) {
    j = json{{"d", a.d}, {"a", a.a}};
}

inline NuijCandidate nuij_candidate_from_json(const json& j) {
    return NuijCandidate(j.at("d").get<int>(),
                         j.at("a").get<std::vector<Rational>>());
}

inline void to_json(json& j, const MembershipReport& r) {
    j = json{{"member", r.member}, {"q_poly", r.q}};
    if (!r.member)
        j["witness_nonreal_root_count"] = r.nonreal_root_count;
}

inline void to_json(json& j, const UDRWitness& w) {
    j = json{{"alpha", w.alpha}, {"beta", w.beta_solutions}};
}

inline void to_json(json& j, const UDRRejection& r) {
    j = json{{"member", false},
             {"failed_index", r.failed_index},
             {"residual", r.residual}};
}

inline void to_json(json& j, const SpecialToeplitz& t) {
    j = json{{"d", t.d}, {"alpha", t.alpha}, {"beta", t.beta}};
}

} // namespace nuij
