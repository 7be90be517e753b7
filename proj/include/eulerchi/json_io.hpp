// JSON wire formats. Keys keep insertion order (nlohmann::ordered_json) so
// output is byte-stable across runs.
//
//   Rational      -> "num/den" (string; "/den" omitted when den == 1)
//   CycloElement  -> {"zeta_order": e, "coeffs": [rational strings, phi(e)]}
//   polynomials   -> arrays of CycloElement, ascending degree
//   reports       -> flat objects with optional "witness"

#pragma once

#include <json.hpp>

#include "eulerchi/euler.hpp"
#include "eulerchi/symmetry.hpp"

namespace eulerchi {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return q.to_string(); }

inline Rational rational_from_json(const json& j) {
    return Rational::parse(j.get<std::string>());
}

inline json to_json(const CycloElement& z) {
    json coeffs = json::array();
    for (const auto& c : z.coeffs()) coeffs.push_back(c.to_string());
    return json{{"zeta_order", z.field()->order()}, {"coeffs", std::move(coeffs)}};
}

inline CycloElement cyclo_from_json(const json& j) {
    const auto field = CycloField::get(j.at("zeta_order").get<unsigned long>());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return CycloElement(field, std::move(coeffs));
}

inline json to_json(const UnivariatePolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    return coeffs;
}

inline json to_json(const VerificationReport& r) {
    json j{{"identity", r.identity}, {"modulus", r.modulus}, {"char", r.char_index},
           {"w1", r.w1},             {"w2", r.w2}};
    if (r.order > 0) j["order"] = r.order;
    j["n"] = r.index;
    if (r.sample_agree.has_value()) j["sample"] = *r.sample_agree ? "agree" : "differ";
    j["verdict"] = r.equal ? "equal" : "unequal";
    if (r.witness.has_value()) {
        j["witness"] = json{{"x_degree", r.witness->x_degree},
                            {"y_degree", r.witness->y_degree},
                            {"lhs", to_json(r.witness->lhs)},
                            {"rhs", to_json(r.witness->rhs)}};
    }
    return j;
}

}  // namespace eulerchi
