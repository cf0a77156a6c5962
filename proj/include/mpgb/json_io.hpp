#pragma once

#include <json.hpp>

#include "mpgb/homology.hpp"

namespace mpgb {

/// {"terms": [{"coeff": "...", "monomial": [..], "basis": [vertex ids]}]}
/// Coefficients travel as exact decimal strings.
template <class K>
nlohmann::json element_to_json(const FreeModuleElement<K>& e,
                               const std::vector<Simplex>& basis_simplices) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : e.terms()) {
        nlohmann::json jt;
        jt["coeff"] = t.coeff.str();
        jt["monomial"] = t.monomial.exponents();
        jt["basis"] = basis_simplices[t.basis].vertices;
        terms.push_back(std::move(jt));
    }
    return nlohmann::json{{"terms", std::move(terms)}};
}

template <class K>
FreeModuleElement<K> element_from_json(const nlohmann::json& j, const DimensionSpaces<K>& sp,
                                       MonomialOrder order) {
    std::vector<ModuleTerm<K>> terms;
    for (const auto& jt : j.at("terms")) {
        auto coeff = K::Field::parse_scalar(sp.D->field, jt.at("coeff").get<std::string>());
        if (!coeff) throw std::invalid_argument("bad coefficient string");
        Grade mono(jt.at("monomial").get<std::vector<unsigned>>());
        Simplex s = Simplex::of(jt.at("basis").get<std::vector<int>>());
        terms.push_back({*coeff, mono, static_cast<std::uint32_t>(sp.simplex_index(s))});
    }
    return FreeModuleElement<K>::make(sp.D, order, std::move(terms));
}

template <class K>
nlohmann::json result_to_json(const PipelineResult<K>& res) {
    nlohmann::json out;
    out["v_prime"] = res.v_prime.exponents();
    out["field"] = res.field.name();
    out["order"] = res.order.name();
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& d : res.dimensions) {
        const auto& sp = res.spaces[d.n];
        nlohmann::json jd;
        jd["n"] = d.n;
        auto dump = [&](const std::vector<FreeModuleElement<K>>& gens) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& g : gens) arr.push_back(element_to_json(g, sp.simplices));
            return arr;
        };
        jd["boundaries"] = dump(d.boundaries.generators);
        jd["cycles"] = dump(d.cycles.generators);
        jd["homology"] = dump(d.homology);
        if (!d.quotient_relations.empty()) {
            nlohmann::json rel = nlohmann::json::array();
            for (const auto& g : d.quotient_relations) {
                nlohmann::json jt = nlohmann::json::array();
                for (const auto& t : g.terms()) {
                    jt.push_back({{"coeff", t.coeff.str()},
                                  {"monomial", t.monomial.exponents()},
                                  {"generator", t.basis}});
                }
                rel.push_back(std::move(jt));
            }
            jd["homology_relations"] = std::move(rel);
        }
        jd["stats"] = {{"fundamental_count", d.fundamental_count},
                       {"simplex_count", d.simplex_count},
                       {"seconds_boundaries", d.seconds_boundaries},
                       {"seconds_cycles", d.seconds_cycles},
                       {"seconds_homology", d.seconds_homology}};
        dims.push_back(std::move(jd));
    }
    out["dimensions"] = std::move(dims);
    return out;
}

} // namespace mpgb
