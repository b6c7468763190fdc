#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/moments.hpp"
#include "dunkl/numeric.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/series.hpp"
#include "dunkl/sheffer.hpp"

namespace dunkl {

/// Insertion-ordered JSON so emitted documents are byte-stable.
using json = nlohmann::ordered_json;

inline json to_json(const Series& s) {
    json coeffs = json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) coeffs.push_back(s.coeff(n).str());
    return json{{"nu", s.nu().str()}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline Series series_from_json(const json& j) {
    const DunklParam nu = DunklParam::from_string(j.at("nu").get<std::string>());
    const auto order = j.at("order").get<std::size_t>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::from_string(c.get<std::string>()));
    if (coeffs.size() != order + 1) throw usage_error("Series JSON: coeffs length must be order + 1");
    return Series(nu, std::move(coeffs));
}

inline json to_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"nu", p.nu().str()}, {"coeffs", coeffs}};
}

inline Poly poly_from_json(const json& j) {
    const DunklParam nu = DunklParam::from_string(j.at("nu").get<std::string>());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::from_string(c.get<std::string>()));
    return Poly(nu, std::move(coeffs));
}

inline json to_json(const BiPoly& b) {
    json rows = json::array();
    for (std::size_t j = 0; j < b.y_degree_bound(); ++j) rows.push_back(to_json(b.y_coefficient(j)));
    return json{{"nu", b.nu().str()}, {"y_rows", rows}};
}

inline json to_json(const PolySequence& seq) {
    json polys = json::array();
    for (const auto& p : seq) polys.push_back(to_json(p));
    return json{{"family", seq.spec().name}, {"nu", seq.nu().str()}, {"polys", polys}};
}

inline json to_json(const ThorneReport& report) {
    json pairs = json::array();
    for (const auto& p : report.pairs) {
        pairs.push_back(json{{"n", p.n},
                             {"r", p.r},
                             {"value", p.value.str()},
                             {"expected", p.expected.str()},
                             {"pass", p.pass}});
    }
    return json{{"pairs", pairs}, {"all_pass", report.all_pass}};
}

inline json to_json(const numeric::CrosscheckReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back(json{{"n", r.n}, {"numeric", r.numeric}, {"target", r.target}, {"rel_err", r.rel_err}});
    }
    return json{{"density", numeric::to_string(report.density)},
                {"nu", report.nu},
                {"rows", rows},
                {"pass", report.pass}};
}

}  // namespace dunkl
