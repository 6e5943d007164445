#pragma once

/**
 * @file report.hpp
 * @brief JSON views of the library's results.
 *
 * Exact integers and rationals are written as decimal strings. Every top-level
 * document carries "schema_version" and "kind"; the schema lives in
 * schemas/pvx-report.schema.json.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "pvx/congruence.hpp"
#include "pvx/continuation.hpp"
#include "pvx/points.hpp"
#include "pvx/quiver.hpp"
#include "pvx/vertex.hpp"

namespace pvx {

using nlohmann::ordered_json;

inline constexpr const char* schema_version = "1.0";

inline ordered_json document(const char* kind) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["kind"] = kind;
    return j;
}

inline ordered_json coeff_strings(const ZPoly& f) {
    ordered_json a = ordered_json::array();
    for (const auto& c : f.coeffs()) a.push_back(c.get_str());
    return a;
}

template <class Num>
ordered_json coeff_strings(const std::vector<Num>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& c : v) a.push_back(c.get_str());
    return a;
}

inline ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
    ordered_json o = ordered_json::object();
    for (const auto& [k, v] : params) o[k] = v;
    return o;
}

inline ordered_json to_json(const TheoremReport& r) {
    ordered_json j;
    j["identity"] = r.identity;
    j["params"] = params_json(r.params);
    j["modulus"] = r.modulus.get_str();
    j["degree_checked"] = r.degree_checked;
    j["verdict"] = r.pass ? "pass" : "fail";
    if (r.witness) j["witness"] = {{"degree", r.witness->degree}, {"lhs", r.witness->lhs.get_str()}, {"rhs", r.witness->rhs.get_str()}};
    else j["witness"] = nullptr;
    return j;
}

inline ordered_json to_json(const TsPolynomial& t) {
    ordered_json j;
    j["k"] = t.params.k;
    j["n"] = t.params.n;
    j["omega"] = t.params.omega.str();
    j["p"] = t.params.p;
    j["s"] = t.s;
    j["sign"] = t.sign;
    j["degree"] = t.signed_poly.degree();
    j["coeffs"] = coeff_strings(t.signed_poly);
    j["unsigned_coeffs"] = coeff_strings(t.unsigned_poly);
    return j;
}

inline ordered_json to_json(const QuiverModel& m) {
    ordered_json j;
    j["k"] = m.k();
    j["n"] = m.n();
    j["dims"] = m.dims();
    ordered_json vars = ordered_json::array();
    for (const auto& x : eps_order(m)) vars.push_back({{"name", x.str()}, {"eps_rank", m.eps_rank(x)}});
    j["eps_order"] = vars;
    j["reversed_orientation_count"] = reversed_orientation_count(m);
    return j;
}

inline ordered_json to_json(const VertexSeries& v) {
    ordered_json j;
    j["k"] = v.k;
    j["n"] = v.n;
    j["omega"] = v.omega.str();
    j["route"] = to_string(v.route);
    j["coeffs"] = coeff_strings(v.coeffs);
    return j;
}

inline ordered_json to_json(const PadicVertex& v) {
    ordered_json j;
    j["k"] = v.k;
    j["n"] = v.n;
    j["omega"] = v.omega.str();
    j["route"] = "padic_limit";
    j["p"] = v.p;
    j["a"] = v.a;
    j["coeffs"] = coeff_strings(v.coeffs);
    return j;
}

inline ordered_json to_json(const ModularReport& m) {
    ordered_json j = to_json(m.report);
    ordered_json rows = ordered_json::array();
    for (const auto& r : m.rows)
        rows.push_back({{"u", r.u},
                        {"u_inv", r.u_inv},
                        {"t", r.t.value().get_str()},
                        {"I_t", r.I_t.value().get_str()},
                        {"I_t_inv", r.I_t_inv.value().get_str()},
                        {"prefactor", r.prefactor.value().get_str()},
                        {"verdict", r.pass ? "pass" : "fail"},
                        {"twisted_verdict", r.twisted_pass ? "pass" : "fail"}});
    j["rows"] = rows;
    return j;
}

inline ordered_json to_json(const PointCountReport& r) {
    ordered_json j;
    j["family"] = r.family;
    j["p"] = r.p;
    j["params"] = params_json(r.params);
    j["z0"] = r.z0;
    j["N"] = r.N.get_str();
    j["N_naive"] = r.N_naive ? ordered_json(r.N_naive->get_str()) : ordered_json(nullptr);
    j["T1_mod_p"] = r.T1_mod_p.get_str();
    j["M"] = r.M ? ordered_json(r.M->get_str()) : ordered_json(nullptr);
    j["A"] = coeff_strings(r.A);
    if (r.family == "curve") {
        j["theta"] = r.theta;
        j["zeta"] = r.zeta;
    }
    ordered_json checks = ordered_json::array();
    for (const auto& [name, ok] : r.checks) checks.push_back({{"check", name}, {"verdict", ok ? "pass" : "fail"}});
    j["checks"] = checks;
    j["verdict"] = r.pass() ? "pass" : "fail";
    return j;
}

}  // namespace pvx
