#pragma once

/**
 * @file continuation.hpp
 * @brief Ratios I_s(z) = T_{s+1}(z) / T_s(z^p) on the unit domain and the
 * inversion symmetry z -> 1/z at Teichmüller points.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pvx/coeff_engine.hpp"
#include "pvx/congruence.hpp"
#include "pvx/errors.hpp"
#include "pvx/padic.hpp"

namespace pvx {

/// Residues u in F_p where the signed T_1 does not vanish.
struct DomainD {
    std::uint64_t p;
    std::vector<std::uint64_t> units;

    bool contains(std::uint64_t u) const {
        return std::find(units.begin(), units.end(), u % p) != units.end();
    }
};

inline DomainD domain_units(const TsPolynomial& T1) {
    if (T1.s != 1) throw precondition_error("domain_units needs T_1");
    const auto p = T1.params.p;
    const Integer pp(static_cast<unsigned long>(p));
    DomainD d{p, {}};
    for (std::uint64_t u = 0; u < p; ++u)
        if (!divides(pp, T1.signed_poly.evaluate(Integer(static_cast<unsigned long>(u))))) d.units.push_back(u);
    return d;
}

inline DomainD domain_units(int k, int n, const OmegaParam& omega, std::uint64_t p) {
    return domain_units(compute_Ts(k, n, omega, PrimeData(p, 1, omega)));
}

struct IRatioValue {
    Residue point;
    Residue value;
    bool unit;
};

inline Residue evaluate_mod(const ZPoly& f, const Residue& a) {
    Residue acc(Integer(0), a.p(), a.s());
    for (long i = f.degree(); i >= 0; --i) acc = acc * a + Residue(f.coeff(static_cast<std::size_t>(i)), a.p(), a.s());
    return acc;
}

/// I_s(a) = T_{s+1}(a) T_s(a^p)^{-1} at the precision of a.
inline IRatioValue I_eval(const Residue& a, const TsPolynomial& Tnext, const TsPolynomial& Tcur) {
    if (Tnext.s != Tcur.s + 1 || !(Tnext.params == Tcur.params)) throw precondition_error("I_eval needs T_{s+1} and T_s of one family");
    const auto p = Tcur.params.p;
    if (a.p() != p) throw ring_mismatch("I_eval: point lives over a different prime");
    const Residue den = evaluate_mod(Tcur.signed_poly, a.pow(static_cast<unsigned long>(p)));
    if (!den.is_unit())
        throw non_unit_error("I_eval: T_s(a^p) is not a unit; a = " + a.value().get_str() + " lies outside the unit domain");
    const Residue value = evaluate_mod(Tnext.signed_poly, a) * den.inverse();
    return {a, value, value.is_unit()};
}

/**
 * v_p(I_{s+1}(a) - I_s(a)) for s = 1..s_max-1, all evaluated at the precision of
 * a. An exact agreement at that precision reports the precision itself.
 */
inline std::vector<long> convergence_profile(const Residue& a, std::span<const TsPolynomial> Ts, unsigned s_max) {
    if (Ts.size() < s_max + 2) throw precondition_error("convergence_profile needs T_0 .. T_{s_max+1}");
    std::vector<long> out;
    for (unsigned s = 1; s < s_max; ++s) {
        const Residue diff = I_eval(a, Ts[s + 2], Ts[s + 1]).value - I_eval(a, Ts[s + 1], Ts[s]).value;
        out.push_back(is_zero(diff.value()) ? static_cast<long>(a.s()) : padic_valuation(diff.value(), a.p()));
    }
    return out;
}

struct ModularRow {
    std::uint64_t u;
    std::uint64_t u_inv;
    Residue t;
    Residue I_t;
    Residue I_t_inv;
    Residue prefactor;  // t^{(p-1) r k / q}
    bool pass;          // the identity as displayed
    bool twisted_pass;  // with the reflection signs of T_{s+1} and T_s
};

struct ModularReport {
    TheoremReport report;
    std::vector<ModularRow> rows;
};

/// t^{(p-1)rk/q} I_s(1/t) = I_s(t) mod p^s with t the Teichmüller lift of u.
inline ModularRow modular_identity_row(std::uint64_t u, const TsPolynomial& Tnext, const TsPolynomial& Tcur, const DomainD& domain) {
    const auto p = Tcur.params.p;
    const unsigned s = Tcur.s;
    if (u == 0 || u >= p) throw precondition_error("modular_identity_check needs a unit u of F_p");
    const std::uint64_t u_inv = invmod(Integer(static_cast<unsigned long>(u)), Integer(static_cast<unsigned long>(p)))->get_ui();
    if (!domain.contains(u) || !domain.contains(u_inv))
        throw precondition_error("modular_identity_check needs u and 1/u in the unit domain");
    const Residue t = teichmuller_lift(u, p, s);
    const Residue t_inv = teichmuller_lift(u_inv, p, s);
    if (!(t * t_inv == Residue(Integer(1), p, s))) throw internal_error("Teichmüller lifts are not mutually inverse");
    const auto& om = Tcur.params.omega;
    const unsigned long e = (p - 1) * static_cast<unsigned long>(om.r() * Tcur.params.k) / static_cast<unsigned long>(om.q());
    const Residue pre = t.pow(e);
    const Residue a = I_eval(t, Tnext, Tcur).value;
    const Residue b = I_eval(t_inv, Tnext, Tcur).value;
    const QuiverModel model(Tcur.params.k, Tcur.params.n);
    const PrimeData prime(p, s, om);
    const int eps = reflection_sign(model, om, prime) * reflection_sign(model, om, prime.with_precision(s + 1));
    const Residue twisted = eps == 1 ? pre * b : -(pre * b);
    return {u, u_inv, t, a, b, pre, pre * b == a, twisted == a};
}

/// Runs the identity for every u in F_p^x with u and 1/u in the domain.
inline ModularReport modular_identity_check(const TsPolynomial& Tnext, const TsPolynomial& Tcur, const DomainD& domain) {
    const auto p = Tcur.params.p;
    ModularReport out{make_report("modular_identity", detail::ts_params(Tcur.params)), {}};
    out.report.params.emplace_back("s", std::to_string(Tcur.s));
    out.report.modulus = ipow(p, Tcur.s);
    for (std::uint64_t u = 1; u < p; ++u) {
        const std::uint64_t ui = invmod(Integer(static_cast<unsigned long>(u)), Integer(static_cast<unsigned long>(p)))->get_ui();
        if (!domain.contains(u) || !domain.contains(ui)) continue;
        out.rows.push_back(modular_identity_row(u, Tnext, Tcur, domain));
        if (!out.rows.back().pass && out.report.pass) {
            out.report.pass = false;
            const auto& r = out.rows.back();
            out.report.witness = Witness{static_cast<long>(u), r.I_t.value(), (r.prefactor * r.I_t_inv).value()};
        }
    }
    return out;
}

/**
 * Unit-value property: I_s(a) is a unit for every a in [0, p^s) whose residue
 * lies in the domain. Returns the first counterexample, if any.
 */
inline std::optional<Integer> unit_value_violation(const TsPolynomial& Tnext, const TsPolynomial& Tcur, const DomainD& domain) {
    const auto p = Tcur.params.p;
    const unsigned s = Tcur.s;
    const Integer m = ipow(p, s);
    for (Integer a(0); a < m; ++a) {
        if (!domain.contains(Integer(a % static_cast<unsigned long>(p)).get_ui())) continue;
        if (!I_eval(Residue(a, p, s), Tnext, Tcur).unit) return a;
    }
    return std::nullopt;
}

}  // namespace pvx
