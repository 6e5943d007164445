#pragma once

/**
 * @file congruence.hpp
 * @brief Dwork-type congruences, ghost polynomials and product presentations.
 *
 * Every check works in cross-multiplied form, so nothing is ever divided and a
 * failure points at a single coefficient.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pvx/coeff_engine.hpp"
#include "pvx/errors.hpp"
#include "pvx/numeric.hpp"
#include "pvx/poly.hpp"

namespace pvx {

struct Witness {
    long degree;
    Integer lhs;
    Integer rhs;
};

struct TheoremReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    Integer modulus{1};
    long degree_checked = 0;
    bool pass = true;
    std::optional<Witness> witness;
};

inline TheoremReport make_report(std::string identity, std::vector<std::pair<std::string, std::string>> params) {
    TheoremReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    return r;
}

/// A ghost sequence G_1..G_s in the unsigned convention.
struct GhostSequence {
    std::uint64_t p;
    std::vector<ZPoly> G;
};

namespace detail {

inline std::vector<std::pair<std::string, std::string>> ts_params(const TsParams& t) {
    return {{"k", std::to_string(t.k)}, {"n", std::to_string(t.n)}, {"omega", t.omega.str()}, {"p", std::to_string(t.p)}};
}

inline void require_family(std::span<const TsPolynomial> Ts) {
    if (Ts.empty()) throw precondition_error("empty T_s family");
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        if (!(Ts[i].params == Ts[0].params)) throw precondition_error("T_s family mixes parameter sets");
        if (Ts[i].s != i) throw precondition_error("T_s family must be indexed T_0, T_1, ... in order");
    }
}

/// Compares a and b coefficient-wise mod m up to degree cap; records the first mismatch.
inline void compare_mod(TheoremReport& report, const ZPoly& a, const ZPoly& b, const Integer& m, long cap) {
    report.modulus = m;
    report.degree_checked = cap;
    for (long i = 0; i <= cap; ++i) {
        const Integer x = a.coeff(static_cast<std::size_t>(i)), y = b.coeff(static_cast<std::size_t>(i));
        if (!divides(m, Integer(x - y))) {
            report.pass = false;
            report.witness = Witness{i, mod(x, m), mod(y, m)};
            return;
        }
    }
}

inline long max_degree(const ZPoly& a, const ZPoly& b) { return std::max({a.degree(), b.degree(), 0L}); }

}  // namespace detail

/// T_{s+1}(z) T_{s-1}(z^p) = T_s(z) T_s(z^p) mod p^s.
inline TheoremReport dwork_check(std::span<const TsPolynomial> Ts, unsigned s, Convention convention = Convention::signed_T) {
    detail::require_family(Ts);
    if (s < 1 || Ts.size() < s + 2) throw precondition_error("dwork_check at level s needs T_0 .. T_{s+1}");
    const auto p = Ts[0].params.p;
    const ZPoly lhs = poly_of(Ts[s + 1], convention) * substitute_power(poly_of(Ts[s - 1], convention), p);
    const ZPoly rhs = poly_of(Ts[s], convention) * substitute_power(poly_of(Ts[s], convention), p);
    TheoremReport r = make_report("dwork", detail::ts_params(Ts[0].params));
    r.params.emplace_back("s", std::to_string(s));
    r.params.emplace_back("convention", convention == Convention::signed_T ? "signed" : "unsigned");
    detail::compare_mod(r, lhs, rhs, ipow(p, s), detail::max_degree(lhs, rhs));
    return r;
}

/// Inverts T_s = sum_{m=1}^{s} G_m(z) T_{s-m}(z^{p^m}) for the unsigned family T_0..T_S.
inline GhostSequence ghost_sequence(std::span<const TsPolynomial> Ts) {
    detail::require_family(Ts);
    const auto p = Ts[0].params.p;
    GhostSequence g{p, {}};
    for (std::size_t s = 1; s < Ts.size(); ++s) {
        ZPoly G = Ts[s].unsigned_poly;
        for (std::size_t m = 1; m < s; ++m)
            G -= g.G[m - 1] * substitute_power(Ts[s - m].unsigned_poly, ipow(p, m).get_ui());
        g.G.push_back(std::move(G));
    }
    return g;
}

/// Exact integer identity T_s = sum_m G_m(z) T_{s-m}(z^{p^m}) for every s in the family.
inline TheoremReport ghost_reconstruction_check(std::span<const TsPolynomial> Ts, const GhostSequence& g) {
    detail::require_family(Ts);
    if (g.G.size() + 1 != Ts.size()) throw precondition_error("ghost sequence and T_s family lengths differ");
    TheoremReport r = make_report("ghost_reconstruction", detail::ts_params(Ts[0].params));
    for (std::size_t s = 1; s < Ts.size() && r.pass; ++s) {
        ZPoly sum;
        for (std::size_t m = 1; m <= s; ++m) sum += g.G[m - 1] * substitute_power(Ts[s - m].unsigned_poly, ipow(g.p, m).get_ui());
        const long cap = detail::max_degree(sum, Ts[s].unsigned_poly);
        for (long i = 0; i <= cap; ++i) {
            const auto a = sum.coeff(static_cast<std::size_t>(i)), b = Ts[s].unsigned_poly.coeff(static_cast<std::size_t>(i));
            if (a != b) {
                r.pass = false;
                r.witness = Witness{i, a, b};
                r.params.emplace_back("s", std::to_string(s));
                break;
            }
        }
        r.degree_checked = std::max(r.degree_checked, cap);
    }
    return r;
}

/// p^{m-1} divides every coefficient of G_m.
inline TheoremReport ghost_vanishing_check(const GhostSequence& g) {
    TheoremReport r = make_report("ghost_vanishing", {{"p", std::to_string(g.p)}, {"length", std::to_string(g.G.size())}});
    for (std::size_t m = 1; m <= g.G.size() && r.pass; ++m) {
        const Integer pm = ipow(g.p, m - 1);
        const ZPoly& G = g.G[m - 1];
        for (long i = 0; i <= G.degree(); ++i) {
            const auto c = G.coeff(static_cast<std::size_t>(i));
            if (!divides(pm, c)) {
                r.pass = false;
                r.witness = Witness{i, c, Integer(0)};
                r.params.emplace_back("m", std::to_string(m));
                break;
            }
        }
        r.modulus = pm;
        r.degree_checked = std::max(r.degree_checked, G.degree());
    }
    return r;
}

/// T_s(z) prod_{i=1}^{m} T_{s-m-1}(z^{p^i}) = prod_{i=0}^{m} T_{s-m}(z^{p^i}) mod p^{s-m}.
inline TheoremReport telescoping_check(std::span<const TsPolynomial> Ts, unsigned s, unsigned m) {
    detail::require_family(Ts);
    if (m + 1 > s || Ts.size() < s + 1) throw precondition_error("telescoping_check needs 0 <= m <= s-1 and T_0 .. T_s");
    const auto p = Ts[0].params.p;
    ZPoly lhs = Ts[s].signed_poly;
    for (unsigned i = 1; i <= m; ++i) lhs *= substitute_power(Ts[s - m - 1].signed_poly, ipow(p, i).get_ui());
    ZPoly rhs = ZPoly::constant(IntegerRing{}, Integer(1));
    for (unsigned i = 0; i <= m; ++i) rhs *= substitute_power(Ts[s - m].signed_poly, ipow(p, i).get_ui());
    TheoremReport r = make_report("telescoping", detail::ts_params(Ts[0].params));
    r.params.emplace_back("s", std::to_string(s));
    r.params.emplace_back("m", std::to_string(m));
    detail::compare_mod(r, lhs, rhs, ipow(p, s - m), detail::max_degree(lhs, rhs));
    return r;
}

/// Number of factors i = 0, 1, ... with p^i <= Dmax; later ones are 1 + O(z^{Dmax+1}).
inline unsigned product_length(std::uint64_t p, long Dmax) {
    unsigned n = 0;
    for (Integer q(1); q <= Dmax; q *= static_cast<unsigned long>(p)) ++n;
    return std::max(n, 1u);
}

/// prod_{i} T(z^{p^{i + shift}}) truncated at degree Dmax, exact over Z.
inline ZPoly truncated_frobenius_product(const ZPoly& T, std::uint64_t p, unsigned shift, long Dmax) {
    ZPoly acc = ZPoly::constant(IntegerRing{}, Integer(1));
    for (unsigned i = 0; i < product_length(p, Dmax); ++i) {
        const Integer e = ipow(p, i + shift);
        if (e > Dmax) break;
        acc = (acc * substitute_power(T.truncated(Dmax), e.get_ui())).truncated(Dmax);
    }
    return acc;
}

/**
 * V(z) prod_i T_{a-1}(z^{p^{i+1}}) = prod_i T_a(z^{p^i}) mod p^a up to degree Dmax.
 * V is given by its coefficients already reduced into Z/p^a.
 */
inline TheoremReport infinite_product_check(unsigned a, long Dmax, std::span<const Integer> vertex_mod,
                                            const TsPolynomial& Ta, const TsPolynomial& Ta_minus_1) {
    if (a < 1 || Ta.s != a || Ta_minus_1.s + 1 != a || !(Ta.params == Ta_minus_1.params))
        throw precondition_error("infinite_product_check needs T_a and T_{a-1} of one family");
    if (vertex_mod.size() < static_cast<std::size_t>(Dmax) + 1)
        throw precondition_error("infinite_product_check needs vertex coefficients up to Dmax");
    const auto p = Ta.params.p;
    const ZPoly V = zpoly(std::vector<Integer>(vertex_mod.begin(), vertex_mod.begin() + Dmax + 1));
    const ZPoly lhs = (V * truncated_frobenius_product(Ta_minus_1.signed_poly, p, 1, Dmax)).truncated(Dmax);
    const ZPoly rhs = truncated_frobenius_product(Ta.signed_poly, p, 0, Dmax);
    TheoremReport r = make_report("infinite_product", detail::ts_params(Ta.params));
    r.params.emplace_back("a", std::to_string(a));
    detail::compare_mod(r, lhs, rhs, ipow(p, a), Dmax);
    return r;
}

/**
 * G_2 read off directly from L_1 = Phi_2 - Phi_1 * barPhi_1(x^p, z^p) as the
 * coefficient of the same target x^{d p^2 - 1}. Independent of the inversion.
 */
inline ZPoly ghost_two_direct(int k, int n, const OmegaParam& omega, std::uint64_t p) {
    const QuiverModel model(k, n);
    const PrimeData p1(p, 1, omega), p2(p, 2, omega);
    const TargetMonomial target = make_target(model, p2);
    const FactorList phi2 = factor_list_phi_s(model, omega, p2);
    const FactorList cross = concat(factor_list_phi_s(model, omega, p1), frobenius_twist(factor_list_phi_bar_s(model, omega, p1), p));
    return extract_coefficient(phi2, target) - extract_coefficient(cross, target);
}

}  // namespace pvx
