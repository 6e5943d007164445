#pragma once

/**
 * @file vertex.hpp
 * @brief Vertex function coefficients at u = 0, hbar/eps = omega.
 *
 * Four routes: the hypergeometric closed form (k = 1), the localization sum
 * along u_j = j t with t -> 0, a residue expansion of the rational
 * superpotential, and the p-adic limit of T_s.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pvx/congruence.hpp"
#include "pvx/errors.hpp"
#include "pvx/numeric.hpp"
#include "pvx/padic.hpp"
#include "pvx/parallel.hpp"
#include "pvx/poly.hpp"
#include "pvx/quiver.hpp"

namespace pvx {

enum class VertexRoute { closed_form, localization, residue };

inline const char* to_string(VertexRoute r) {
    switch (r) {
        case VertexRoute::closed_form: return "closed_form";
        case VertexRoute::localization: return "localization";
        case VertexRoute::residue: return "residue";
    }
    return "?";
}

struct VertexSeries {
    int k;
    int n;
    OmegaParam omega;
    VertexRoute route;
    std::vector<Rational> coeffs;  // c_0 .. c_Dmax
};

/// Vertex coefficients reduced mod p^a through the product of T_s.
struct PadicVertex {
    int k;
    int n;
    OmegaParam omega;
    std::uint64_t p;
    unsigned a;
    std::vector<Integer> coeffs;  // in [0, p^a)
};

namespace detail {
inline void require_vertex_params(int k, int n, long Dmax) {
    if (k < 1 || n < 2 * k) throw precondition_error("vertex function needs 1 <= k and n >= 2k");
    if (Dmax < 0) throw precondition_error("Dmax must be nonnegative");
}
}  // namespace detail

/// c_d = (-1)^{nd} binom(-omega, d)^n.
inline VertexSeries vertex_closed_form_k1(int n, const OmegaParam& omega, long Dmax) {
    detail::require_vertex_params(1, n, Dmax);
    VertexSeries v{1, n, omega, VertexRoute::closed_form, {}};
    for (long d = 0; d <= Dmax; ++d) {
        Rational b = rational_binomial(-omega.value(), static_cast<unsigned long>(d));
        Rational c(1);
        for (int i = 0; i < n; ++i) c *= b;
        if ((static_cast<long>(n) * d) % 2 != 0) c = -c;
        v.coeffs.push_back(c);
    }
    return v;
}

/// One localization coefficient c_d along u_j = j t, evaluated at t = 0.
inline Rational localization_coefficient(int k, int n, const OmegaParam& omega, long d) {
    const RatFun t = RatFun::variable();
    const RatFun eps(1), hbar(omega.value());
    std::vector<RatFun> u(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) u[static_cast<std::size_t>(j)] = RatFun(j) * t;
    auto U = [&](int j) -> const RatFun& { return u[static_cast<std::size_t>(j)]; };

    RatFun total(0);
    std::vector<long> part(static_cast<std::size_t>(k), 0);
    // Enumerate compositions d_1 + ... + d_k = d.
    auto visit = [&](auto&& self, int i, long left) -> void {
        if (i == k - 1) {
            part[static_cast<std::size_t>(i)] = left;
            RatFun term(1);
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) {
                    const long dd = part[static_cast<std::size_t>(a - 1)] - part[static_cast<std::size_t>(b - 1)];
                    term *= pochhammer(eps - U(a) + U(b), dd, eps) / pochhammer(hbar - U(a) + U(b), dd, eps);
                }
            for (int j = 1; j <= n; ++j)
                for (int a = 1; a <= k; ++a) {
                    const long da = part[static_cast<std::size_t>(a - 1)];
                    term *= pochhammer(hbar + U(j) - U(a), da, eps) / pochhammer(eps + U(j) - U(a), da, eps);
                }
            total += term;
            return;
        }
        for (long x = 0; x <= left; ++x) {
            part[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, left - x);
        }
    };
    visit(visit, 0, d);
    return ratfun_eval_at_zero(total);
}

inline VertexSeries vertex_localization(int k, int n, const OmegaParam& omega, long Dmax, unsigned jobs = default_jobs()) {
    detail::require_vertex_params(k, n, Dmax);
    std::vector<long> degrees;
    for (long d = 0; d <= Dmax; ++d) degrees.push_back(d);
    VertexSeries v{k, n, omega, VertexRoute::localization, {}};
    v.coeffs = parallel_map(degrees, [&](long d) { return localization_coefficient(k, n, omega, d); }, jobs);
    return v;
}

namespace detail {

/**
 * Coefficients of prod_x x^0 z^d, d <= Dmax, in the product of branch series,
 * with each series truncated at m <= cap. Exponent vectors are (x..., z).
 */
inline std::vector<Rational> residue_pass(const QuiverModel& model, const std::vector<BranchFactor>& factors, long Dmax, long cap) {
    const std::size_t nv = model.num_variables();
    using Key = std::vector<long>;
    std::map<Key, Rational> state{{Key(nv + 1, 0), Rational(1)}};
    for (const auto& bf : factors) {
        if (bf.factor.kind == FactorKind::monomial) continue;
        std::map<Key, Rational> next;
        std::vector<Rational> row;
        for (long m = 0; m <= cap; ++m) {
            Rational c = rational_binomial(bf.factor.exponent, static_cast<unsigned long>(m));
            row.push_back(m % 2 == 0 ? c : Rational(-c));
        }
        for (const auto& [key, c] : state) {
            for (long m = 0; m <= cap; ++m) {
                if (sgn(row[static_cast<std::size_t>(m)]) == 0) continue;
                Key nk = key;
                if (bf.small.kind == Operand::Kind::z) nk[nv] += m;
                else if (bf.small.kind == Operand::Kind::variable) nk[static_cast<std::size_t>(bf.small.var)] += m;
                if (bf.large.kind == Operand::Kind::variable) nk[static_cast<std::size_t>(bf.large.var)] -= m;
                if (nk[nv] > Dmax) break;
                next[nk] += c * row[static_cast<std::size_t>(m)];
            }
        }
        std::erase_if(next, [](const auto& kv) { return sgn(kv.second) == 0; });
        state = std::move(next);
    }
    std::vector<Rational> out(static_cast<std::size_t>(Dmax) + 1, Rational(0));
    for (const auto& [key, c] : state) {
        bool at_origin = true;
        for (std::size_t i = 0; i < nv; ++i) at_origin = at_origin && key[i] == 0;
        if (at_origin) out[static_cast<std::size_t>(key[nv])] += c;
    }
    return out;
}

}  // namespace detail

/**
 * Expands every factor of the rational superpotential on its branch, drops the
 * unit phases of reversed factors, and reads off the x^0 z^d coefficients.
 * Fractional powers cancel variable by variable against the x^{-1} prefactor,
 * which is checked. The Laurent cap starts at Dmax and is confirmed at 2 Dmax.
 */
inline VertexSeries vertex_residue(int k, int n, const OmegaParam& omega, long Dmax) {
    detail::require_vertex_params(k, n, Dmax);
    const QuiverModel model(k, n);
    const auto factors = factor_list_phi_rational(model, omega);

    std::vector<Rational> leading(model.num_variables(), Rational(0));
    for (const auto& bf : factors) {
        if (bf.factor.kind == FactorKind::monomial) leading[static_cast<std::size_t>(bf.factor.lhs.var)] += bf.factor.exponent;
        else if (bf.large.kind == Operand::Kind::variable) leading[static_cast<std::size_t>(bf.large.var)] += bf.factor.exponent;
    }
    for (const auto& e : leading)
        if (e != -1) throw internal_error("residue: fractional powers do not cancel to x^{-1}");

    const long cap = std::max(Dmax, 1L);
    auto first = detail::residue_pass(model, factors, Dmax, cap);
    auto second = detail::residue_pass(model, factors, Dmax, 2 * cap);
    if (first != second) throw not_stabilized("residue expansion changed when the Laurent cap was doubled");
    return VertexSeries{k, n, omega, VertexRoute::residue, std::move(first)};
}

/**
 * Coefficients of prod_i T_a(z^{p^i}) / T_{a-1}(z^{p^{i+1}}) mod p^a up to Dmax.
 * The denominator has constant term 1, so it inverts as a truncated series.
 */
inline PadicVertex vertex_padic_limit(int k, int n, const OmegaParam& omega, std::uint64_t p, unsigned a, long Dmax) {
    detail::require_vertex_params(k, n, Dmax);
    if (a < 1) throw precondition_error("vertex_padic_limit needs a >= 1");
    const PrimeData prime(p, a, omega);
    const TsPolynomial Ta = compute_Ts(k, n, omega, prime);
    const TsPolynomial Tb = a == 1 ? trivial_Ts(Ta.params) : compute_Ts(k, n, omega, prime.with_precision(a - 1));
    const Integer m = prime.modulus();
    const ModRing ring(m);
    auto to_mod = [&](const ZPoly& f) {
        auto c = f.coeffs();
        return ModPoly(ring, std::vector<Integer>(c.begin(), c.end()));
    };
    const TruncSeries<ModRing> num(to_mod(truncated_frobenius_product(Ta.signed_poly, p, 0, Dmax)), Dmax);
    const TruncSeries<ModRing> den(to_mod(truncated_frobenius_product(Tb.signed_poly, p, 1, Dmax)), Dmax);
    const TruncSeries<ModRing> v = num * den.inverse();
    PadicVertex out{k, n, omega, p, a, {}};
    for (long d = 0; d <= Dmax; ++d) out.coeffs.push_back(v.coeff(static_cast<std::size_t>(d)));
    return out;
}

/// Rational vertex coefficients reduced into Z/p^a.
inline std::vector<Integer> reduce_vertex(const VertexSeries& v, std::uint64_t p, unsigned a) {
    std::vector<Integer> out;
    for (const auto& c : v.coeffs) out.push_back(reduce_rational_mod(c, p, a).value());
    return out;
}

/**
 * v_p(c_{s,m} - c_m) for s = 1..S, where c_{s,m} are signed T_s coefficients.
 * nullopt stands for an exact match (infinite valuation).
 */
inline std::vector<std::optional<long>> padic_distance_profile(std::span<const TsPolynomial> Ts, const VertexSeries& v, std::size_t m) {
    if (m >= v.coeffs.size()) throw precondition_error("padic_distance_profile: vertex series too short");
    std::vector<std::optional<long>> out;
    for (std::size_t s = 1; s < Ts.size(); ++s) {
        const Rational diff = Rational(Ts[s].signed_poly.coeff(m)) - v.coeffs[m];
        if (is_zero(diff)) out.push_back(std::nullopt);
        else out.push_back(padic_valuation(diff, Ts[s].params.p));
    }
    return out;
}

}  // namespace pvx
