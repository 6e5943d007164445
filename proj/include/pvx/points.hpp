#pragma once

/**
 * @file points.hpp
 * @brief F_p-point counts on y^2 = P(x, z) (k = 1, omega = 1/2) and on the
 * curves y^q = x^{q-r} (1-x)^r (z-x)^r, tied back to T_1.
 *
 * The T_1 used here is the plain coefficient of prod x^{p-1} in P^{(p-1)/q},
 * built from P as written, with no sign normalization.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvx/coeff_engine.hpp"
#include "pvx/errors.hpp"
#include "pvx/padic.hpp"
#include "pvx/quiver.hpp"

namespace pvx {

struct PointCountReport {
    std::string family;  // "hypersurface" or "curve"
    std::uint64_t p = 0;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t z0 = 0;
    Integer N;
    std::optional<Integer> N_naive;
    Integer T1_mod_p;  // unsigned T_1(z0) mod p
    std::optional<Integer> M;
    std::vector<Integer> A;
    std::uint64_t theta = 0;
    std::uint64_t zeta = 0;
    std::vector<std::pair<std::string, bool>> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.second) return false;
        return true;
    }
};

/// x_1 ... x_{n-1} (x_2 - x_1) ... (x_{n-1} - x_{n-2}) (1 - x_1) (z - x_{n-1}), to the power e.
inline FactorList hypersurface_factors(int n, unsigned long e) {
    if (n < 2) throw precondition_error("hypersurface family needs n >= 2");
    FactorList list;
    list.num_variables = static_cast<std::size_t>(n - 1);
    for (int i = 0; i < n - 1; ++i) list.factors.push_back({FactorKind::monomial, Operand::variable(i), Operand::one(), e});
    for (int i = 0; i + 1 < n - 1; ++i)
        list.factors.push_back({FactorKind::chain, Operand::variable(i + 1), Operand::variable(i), e});
    list.factors.push_back({FactorKind::framing_one, Operand::one(), Operand::variable(0), e});
    list.factors.push_back({FactorKind::framing_z, Operand::z(), Operand::variable(n - 2), e});
    return list;
}

/// x^{q-r} (1 - x)^r (z - x)^r, to the power ell.
inline FactorList curve_factors(long r, long q, unsigned long ell) {
    FactorList list;
    list.num_variables = 1;
    list.factors.push_back({FactorKind::monomial, Operand::variable(0), Operand::one(), static_cast<unsigned long>(q - r) * ell});
    list.factors.push_back({FactorKind::framing_one, Operand::one(), Operand::variable(0), static_cast<unsigned long>(r) * ell});
    list.factors.push_back({FactorKind::framing_z, Operand::z(), Operand::variable(0), static_cast<unsigned long>(r) * ell});
    return list;
}

/// Coefficient of prod x^{p-1} in a factor list, as a polynomial in z.
inline ZPoly raw_T1(const FactorList& list, std::uint64_t p) {
    TargetMonomial target{std::vector<unsigned long>(list.num_variables, static_cast<unsigned long>(p - 1))};
    return extract_coefficient(list, target);
}

namespace detail {

inline Integer hypersurface_P(std::span<const Integer> x, const Integer& z, const Integer& p) {
    const std::size_t m = x.size();
    Integer v(1);
    for (std::size_t i = 0; i < m; ++i) v *= x[i];
    for (std::size_t i = 0; i + 1 < m; ++i) v *= x[i + 1] - x[i];
    v *= 1 - x[0];
    v *= z - x[m - 1];
    return mod(v, p);
}

template <class Fn>
void for_each_point(std::size_t dim, std::uint64_t p, Fn fn) {
    std::vector<Integer> x(dim, Integer(0));
    const Integer pp(static_cast<unsigned long>(p));
    while (true) {
        fn(std::span<const Integer>(x));
        std::size_t i = 0;
        while (i < dim) {
            x[i] += 1;
            if (x[i] < pp) break;
            x[i] = 0;
            ++i;
        }
        if (i == dim) return;
    }
}

}  // namespace detail

/**
 * Counts (x, y) in F_p^n with y^2 = P(x, z0): one point when P = 0, 1 + chi(P)
 * otherwise. For n = 2 the pairs are also enumerated naively.
 */
inline PointCountReport count_hypersurface(int n, std::uint64_t p, std::uint64_t z0) {
    if (p < 3 || !is_prime(p)) throw precondition_error("p must be an odd prime");
    if (n < 2) throw precondition_error("hypersurface family needs n >= 2");
    const Integer pp(static_cast<unsigned long>(p)), z(static_cast<unsigned long>(z0 % p));
    PointCountReport r;
    r.family = "hypersurface";
    r.p = p;
    r.params = {{"n", std::to_string(n)}};
    r.z0 = z0 % p;
    Integer N(0);
    detail::for_each_point(static_cast<std::size_t>(n - 1), p, [&](std::span<const Integer> x) {
        const Integer P = detail::hypersurface_P(x, z, pp);
        N += is_zero(P) ? 1 : 1 + quadratic_character(P, p);
    });
    r.N = N;
    if (n == 2) {
        Integer naive(0);
        for (std::uint64_t x = 0; x < p; ++x) {
            const Integer xs[1] = {Integer(static_cast<unsigned long>(x))};
            const Integer P = detail::hypersurface_P(xs, z, pp);
            for (std::uint64_t y = 0; y < p; ++y)
                if (mod(Integer(static_cast<unsigned long>(y * y)) - P, pp) == 0) naive += 1;
        }
        r.N_naive = naive;
        r.checks.emplace_back("naive_count", naive == N);
    }
    const ZPoly T1 = raw_T1(hypersurface_factors(n, (p - 1) / 2), p);
    r.T1_mod_p = mod(T1.evaluate(z), pp);
    const Integer rhs = (n - 1) % 2 == 0 ? r.T1_mod_p : Integer(-r.T1_mod_p);
    r.checks.emplace_back("N = (-1)^(n-1) T1 mod p", divides(pp, Integer(N - rhs)));
    return r;
}

/**
 * Curve y^q = x^{q-r}(1-x)^r(z0-x)^r for z0 not in {0, 1}. Checks N = 3 + qM,
 * the decomposition of -T_1(z0) over q-th roots of unity, sum A_i = p - 3 and
 * N = 3 + q A_0. theta = 0 selects the smallest generator.
 */
inline PointCountReport count_curve(long r, long q, std::uint64_t p, std::uint64_t z0, std::uint64_t theta = 0) {
    const OmegaParam omega(r, q);
    if (omega.r() != r || omega.q() != q) throw precondition_error("curve family needs gcd(r, q) = 1");
    const PrimeData prime(p, 1, omega);
    z0 %= p;
    if (z0 == 0 || z0 == 1) throw precondition_error("curve family needs z0 outside {0, 1}");
    const Integer pp(static_cast<unsigned long>(p)), z(static_cast<unsigned long>(z0));
    const unsigned long ell = prime.ell();

    PointCountReport rep;
    rep.family = "curve";
    rep.p = p;
    rep.params = {{"r", std::to_string(r)}, {"q", std::to_string(q)}};
    rep.z0 = z0;
    rep.theta = theta == 0 ? find_generator(p) : theta;
    if (theta != 0 && !is_generator(theta, p)) throw precondition_error("theta is not a generator of F_p^x");
    const Integer zeta = powmod(Integer(static_cast<unsigned long>(rep.theta)), Integer(ell), pp);
    rep.zeta = zeta.get_ui();

    auto P = [&](const Integer& x) {
        return mod(powmod(x, Integer(static_cast<unsigned long>(q - r)), pp) *
                       powmod(mod(1 - x, pp), Integer(static_cast<unsigned long>(r)), pp) *
                       powmod(mod(z - x, pp), Integer(static_cast<unsigned long>(r)), pp),
                   pp);
    };

    Integer N(0), M(0);
    rep.A.assign(static_cast<std::size_t>(q), Integer(0));
    std::vector<Integer> roots;
    for (long i = 0; i < q; ++i) roots.push_back(powmod(zeta, Integer(i), pp));
    Integer fourier(0);
    bool roots_only = true;
    for (std::uint64_t t = 0; t < p; ++t) {
        const Integer x(static_cast<unsigned long>(t));
        const Integer v = P(x);
        for (std::uint64_t y = 0; y < p; ++y)
            if (powmod(Integer(static_cast<unsigned long>(y)), Integer(static_cast<unsigned long>(q)), pp) == v) N += 1;
        const Integer phi = powmod(v, Integer(ell), pp);
        if (phi == 1) M += 1;
        if (t == 0 || t == 1 || t == z0) continue;
        auto it = std::find(roots.begin(), roots.end(), phi);
        if (it == roots.end()) {
            roots_only = false;
            continue;
        }
        rep.A[static_cast<std::size_t>(it - roots.begin())] += 1;
        fourier += phi;
    }
    rep.N = N;
    rep.M = M;
    const ZPoly T1 = raw_T1(curve_factors(r, q, ell), p);
    rep.T1_mod_p = mod(T1.evaluate(z), pp);
    Integer sumA(0);
    for (const auto& a : rep.A) sumA += a;
    rep.checks.emplace_back("values are q-th roots of unity", roots_only);
    rep.checks.emplace_back("N = 3 + qM", N == 3 + q * M);
    rep.checks.emplace_back("N = 3 + qA_0", N == 3 + q * rep.A[0]);
    rep.checks.emplace_back("A_0 = M", rep.A[0] == M);
    rep.checks.emplace_back("sum A_i = p - 3", sumA == Integer(static_cast<unsigned long>(p - 3)));
    rep.checks.emplace_back("-T1 = sum A_i zeta^i mod p", divides(pp, Integer(-rep.T1_mod_p - fourier)));
    return rep;
}

/// (A_0, ..., A_{q-1}) for the given generator (0 = smallest).
inline std::vector<Integer> A_decomposition(long r, long q, std::uint64_t p, std::uint64_t z0, std::uint64_t theta = 0) {
    return count_curve(r, q, p, z0, theta).A;
}

}  // namespace pvx
