#pragma once

/**
 * @file coeff_engine.hpp
 * @brief Coefficient of a target x-monomial in a product of binomial powers,
 * without expanding the multivariate product.
 *
 * Variables are eliminated one at a time. The state is a sparse polynomial in
 * the not-yet-eliminated variables and z, keyed by a packed exponent vector.
 * Each factor is multiplied in only when its first variable is eliminated,
 * and every partial term is discarded as soon as some variable exponent either
 * exceeds its target or can no longer reach it with the factors that remain.
 * After all factors touching a variable are in, its exponent equals the target
 * and the variable drops out of the key.
 *
 * Coefficients are exact GMP integers throughout.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pvx/errors.hpp"
#include "pvx/numeric.hpp"
#include "pvx/padic.hpp"
#include "pvx/poly.hpp"
#include "pvx/quiver.hpp"

namespace pvx {

struct ExtractionPlan {
    std::vector<int> order;
    /// Factor indices multiplied in at each elimination step (monomials first).
    std::vector<std::vector<std::size_t>> steps;
    /// Factors without a variable operand, applied to the final z-polynomial.
    std::vector<std::size_t> tail;
    std::vector<unsigned long> targets;
};

enum class EliminationStrategy { eps, min_degree, natural };

namespace detail {

inline bool touches(const IntFactor& f, int v) {
    return (f.lhs.is_variable() && f.lhs.var == v) || (f.kind != FactorKind::monomial && f.rhs.is_variable() && f.rhs.var == v);
}

inline void validate_order(std::span<const int> order, std::size_t num_vars) {
    if (order.size() != num_vars) throw precondition_error("elimination order must list every variable once");
    std::vector<bool> seen(num_vars, false);
    for (int v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= num_vars || seen[static_cast<std::size_t>(v)])
            throw precondition_error("elimination order must list every variable once");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace detail

inline ExtractionPlan make_plan(const FactorList& list, const TargetMonomial& target, std::span<const int> order) {
    if (target.exponents.size() != list.num_variables)
        throw precondition_error("target monomial and factor list disagree on the number of variables");
    detail::validate_order(order, list.num_variables);
    ExtractionPlan plan;
    plan.order.assign(order.begin(), order.end());
    plan.targets = target.exponents;
    std::vector<bool> used(list.factors.size(), false);
    for (int v : order) {
        std::vector<std::size_t> step;
        for (std::size_t i = 0; i < list.factors.size(); ++i)
            if (!used[i] && list.factors[i].kind == FactorKind::monomial && detail::touches(list.factors[i], v)) step.push_back(i);
        for (std::size_t i = 0; i < list.factors.size(); ++i)
            if (!used[i] && list.factors[i].kind != FactorKind::monomial && detail::touches(list.factors[i], v)) step.push_back(i);
        for (auto i : step) used[i] = true;
        plan.steps.push_back(std::move(step));
    }
    for (std::size_t i = 0; i < list.factors.size(); ++i)
        if (!used[i]) plan.tail.push_back(i);
    return plan;
}

/// Elimination order following the eps ranking of the quiver.
inline std::vector<int> eps_elimination_order(const QuiverModel& model) {
    std::vector<int> out;
    for (const auto& x : eps_order(model)) out.push_back(model.index_of(x));
    return out;
}

/// Greedy order: repeatedly eliminate the variable with the fewest live neighbours.
inline std::vector<int> min_degree_order(const FactorList& list) {
    const std::size_t nv = list.num_variables;
    std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
    for (const auto& f : list.factors) {
        if (f.kind == FactorKind::monomial || !f.lhs.is_variable() || !f.rhs.is_variable()) continue;
        adj[static_cast<std::size_t>(f.lhs.var)][static_cast<std::size_t>(f.rhs.var)] = true;
        adj[static_cast<std::size_t>(f.rhs.var)][static_cast<std::size_t>(f.lhs.var)] = true;
    }
    // Ties go to the variable carried by fewer binomial factors.
    std::vector<std::size_t> load(nv, 0);
    for (const auto& f : list.factors) {
        if (f.kind == FactorKind::monomial) continue;
        if (f.lhs.is_variable()) ++load[static_cast<std::size_t>(f.lhs.var)];
        if (f.rhs.is_variable()) ++load[static_cast<std::size_t>(f.rhs.var)];
    }
    std::vector<bool> done(nv, false);
    std::vector<int> order;
    for (std::size_t step = 0; step < nv; ++step) {
        std::size_t best = nv, best_deg = nv + 1;
        for (std::size_t v = 0; v < nv; ++v) {
            if (done[v]) continue;
            std::size_t deg = 0;
            for (std::size_t w = 0; w < nv; ++w)
                if (!done[w] && adj[v][w]) ++deg;
            if (deg < best_deg || (deg == best_deg && load[v] < load[best])) {
                best = v;
                best_deg = deg;
            }
        }
        done[best] = true;
        order.push_back(static_cast<int>(best));
        // Eliminating a vertex connects its live neighbours.
        for (std::size_t a = 0; a < nv; ++a)
            for (std::size_t b = 0; b < nv; ++b)
                if (a != b && !done[a] && !done[b] && adj[best][a] && adj[best][b]) adj[a][b] = true;
    }
    return order;
}

inline std::vector<int> natural_order(std::size_t num_vars) {
    std::vector<int> out(num_vars);
    for (std::size_t i = 0; i < num_vars; ++i) out[i] = static_cast<int>(i);
    return out;
}

namespace detail {

using Key = unsigned __int128;

struct KeyHash {
    static std::uint64_t mix(std::uint64_t x) noexcept {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    std::size_t operator()(Key k) const noexcept {
        return static_cast<std::size_t>(mix(static_cast<std::uint64_t>(k) ^ mix(static_cast<std::uint64_t>(k >> 64))));
    }
};

using State = std::unordered_map<Key, Integer, KeyHash>;

// Bit layout: one field per variable, then z.
struct KeyLayout {
    std::vector<unsigned> shift;
    std::vector<unsigned> width;

    unsigned long field(Key k, std::size_t slot) const {
        const Key mask = (Key(1) << width[slot]) - 1;
        return static_cast<unsigned long>((k >> shift[slot]) & mask);
    }
    Key place(unsigned long value, std::size_t slot) const { return Key(value) << shift[slot]; }
};

inline unsigned bits_for(unsigned long max_value) {
    return std::max(1u, static_cast<unsigned>(std::bit_width(max_value)));
}

// Exponent contribution of an operand to a given slot; z has slot == num_vars.
inline std::size_t slot_of(const Operand& o, std::size_t num_vars) {
    if (o.kind == Operand::Kind::variable) return static_cast<std::size_t>(o.var);
    if (o.kind == Operand::Kind::z) return num_vars;
    return static_cast<std::size_t>(-1);
}

// binom(e, j) * (-1)^{e-j}: coefficient of lhs^j (-rhs)^{e-j} in (lhs - rhs)^e.
inline std::vector<Integer> signed_binomial_row(unsigned long e) {
    std::vector<Integer> row(e + 1);
    Integer c(1);
    for (unsigned long j = 0; j <= e; ++j) {
        row[j] = ((e - j) % 2 == 0) ? c : Integer(-c);
        c = c * (e - j) / (j + 1);
    }
    return row;
}

}  // namespace detail

/**
 * Coefficient of x^target in the product, as a polynomial in z. The order is
 * the elimination sequence; the result does not depend on it.
 */
inline ZPoly extract_coefficient(const FactorList& list, const TargetMonomial& target, std::span<const int> order) {
    using namespace detail;
    const ExtractionPlan plan = make_plan(list, target, order);
    const std::size_t nv = list.num_variables;
    const std::size_t zslot = nv;
    const auto& t = plan.targets;

    // Max degree each slot can still receive from unconsumed factors.
    std::vector<unsigned long> remaining(nv + 1, 0);
    for (const auto& f : list.factors) {
        const std::size_t sl = slot_of(f.lhs, nv);
        if (sl != static_cast<std::size_t>(-1)) remaining[sl] += f.exponent * f.lhs.power;
        if (f.kind != FactorKind::monomial) {
            const std::size_t sr = slot_of(f.rhs, nv);
            if (sr != static_cast<std::size_t>(-1)) remaining[sr] += f.exponent * f.rhs.power;
        }
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (remaining[v] < t[v]) return ZPoly();

    KeyLayout layout;
    unsigned total = 0;
    for (std::size_t s = 0; s <= nv; ++s) {
        const unsigned w = bits_for(s < nv ? t[s] : remaining[zslot]);
        layout.shift.push_back(total);
        layout.width.push_back(w);
        total += w;
    }
    if (total > 128) throw precondition_error("extract_coefficient: exponent vector does not fit the packed key");

    State state;
    state.emplace(Key(0), Integer(list.sign));

    auto upper = [&](std::size_t slot) -> unsigned long { return slot < nv ? t[slot] : ~0UL; };

    for (std::size_t step = 0; step < plan.steps.size(); ++step) {
        for (std::size_t fi : plan.steps[step]) {
            const IntFactor& f = list.factors[fi];
            const unsigned long e = f.exponent;
            const bool binomial = f.kind != FactorKind::monomial;
            const std::size_t sl = slot_of(f.lhs, nv);
            const std::size_t sr = binomial ? slot_of(f.rhs, nv) : static_cast<std::size_t>(-1);
            const unsigned long pl = f.lhs.power, pr = binomial ? f.rhs.power : 0;
            constexpr std::size_t none = static_cast<std::size_t>(-1);
            if (sl != none) remaining[sl] -= e * pl;
            if (sr != none) remaining[sr] -= e * pr;

            State next;
            next.reserve(state.size() * 2);
            if (!binomial) {
                for (auto& [key, c] : state) {
                    unsigned long cur = sl == none ? 0 : layout.field(key, sl);
                    if (sl != none) {
                        const unsigned long ne = cur + e * pl;
                        if (ne > upper(sl) || (sl < nv && ne + remaining[sl] < t[sl])) continue;
                        next.emplace(key + layout.place(e * pl, sl), std::move(c));
                    } else {
                        next.emplace(key, std::move(c));
                    }
                }
                state = std::move(next);
                continue;
            }

            const auto row = signed_binomial_row(e);
            for (const auto& [key, c] : state) {
                // j copies of lhs, e - j copies of -rhs.
                long long jlo = 0, jhi = static_cast<long long>(e);
                if (sl != none && sl < nv) {
                    const long long cur = static_cast<long long>(layout.field(key, sl));
                    const long long tl = static_cast<long long>(t[sl]);
                    const long long rem = static_cast<long long>(remaining[sl]);
                    const long long ppl = static_cast<long long>(pl);
                    // cur + j*pl <= tl  and  cur + j*pl + rem >= tl
                    if (cur > tl) continue;
                    jhi = std::min(jhi, (tl - cur) / ppl);
                    const long long need = tl - cur - rem;
                    if (need > 0) jlo = std::max(jlo, (need + ppl - 1) / ppl);
                }
                if (sr != none && sr < nv) {
                    const long long cur = static_cast<long long>(layout.field(key, sr));
                    const long long tr = static_cast<long long>(t[sr]);
                    const long long rem = static_cast<long long>(remaining[sr]);
                    const long long ppr = static_cast<long long>(pr);
                    const long long ee = static_cast<long long>(e);
                    // cur + (e-j)*pr <= tr  =>  j >= e - (tr-cur)/pr
                    if (cur > tr) continue;
                    jlo = std::max(jlo, ee - (tr - cur) / ppr);
                    // cur + (e-j)*pr + rem >= tr  =>  j <= e - ceil((tr-cur-rem)/pr)
                    const long long need = tr - cur - rem;
                    if (need > 0) jhi = std::min(jhi, ee - (need + ppr - 1) / ppr);
                }
                for (long long j = jlo; j <= jhi; ++j) {
                    Key nk = key;
                    if (sl != none) nk += layout.place(static_cast<unsigned long>(j) * pl, sl);
                    if (sr != none) nk += layout.place((e - static_cast<unsigned long>(j)) * pr, sr);
                    Integer& slot = next[nk];
                    mpz_addmul(slot.get_mpz_t(), c.get_mpz_t(), row[static_cast<std::size_t>(j)].get_mpz_t());
                }
            }
            std::erase_if(next, [](const auto& kv) { return sgn(kv.second) == 0; });
            state = std::move(next);
        }
        // The eliminated variable now sits exactly at its target; drop it from the key.
        const auto v = static_cast<std::size_t>(plan.order[step]);
        State next;
        next.reserve(state.size());
        for (auto& [key, c] : state) {
            if (layout.field(key, v) != t[v]) continue;
            next.emplace(key - layout.place(t[v], v), std::move(c));
        }
        state = std::move(next);
    }

    unsigned long maxz = 0;
    for (const auto& kv : state) maxz = std::max(maxz, layout.field(kv.first, zslot));
    std::vector<Integer> coeffs(state.empty() ? 0 : maxz + 1, Integer(0));
    for (const auto& [key, c] : state) coeffs[layout.field(key, zslot)] += c;
    ZPoly result(IntegerRing{}, std::move(coeffs));

    for (std::size_t fi : plan.tail) {
        const IntFactor& f = list.factors[fi];
        auto as_poly = [](const Operand& o) {
            if (o.kind == Operand::Kind::z) return ZPoly::monomial(IntegerRing{}, Integer(1), o.power);
            if (o.kind == Operand::Kind::one) return ZPoly::constant(IntegerRing{}, Integer(1));
            throw internal_error("tail factor with a variable operand");
        };
        ZPoly base = f.kind == FactorKind::monomial ? as_poly(f.lhs) : as_poly(f.lhs) - as_poly(f.rhs);
        ZPoly acc = ZPoly::constant(IntegerRing{}, Integer(1));
        for (unsigned long i = 0; i < f.exponent; ++i) acc *= base;
        result *= acc;
    }
    return result;
}

inline ZPoly extract_coefficient(const FactorList& list, const TargetMonomial& target) {
    const auto order = min_degree_order(list);
    return extract_coefficient(list, target, order);
}

// --- T_s -----------------------------------------------------------------------

/// Parameters shared by a family T_0, T_1, ... of approximations.
struct TsParams {
    int k;
    int n;
    OmegaParam omega;
    std::uint64_t p;
    bool operator==(const TsParams&) const = default;
};

inline std::string describe(const TsParams& params) {
    return "k=" + std::to_string(params.k) + " n=" + std::to_string(params.n) + " omega=" + params.omega.str() +
           " p=" + std::to_string(params.p);
}

struct TsPolynomial {
    TsParams params;
    unsigned s = 0;
    ZPoly signed_poly;    // normalized so that T_s(0) = 1
    ZPoly unsigned_poly;  // raw coefficient of x^{d p^s - 1} in Phi_s
    int sign = 1;         // signed_poly = sign * unsigned_poly

    /// (p^s - 1) k r / q
    unsigned long expected_degree() const {
        Integer d = (ipow(params.p, s) - 1) * params.k * params.omega.r() / params.omega.q();
        return d.get_ui();
    }
};

enum class Convention { signed_T, unsigned_T };

inline const ZPoly& poly_of(const TsPolynomial& t, Convention c) {
    return c == Convention::signed_T ? t.signed_poly : t.unsigned_poly;
}

inline std::vector<int> elimination_order(const QuiverModel& model, const FactorList& list, EliminationStrategy strategy) {
    switch (strategy) {
        case EliminationStrategy::eps: return eps_elimination_order(model);
        case EliminationStrategy::min_degree: return min_degree_order(list);
        case EliminationStrategy::natural: return natural_order(list.num_variables);
    }
    return natural_order(list.num_variables);
}

/// (-1)^{C N}: the sign predicted by counting reversed orientations.
inline int predicted_sign(const QuiverModel& model, const OmegaParam& omega, const PrimeData& prime) {
    const auto e = phi_s_exponents(omega, prime);
    const unsigned long cn = e.chain * static_cast<unsigned long>(reversed_orientation_count(model));
    return cn % 2 == 0 ? 1 : -1;
}

/**
 * epsilon in z^D T_s(1/z) = epsilon T_s(z). Exchanging z and 1 mirrors the
 * quiver and reverses every chain factor, so epsilon = (-1)^{C E} with E the
 * number of chain factors. Strict palindromy holds only when C E is even.
 */
inline int reflection_sign(const QuiverModel& model, const OmegaParam& omega, const PrimeData& prime) {
    const auto e = phi_s_exponents(omega, prime);
    return (e.chain * static_cast<unsigned long>(chain_factor_count(model))) % 2 == 0 ? 1 : -1;
}

/// z^D f(1/z) = epsilon f(z) with D = expected degree.
inline bool is_reflection_symmetric(const ZPoly& f, long degree, int epsilon) {
    if (f.degree() != degree) return false;
    for (long i = 0; i <= degree; ++i)
        if (f.coeff(static_cast<std::size_t>(degree - i)) != epsilon * f.coeff(static_cast<std::size_t>(i))) return false;
    return true;
}

/// Coefficient of the target in Phi_s(x, 0), extracted on its own; always +-1.
inline int sign_at_zero(const QuiverModel& model, const OmegaParam& omega, const PrimeData& prime,
                        EliminationStrategy strategy = EliminationStrategy::eps) {
    const FactorList list = specialize_z_zero(factor_list_phi_s(model, omega, prime));
    const ZPoly c = extract_coefficient(list, make_target(model, prime), elimination_order(model, list, strategy));
    if (c.degree() != 0 || (c.coeff(0) != 1 && c.coeff(0) != -1))
        throw internal_error("z = 0 coefficient is not +-1 for " + std::to_string(model.k()) + "," + std::to_string(model.n()));
    return c.coeff(0) == 1 ? 1 : -1;
}

inline TsPolynomial trivial_Ts(const TsParams& params) {
    TsPolynomial t{params, 0, ZPoly::constant(IntegerRing{}, Integer(1)), ZPoly::constant(IntegerRing{}, Integer(1)), 1};
    return t;
}

inline TsPolynomial compute_Ts(int k, int n, const OmegaParam& omega, const PrimeData& prime,
                               EliminationStrategy strategy = EliminationStrategy::min_degree) {
    const QuiverModel model(k, n);
    const FactorList list = factor_list_phi_s(model, omega, prime);
    TsPolynomial t{TsParams{k, n, omega, prime.p()}, prime.s(), ZPoly(), ZPoly(), 1};
    t.unsigned_poly = extract_coefficient(list, make_target(model, prime), elimination_order(model, list, strategy));
    t.sign = sign_at_zero(model, omega, prime);
    if (t.unsigned_poly.coeff(0) != t.sign)
        throw internal_error("constant term of T_s disagrees with the z = 0 extraction");
    t.signed_poly = Integer(t.sign) * t.unsigned_poly;
    return t;
}

/// T_0, ..., T_smax for one parameter set.
inline std::vector<TsPolynomial> compute_Ts_family(int k, int n, const OmegaParam& omega, std::uint64_t p, unsigned smax,
                                                   EliminationStrategy strategy = EliminationStrategy::min_degree) {
    std::vector<TsPolynomial> out;
    out.push_back(trivial_Ts(TsParams{k, n, omega, p}));
    for (unsigned s = 1; s <= smax; ++s) out.push_back(compute_Ts(k, n, omega, PrimeData(p, s, omega), strategy));
    return out;
}

/// Evaluates the product encoded by a factor list at a point of F_p (or Z/m).
inline Integer evaluate_factor_list(const FactorList& list, std::span<const Integer> x, const Integer& z, const Integer& m) {
    auto value = [&](const Operand& o) -> Integer {
        switch (o.kind) {
            case Operand::Kind::variable: return powmod(x[static_cast<std::size_t>(o.var)], Integer(o.power), m);
            case Operand::Kind::z: return powmod(z, Integer(o.power), m);
            case Operand::Kind::one: return Integer(1);
        }
        return Integer(0);
    };
    Integer acc = mod(Integer(list.sign), m);
    for (const auto& f : list.factors) {
        Integer base = f.kind == FactorKind::monomial ? value(f.lhs) : Integer(value(f.lhs) - value(f.rhs));
        acc = mod(acc * powmod(mod(base, m), Integer(f.exponent), m), m);
    }
    return acc;
}

/**
 * -sum_{t in F_p^{n-1}} Phi_1(t, z0) mod p for the k = 1 family. Equals
 * (-1)^n times the unsigned T_1(z0) mod p.
 */
inline Integer fp_sum_oracle(int k, int n, const OmegaParam& omega, std::uint64_t p, std::uint64_t z0) {
    if (k != 1) throw precondition_error("fp_sum_oracle is defined for k = 1 only");
    const QuiverModel model(k, n);
    const PrimeData prime(p, 1, omega);
    const FactorList list = factor_list_phi_s(model, omega, prime);
    const Integer pp(static_cast<unsigned long>(p));
    const std::size_t nv = model.num_variables();
    std::vector<Integer> t(nv, Integer(0));
    Integer sum(0);
    const Integer zz(static_cast<unsigned long>(z0 % p));
    while (true) {
        sum += evaluate_factor_list(list, t, zz, pp);
        std::size_t i = 0;
        while (i < nv) {
            t[i] += 1;
            if (t[i] < pp) break;
            t[i] = 0;
            ++i;
        }
        if (i == nv) break;
    }
    return mod(-sum, pp);
}

}  // namespace pvx
