#pragma once

/**
 * @file quiver.hpp
 * @brief The framed A_{n-1} mirror quiver of T*Gr(k,n) and the factor lists
 * of its superpotentials.
 *
 * Variables are x_{i,j} with vertex 1 <= i <= n-1 and slot 1 <= j <= v_i.
 * Framings sit at vertices k and n-k (both at k when n = 2k); the first is
 * specialized to z, the second to 1.
 *
 * Binomial factors are stored in the orientation of the integer
 * superpotential: (x_{m,j} - x_{m,i}) for i < j, (x_{i,a} - x_{i+1,b}),
 * (z - x_{k,i}) and (1 - x_{n-k,i}).
 */

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstdint>
#include <string>
#include <vector>

#include "pvx/errors.hpp"
#include "pvx/numeric.hpp"
#include "pvx/padic.hpp"

namespace pvx {

struct VarIndex {
    int vertex;
    int slot;
    auto operator<=>(const VarIndex&) const = default;
    std::string str() const { return "x" + std::to_string(vertex) + "," + std::to_string(slot); }
};

class QuiverModel {
public:
    QuiverModel(int k, int n) : k_(k), n_(n) {
        if (k < 1) throw precondition_error("quiver: k must be >= 1");
        if (n < 2 * k) throw precondition_error("quiver: n must satisfy n >= 2k");
        for (int i = 1; i <= n - 1; ++i) {
            int v = i < k ? i : (i <= n - k ? k : n - i);
            dims_.push_back(v);
            for (int j = 1; j <= v; ++j) vars_.push_back({i, j});
        }
    }

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    /// v_i for 1 <= i <= n-1.
    int dim(int vertex) const { return dims_.at(static_cast<std::size_t>(vertex - 1)); }
    const std::vector<int>& dims() const noexcept { return dims_; }
    /// Variables in natural (vertex, slot) order; this fixes the variable numbering.
    const std::vector<VarIndex>& variables() const noexcept { return vars_; }
    std::size_t num_variables() const noexcept { return vars_.size(); }

    int index_of(VarIndex x) const {
        auto it = std::find(vars_.begin(), vars_.end(), x);
        if (it == vars_.end()) throw precondition_error("quiver: no variable " + x.str());
        return static_cast<int>(it - vars_.begin());
    }

    /// |i - k| + 2j - 1
    int eps_rank(VarIndex x) const { return std::abs(x.vertex - k_) + 2 * x.slot - 1; }

    int framing_z_vertex() const noexcept { return k_; }
    int framing_one_vertex() const noexcept { return n_ - k_; }

private:
    int k_;
    int n_;
    std::vector<int> dims_;
    std::vector<VarIndex> vars_;
};

inline QuiverModel build_quiver(int k, int n) { return QuiverModel(k, n); }

/// Variables by ascending eps rank, ties broken by smaller vertex index.
inline std::vector<VarIndex> eps_order(const QuiverModel& model) {
    auto out = model.variables();
    std::stable_sort(out.begin(), out.end(), [&](const VarIndex& a, const VarIndex& b) {
        const int ra = model.eps_rank(a), rb = model.eps_rank(b);
        if (ra != rb) return ra < rb;
        return a.vertex < b.vertex;
    });
    return out;
}

enum class FactorKind { monomial, vandermonde, chain, framing_z, framing_one };

inline const char* to_string(FactorKind k) {
    switch (k) {
        case FactorKind::monomial: return "monomial";
        case FactorKind::vandermonde: return "vandermonde";
        case FactorKind::chain: return "chain";
        case FactorKind::framing_z: return "framing_z";
        case FactorKind::framing_one: return "framing_one";
    }
    return "?";
}

/// A factor operand: a variable, z, or the constant 1, raised to `power`.
struct Operand {
    enum class Kind { variable, z, one };
    Kind kind = Kind::one;
    int var = -1;
    unsigned long power = 1;

    static Operand variable(int index, unsigned long power = 1) { return {Kind::variable, index, power}; }
    static Operand z(unsigned long power = 1) { return {Kind::z, -1, power}; }
    static Operand one() { return {Kind::one, -1, 1}; }

    bool is_variable() const noexcept { return kind == Kind::variable; }
    bool operator==(const Operand&) const = default;
};

/// Monomial factors use lhs only: lhs^exponent. Binomials are (lhs - rhs)^exponent.
template <class Exponent>
struct Factor {
    FactorKind kind;
    Operand lhs;
    Operand rhs;
    Exponent exponent;
};

using IntFactor = Factor<unsigned long>;

struct FactorList {
    std::size_t num_variables = 0;
    std::vector<IntFactor> factors;
    /// Global sign multiplying the product (used by specializations such as z = 0).
    int sign = 1;
};

/// Exponents of the integer superpotential for given omega and p^s.
struct PhiSExponents {
    unsigned long monomial;     // A = (p^s-1)(q-r)/q
    unsigned long vandermonde;  // B + 1 with B = (p^s-1)(q-2r)/q, B even
    unsigned long chain;        // C = (p^s-1)r/q, also on framing binomials
};

inline PhiSExponents phi_s_exponents(const OmegaParam& omega, const PrimeData& prime) {
    const Integer ps1 = ipow(prime.p(), prime.s()) - 1;
    const Integer q(omega.q()), r(omega.r());
    auto exact = [&](const Integer& num) -> unsigned long {
        if (!divides(q, num)) throw precondition_error("p must be an odd prime with p ≡ 1 mod q");
        Integer v = num / q;
        if (!v.fits_ulong_p()) throw precondition_error("superpotential exponent too large");
        return v.get_ui();
    };
    PhiSExponents e{exact(ps1 * (q - r)), exact(ps1 * (q - 2 * r)) + 1, exact(ps1 * r)};
    return e;
}

namespace detail {

// Emits the factor skeleton; exponent values are supplied per kind.
template <class Exponent, class Fn>
void for_each_factor(const QuiverModel& model, Fn&& emit, const Exponent& mono, const Exponent& vdm,
                     const Exponent& chain, const Exponent& framing) {
    const int n = model.n(), k = model.k();
    for (std::size_t i = 0; i < model.num_variables(); ++i)
        emit(Factor<Exponent>{FactorKind::monomial, Operand::variable(static_cast<int>(i)), Operand::one(), mono});
    for (int m = 1; m <= n - 1; ++m)
        for (int i = 1; i <= model.dim(m); ++i)
            for (int j = i + 1; j <= model.dim(m); ++j)
                emit(Factor<Exponent>{FactorKind::vandermonde, Operand::variable(model.index_of({m, j})),
                                      Operand::variable(model.index_of({m, i})), vdm});
    for (int i = 1; i <= n - 2; ++i)
        for (int a = 1; a <= model.dim(i); ++a)
            for (int b = 1; b <= model.dim(i + 1); ++b)
                emit(Factor<Exponent>{FactorKind::chain, Operand::variable(model.index_of({i, a})),
                                      Operand::variable(model.index_of({i + 1, b})), chain});
    for (int i = 1; i <= k; ++i) {
        emit(Factor<Exponent>{FactorKind::framing_z, Operand::z(),
                              Operand::variable(model.index_of({model.framing_z_vertex(), i})), framing});
        emit(Factor<Exponent>{FactorKind::framing_one, Operand::one(),
                              Operand::variable(model.index_of({model.framing_one_vertex(), i})), framing});
    }
}

}  // namespace detail

/// Factors of Phi_s = Delta * bar-Phi^{1-p^s}.
inline FactorList factor_list_phi_s(const QuiverModel& model, const OmegaParam& omega, const PrimeData& prime) {
    const auto e = phi_s_exponents(omega, prime);
    FactorList list;
    list.num_variables = model.num_variables();
    detail::for_each_factor<unsigned long>(
        model, [&](IntFactor f) { list.factors.push_back(f); }, e.monomial, e.vandermonde, e.chain, e.chain);
    return list;
}

/// Factors of bar-Phi_s = bar-Phi^{1-p^s} (no Vandermonde Delta).
inline FactorList factor_list_phi_bar_s(const QuiverModel& model, const OmegaParam& omega, const PrimeData& prime) {
    const auto e = phi_s_exponents(omega, prime);
    FactorList list;
    list.num_variables = model.num_variables();
    detail::for_each_factor<unsigned long>(
        model,
        [&](IntFactor f) {
            if (f.exponent != 0) list.factors.push_back(f);
        },
        e.monomial, e.vandermonde - 1, e.chain, e.chain);
    return list;
}

/// f(x^p, z^p): every operand power multiplied by p.
inline FactorList frobenius_twist(FactorList list, unsigned long p) {
    for (auto& f : list.factors) {
        if (f.lhs.kind != Operand::Kind::one) f.lhs.power *= p;
        if (f.rhs.kind != Operand::Kind::one) f.rhs.power *= p;
    }
    return list;
}

/// Product of two factor lists over the same variables.
inline FactorList concat(FactorList a, const FactorList& b) {
    if (a.num_variables != b.num_variables) throw precondition_error("concat: factor lists over different variables");
    a.factors.insert(a.factors.end(), b.factors.begin(), b.factors.end());
    a.sign *= b.sign;
    return a;
}

/// Phi_s at z = 0: each (z - x)^C becomes (-1)^C x^C.
inline FactorList specialize_z_zero(FactorList list) {
    for (auto& f : list.factors) {
        if (f.kind != FactorKind::framing_z) continue;
        if (f.exponent % 2 == 1) list.sign = -list.sign;
        f.kind = FactorKind::monomial;
        f.lhs = f.rhs;
        f.rhs = Operand::one();
    }
    return list;
}

/// Exponent vector x^{d p^s - 1} with d^{(i)}_j = j.
struct TargetMonomial {
    std::vector<unsigned long> exponents;
};

inline TargetMonomial make_target(const QuiverModel& model, const PrimeData& prime) {
    const Integer ps = ipow(prime.p(), prime.s());
    TargetMonomial t;
    for (const auto& x : model.variables()) {
        Integer e = Integer(x.slot) * ps - 1;
        if (!e.fits_ulong_p()) throw precondition_error("target exponent too large");
        t.exponents.push_back(e.get_ui());
    }
    return t;
}

/// Target x^{u p^s - 1} for an arbitrary positive degree vector u (natural variable order).
inline TargetMonomial make_target(const std::vector<unsigned long>& u, const PrimeData& prime) {
    const Integer ps = ipow(prime.p(), prime.s());
    TargetMonomial t;
    for (auto ui : u) {
        if (ui == 0) throw precondition_error("target degree vector entries must be positive");
        Integer e = Integer(ui) * ps - 1;
        t.exponents.push_back(e.get_ui());
    }
    return t;
}

/**
 * Number of binomials that pick up a sign when the variable of lower eps rank
 * is set to zero in the z = 0 cascade: chain factors whose first operand has
 * the lower rank, plus the k framing factors (z - x_{k,i}). For k = 1 this is n - 1.
 */
inline int reversed_orientation_count(const QuiverModel& model) {
    int count = model.k();
    for (int i = 1; i <= model.n() - 2; ++i)
        for (int a = 1; a <= model.dim(i); ++a)
            for (int b = 1; b <= model.dim(i + 1); ++b)
                if (model.eps_rank({i, a}) < model.eps_rank({i + 1, b})) ++count;
    return count;
}

/// Number of chain factors (x_{i,a} - x_{i+1,b}); mirroring i -> n-i reverses each of them.
inline int chain_factor_count(const QuiverModel& model) {
    int count = 0;
    for (int i = 1; i <= model.n() - 2; ++i) count += model.dim(i) * model.dim(i + 1);
    return count;
}

// --- rational superpotential -------------------------------------------------

enum class Branch { direct, reversed };

inline const char* to_string(Branch b) { return b == Branch::direct ? "direct" : "reversed"; }

/**
 * A factor of the rational superpotential with its branch on the torus
 * |x_{i,j}| = eps rank. small/large name the operands with |small| < |large|;
 * the branch series is large^e * sum_m binom(e,m) (-small/large)^m. "direct"
 * when the stored orientation is (large - small), "reversed" otherwise.
 */
struct BranchFactor {
    Factor<Rational> factor;
    Branch branch = Branch::direct;
    Operand small;
    Operand large;
};

namespace detail {

// z sits inside every circle, 1 outside.
inline int operand_rank(const QuiverModel& model, const Operand& o) {
    switch (o.kind) {
        case Operand::Kind::z: return 0;
        case Operand::Kind::one: return 1 << 20;
        case Operand::Kind::variable: return model.eps_rank(model.variables()[static_cast<std::size_t>(o.var)]);
    }
    return 0;
}

}  // namespace detail

inline std::vector<BranchFactor> factor_list_phi_rational(const QuiverModel& model, const OmegaParam& omega) {
    const Rational w = omega.value();
    std::vector<BranchFactor> out;
    detail::for_each_factor<Rational>(
        model,
        [&](Factor<Rational> f) {
            BranchFactor bf{f, Branch::direct, f.lhs, f.rhs};
            if (f.kind != FactorKind::monomial) {
                const int rl = detail::operand_rank(model, f.lhs), rr = detail::operand_rank(model, f.rhs);
                if (rl == rr) throw internal_error("branch: operands of equal eps rank share a factor");
                if (rl < rr) {
                    bf.small = f.lhs;
                    bf.large = f.rhs;
                    bf.branch = Branch::reversed;
                } else {
                    bf.small = f.rhs;
                    bf.large = f.lhs;
                    bf.branch = Branch::direct;
                }
            }
            out.push_back(bf);
        },
        Rational(-1) + w, Rational(2) * w, -w, -w);
    return out;
}

}  // namespace pvx
